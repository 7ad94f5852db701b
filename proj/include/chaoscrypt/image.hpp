#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chaoscrypt/mat.hpp"

namespace chaoscrypt {

// 8-bit raster, row-major, channels interleaved (1 = grayscale, 3 = RGB).
struct ImageBuffer {
  std::size_t width = 0;
  std::size_t height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;

  ImageBuffer() = default;
  ImageBuffer(std::size_t w, std::size_t h, int ch)
      : width(w), height(h), channels(ch), pixels(w * h * static_cast<std::size_t>(ch), 0) {}

  std::size_t sample_count() const {
    return width * height * static_cast<std::size_t>(channels);
  }

  std::uint8_t& at(std::size_t row, std::size_t col, int ch = 0) {
    return pixels[(row * width + col) * static_cast<std::size_t>(channels) +
                  static_cast<std::size_t>(ch)];
  }
  std::uint8_t at(std::size_t row, std::size_t col, int ch = 0) const {
    return pixels[(row * width + col) * static_cast<std::size_t>(channels) +
                  static_cast<std::size_t>(ch)];
  }

  bool operator==(const ImageBuffer&) const = default;
};

inline ImageBuffer extract_channel(const ImageBuffer& img, int ch) {
  if (ch < 0 || ch >= img.channels)
    throw std::invalid_argument("extract_channel: channel out of range");
  ImageBuffer out(img.width, img.height, 1);
  const std::size_t stride = static_cast<std::size_t>(img.channels);
  for (std::size_t i = 0; i < img.width * img.height; ++i)
    out.pixels[i] = img.pixels[i * stride + static_cast<std::size_t>(ch)];
  return out;
}

inline void insert_channel(ImageBuffer& img, const ImageBuffer& plane, int ch) {
  if (plane.channels != 1 || plane.width != img.width || plane.height != img.height)
    throw std::invalid_argument("insert_channel: plane shape mismatch");
  if (ch < 0 || ch >= img.channels)
    throw std::invalid_argument("insert_channel: channel out of range");
  const std::size_t stride = static_cast<std::size_t>(img.channels);
  for (std::size_t i = 0; i < img.width * img.height; ++i)
    img.pixels[i * stride + static_cast<std::size_t>(ch)] = plane.pixels[i];
}

inline ByteMatrix to_matrix(const ImageBuffer& gray) {
  if (gray.channels != 1)
    throw std::invalid_argument("to_matrix: grayscale image expected");
  ByteMatrix m(gray.height, gray.width);
  m.data() = gray.pixels;
  return m;
}

inline ImageBuffer from_matrix(const ByteMatrix& m) {
  ImageBuffer img(m.cols(), m.rows(), 1);
  img.pixels = m.data();
  return img;
}

}  // namespace chaoscrypt
