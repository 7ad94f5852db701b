#include "chaoscrypt/pnm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace chaoscrypt {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

// Reads one whitespace-separated header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

std::size_t parse_dim(const std::string& tok, const std::string& path,
                      const char* what) {
  if (tok.empty()) fail(path, std::string("truncated header (missing ") + what + ")");
  std::size_t value = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(path, std::string("malformed ") + what + " '" + tok + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1000000000)
      fail(path, std::string(what) + " out of range");
  }
  if (value == 0) fail(path, std::string(what) + " must be positive");
  return value;
}

}  // namespace

ImageBuffer read_pnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");

  const std::string magic = next_token(in);
  int channels = 0;
  if (magic == "P5") channels = 1;
  else if (magic == "P6") channels = 3;
  else fail(path, "unsupported PNM magic '" + magic + "' (binary P5/P6 only)");

  const std::size_t width = parse_dim(next_token(in), path, "width");
  const std::size_t height = parse_dim(next_token(in), path, "height");
  const std::size_t maxval = parse_dim(next_token(in), path, "maxval");
  if (maxval != 255)
    fail(path, "unsupported maxval " + std::to_string(maxval) + " (255 required)");
  // the single whitespace byte after maxval was consumed by the tokenizer

  ImageBuffer img(width, height, channels);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != img.pixels.size())
    fail(path, "truncated raster data");
  return img;
}

void write_pnm(const ImageBuffer& image, const std::string& path) {
  if (image.channels != 1 && image.channels != 3)
    throw std::invalid_argument("write_pnm: 1 or 3 channels required");
  if (image.pixels.size() != image.sample_count())
    throw std::invalid_argument("write_pnm: pixel buffer size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  out << (image.channels == 1 ? "P5" : "P6") << "\n"
      << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) fail(path, "write failed");
}

}  // namespace chaoscrypt
