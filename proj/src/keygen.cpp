#include "chaoscrypt/keygen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace chaoscrypt {

namespace {

void check_params(double r, double r0) {
  if (!(r > 0.0 && r <= 1.2))
    throw std::invalid_argument("keygen: r must lie in (0, 1.2]");
  if (!(r0 >= 0.0 && r0 < 4.0))
    throw std::invalid_argument("keygen: r0 must lie in [0, 4)");
}

}  // namespace

KeyMaterial keygen_gray(const ImageBuffer& image, double r, double r0,
                        const ChaosConfig& cfg) {
  if (image.channels != 1)
    throw std::invalid_argument("keygen_gray: grayscale image expected");
  check_params(r, r0);
  const std::size_t nm = image.width * image.height;
  if (nm < 16)
    throw std::invalid_argument("keygen_gray: image must have at least 16 pixels");

  const std::size_t r1 =
      static_cast<std::size_t>(std::floor(r0 * 1000.0)) % nm;
  std::vector<std::uint8_t> rotated(nm);
  for (std::size_t j = 0; j < nm; ++j)
    rotated[(j + r1) % nm] = image.pixels[j];

  ChaosState seed{rotated[0] / 256.0, rotated[1] / 256.0, rotated[2] / 256.0,
                  rotated[3] / 256.0};
  ChaosState q = step(seed, r, cfg);
  for (std::size_t i = 7; i <= nm; i += 3) {
    const double folded = wrap_unit((q.y + q.z + q.w) / 3.0 + q.x);
    ChaosState reseed{folded, rotated[i - 3] / 256.0, rotated[i - 2] / 256.0,
                      rotated[i - 1] / 256.0};
    q = step(reseed, r, cfg);
  }
  return {r, r0, q};
}

KeyMaterial keygen_color(const ImageBuffer& image, double r, double r0,
                         const ChaosConfig& cfg) {
  if (image.channels != 3)
    throw std::invalid_argument("keygen_color: three-channel image expected");
  check_params(r, r0);
  const std::size_t n = image.height;
  const std::size_t row_shift =
      static_cast<std::size_t>(std::floor(r0 * 1000.0)) % n;

  KeyMaterial keys[3];
  ImageBuffer slice(image.width, image.height, 1);
  for (int layer = 0; layer < 3; ++layer) {
    for (std::size_t row = 0; row < n; ++row) {
      const std::size_t src = (row + n - row_shift) % n;
      for (std::size_t col = 0; col < image.width; ++col)
        slice.at(row, col) = image.at(src, col, layer);
    }
    keys[layer] = keygen_gray(slice, r, r0, cfg);
  }

  KeyMaterial out;
  out.r = r;
  out.r0 = (keys[0].r0 + keys[1].r0 + keys[2].r0) / 3.0;
  for (int c = 0; c < 4; ++c)
    out.q.set_comp(c, (keys[0].q.comp(c) + keys[1].q.comp(c) +
                       keys[2].q.comp(c)) / 3.0);
  return out;
}

double draw_r0() {
  std::random_device rd;
  std::uint64_t bits = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  // 53 uniform bits -> [0,1), scaled to [0,4)
  const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
  return 4.0 * unit;
}

}  // namespace chaoscrypt
