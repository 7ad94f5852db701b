#include "chaoscrypt/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "chaoscrypt/cipher.hpp"

namespace chaoscrypt {

namespace {

void check_same_shape(const ImageBuffer& a, const ImageBuffer& b,
                      const char* who) {
  if (a.width != b.width || a.height != b.height || a.channels != b.channels)
    throw std::invalid_argument(std::string(who) + ": image shapes differ");
}

}  // namespace

std::optional<double> adjacency_correlation(const ImageBuffer& img,
                                            Direction dir, std::size_t pairs,
                                            std::uint64_t seed, int channel) {
  if (pairs < 2)
    throw std::invalid_argument("adjacency_correlation: need at least 2 pairs");
  // sampling ranges so the neighbour stays in bounds
  std::size_t rows = img.height, cols = img.width;
  std::size_t row_base = 0;
  switch (dir) {
    case Direction::kHorizontal: cols -= 1; break;
    case Direction::kVertical: rows -= 1; break;
    case Direction::kDiagonalUp: rows -= 1; row_base = 1; cols -= 1; break;
    case Direction::kDiagonalDown: rows -= 1; row_base = 1; cols -= 1; break;
  }
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("adjacency_correlation: image too small");

  std::mt19937_64 rng(seed);
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const double count = static_cast<double>(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t i = row_base + rng() % rows;
    std::size_t j = rng() % cols;
    if (dir == Direction::kDiagonalDown) j += 1;
    double a = img.at(i, j, channel);
    double b = 0;
    switch (dir) {
      case Direction::kHorizontal: b = img.at(i, j + 1, channel); break;
      case Direction::kVertical: b = img.at(i + 1, j, channel); break;
      case Direction::kDiagonalUp: b = img.at(i - 1, j + 1, channel); break;
      case Direction::kDiagonalDown: b = img.at(i - 1, j - 1, channel); break;
    }
    sx += a; sy += b; sxx += a * a; syy += b * b; sxy += a * b;
  }
  const double vx = sxx / count - (sx / count) * (sx / count);
  const double vy = syy / count - (sy / count) * (sy / count);
  if (vx <= 0.0 || vy <= 0.0) return std::nullopt;
  const double cov = sxy / count - (sx / count) * (sy / count);
  return cov / std::sqrt(vx * vy);
}

double shannon_entropy(const ImageBuffer& img, int channel) {
  if (img.width * img.height == 0)
    throw std::invalid_argument("shannon_entropy: empty image");
  std::array<std::size_t, 256> hist{};
  for (std::size_t i = 0; i < img.height; ++i)
    for (std::size_t j = 0; j < img.width; ++j) ++hist[img.at(i, j, channel)];
  const double total = static_cast<double>(img.width * img.height);
  double h = 0.0;
  for (std::size_t c : hist) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double npcr(const ImageBuffer& a, const ImageBuffer& b) {
  check_same_shape(a, b, "npcr");
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i)
    diff += a.pixels[i] != b.pixels[i];
  return 100.0 * static_cast<double>(diff) /
         static_cast<double>(a.pixels.size());
}

double uaci(const ImageBuffer& a, const ImageBuffer& b) {
  check_same_shape(a, b, "uaci");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i)
    sum += std::abs(static_cast<int>(a.pixels[i]) - static_cast<int>(b.pixels[i]));
  return 100.0 * sum / (255.0 * static_cast<double>(a.pixels.size()));
}

double psnr(const ImageBuffer& a, const ImageBuffer& b) {
  check_same_shape(a, b, "psnr");
  double mse = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    mse += d * d;
  }
  mse /= static_cast<double>(a.pixels.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

CriticalValues critical_values(std::size_t side, SignificanceLevel level) {
  const int li = level == SignificanceLevel::k005 ? 0
                 : level == SignificanceLevel::k001 ? 1 : 2;
  if (side == 256) {
    constexpr double npcr_min[3] = {99.5693, 99.5527, 99.5341};
    constexpr double uaci_lo[3] = {33.2824, 33.2255, 33.1594};
    constexpr double uaci_hi[3] = {33.6447, 33.7016, 33.7677};
    return {npcr_min[li], uaci_lo[li], uaci_hi[li]};
  }
  if (side == 512) {
    constexpr double npcr_min[3] = {99.5893, 99.5810, 99.5717};
    constexpr double uaci_lo[3] = {33.3730, 33.3445, 33.3115};
    constexpr double uaci_hi[3] = {33.5541, 33.5826, 33.6156};
    return {npcr_min[li], uaci_lo[li], uaci_hi[li]};
  }
  throw std::invalid_argument(
      "critical_values: no published constants for side " +
      std::to_string(side) + " (supported: 256, 512)");
}

DifferentialReport differential_gate(const ImageBuffer& img, double r,
                                     double r0, std::size_t trials,
                                     SignificanceLevel level,
                                     std::uint64_t seed,
                                     const ChaosConfig& cfg) {
  if (img.width != img.height)
    throw std::invalid_argument("differential_gate: square image required");

  DifferentialReport report;
  report.gate = critical_values(img.width, level);
  report.trials = trials;

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ImageBuffer changed = img;
    const std::size_t idx = rng() % changed.pixels.size();
    std::uint8_t replacement = static_cast<std::uint8_t>(rng() & 0xff);
    while (replacement == changed.pixels[idx])
      replacement = static_cast<std::uint8_t>(rng() & 0xff);
    changed.pixels[idx] = replacement;

    ImageBuffer c1, c2;
    if (img.channels == 1) {
      c1 = encrypt_gray(img, r, r0, cfg).ciphertext;
      c2 = encrypt_gray(changed, r, r0, cfg).ciphertext;
    } else {
      c1 = encrypt_color(img, r, r0, cfg).ciphertext;
      c2 = encrypt_color(changed, r, r0, cfg).ciphertext;
    }

    bool all_pass = true;
    for (int layer = 0; layer < img.channels; ++layer) {
      const ImageBuffer p1 = img.channels == 1 ? c1 : extract_channel(c1, layer);
      const ImageBuffer p2 = img.channels == 1 ? c2 : extract_channel(c2, layer);
      DifferentialTrial row;
      row.trial = t;
      row.layer = layer;
      row.npcr_value = npcr(p1, p2);
      row.uaci_value = uaci(p1, p2);
      row.npcr_pass = row.npcr_value >= report.gate.npcr_min;
      row.uaci_pass = row.uaci_value >= report.gate.uaci_lo &&
                      row.uaci_value <= report.gate.uaci_hi;
      all_pass = all_pass && row.npcr_pass && row.uaci_pass;
      report.rows.push_back(row);
    }
    report.passes += all_pass;
  }
  return report;
}

ImageBuffer salt_pepper(const ImageBuffer& img, double density,
                        std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("salt_pepper: density must lie in [0, 1]");
  const std::size_t total = img.pixels.size();
  const std::size_t count =
      static_cast<std::size_t>(std::floor(density * static_cast<double>(total)));

  ImageBuffer out = img;
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first `count` entries become the target set
  std::vector<std::uint32_t> idx(total);
  for (std::size_t i = 0; i < total; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng() % (total - i);
    std::swap(idx[i], idx[j]);
    out.pixels[idx[i]] = (rng() & 1) ? 255 : 0;
  }
  return out;
}

ImageBuffer crop_zero(const ImageBuffer& img, CropRect rect) {
  if (rect.x + rect.w > img.width || rect.y + rect.h > img.height)
    throw std::invalid_argument("crop_zero: rectangle out of bounds");
  ImageBuffer out = img;
  for (std::size_t i = rect.y; i < rect.y + rect.h; ++i)
    for (std::size_t j = rect.x; j < rect.x + rect.w; ++j)
      for (int c = 0; c < img.channels; ++c) out.at(i, j, c) = 0;
  return out;
}

RobustnessReport robustness_report(const ImageBuffer& img, double r, double r0,
                                   const AttackSpec& attack,
                                   const ChaosConfig& cfg) {
  EncryptResult enc = img.channels == 1 ? encrypt_gray(img, r, r0, cfg)
                                        : encrypt_color(img, r, r0, cfg);
  ImageBuffer attacked;
  switch (attack.kind) {
    case AttackSpec::Kind::kSaltPepper:
      attacked = salt_pepper(enc.ciphertext, attack.density, attack.seed);
      break;
    case AttackSpec::Kind::kCrop:
      attacked = crop_zero(enc.ciphertext, attack.rect);
      break;
  }
  const ImageBuffer decrypted = img.channels == 1
                                    ? decrypt_gray(attacked, enc.key, cfg)
                                    : decrypt_color(attacked, enc.key, cfg);

  RobustnessReport report;
  report.psnr_value = psnr(img, decrypted);
  report.psnr_infinite = std::isinf(report.psnr_value);
  report.npcr_value = npcr(img, decrypted);
  report.decrypted = decrypted;
  return report;
}

}  // namespace chaoscrypt
