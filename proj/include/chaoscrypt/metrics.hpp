#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

enum class Direction {
  kHorizontal,
  kVertical,
  kDiagonalUp,    // lower-left to top-right
  kDiagonalDown,  // lower-right to top-left
};

// Pearson coefficient over `pairs` randomly sampled adjacent pixel pairs.
// Deterministic given the seed. Returns nullopt for a constant image (zero
// variance has no defined coefficient).
std::optional<double> adjacency_correlation(const ImageBuffer& img,
                                            Direction dir, std::size_t pairs,
                                            std::uint64_t seed,
                                            int channel = 0);

// Shannon entropy over the 256 intensity levels, in bits.
double shannon_entropy(const ImageBuffer& img, int channel = 0);

// Differential metrics between same-shape images: percentage of differing
// samples, and mean absolute difference normalized by 255.
double npcr(const ImageBuffer& a, const ImageBuffer& b);
double uaci(const ImageBuffer& a, const ImageBuffer& b);

// Peak signal-to-noise ratio; +infinity when the images are identical.
double psnr(const ImageBuffer& a, const ImageBuffer& b);

enum class SignificanceLevel { k005, k001, k0001 };

struct CriticalValues {
  double npcr_min;
  double uaci_lo;
  double uaci_hi;
};

// Published critical constants for 256x256 and 512x512 images; throws for
// any other side length, naming the supported sizes.
CriticalValues critical_values(std::size_t side, SignificanceLevel level);

struct DifferentialTrial {
  std::size_t trial;
  int layer;
  double npcr_value;
  double uaci_value;
  bool npcr_pass;
  bool uaci_pass;
};

struct DifferentialReport {
  std::vector<DifferentialTrial> rows;
  std::size_t trials = 0;
  std::size_t passes = 0;  // trials where every layer passed both gates
  CriticalValues gate{};
};

// Runs `trials` one-random-pixel-change encryptions and gates NPCR/UACI
// against the critical constants for the image size.
DifferentialReport differential_gate(const ImageBuffer& img, double r,
                                     double r0, std::size_t trials,
                                     SignificanceLevel level,
                                     std::uint64_t seed,
                                     const ChaosConfig& cfg);

// Sets floor(density * sample_count) distinct samples to 0 or 255,
// equiprobably, chosen by the seeded generator.
ImageBuffer salt_pepper(const ImageBuffer& img, double density,
                        std::uint64_t seed);

struct CropRect {
  std::size_t x, y, w, h;
};

// Zeroes the rectangle across all channels.
ImageBuffer crop_zero(const ImageBuffer& img, CropRect rect);

struct AttackSpec {
  enum class Kind { kSaltPepper, kCrop } kind = Kind::kSaltPepper;
  double density = 0.0;
  CropRect rect{0, 0, 0, 0};
  std::uint64_t seed = 0;
};

struct RobustnessReport {
  double psnr_value = 0.0;
  bool psnr_infinite = false;
  double npcr_value = 0.0;
  ImageBuffer decrypted;
};

// encrypt -> attack the ciphertext -> decrypt; reports how far the decrypted
// image sits from the original. Total: attacked ciphertexts always decrypt.
RobustnessReport robustness_report(const ImageBuffer& img, double r, double r0,
                                   const AttackSpec& attack,
                                   const ChaosConfig& cfg);

}  // namespace chaoscrypt
