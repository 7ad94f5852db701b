#pragma once

#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

// Cipher key: control parameters plus the plaintext-derived chaos seed.
struct KeyMaterial {
  double r = 0.0;   // in (0, 1.2]
  double r0 = 0.0;  // in [0, 4)
  ChaosState q;

  bool operator==(const KeyMaterial&) const = default;
};

// Plaintext-sensitive key derivation for a grayscale image: the flattened,
// r0-rotated pixel stream is folded through the chaos map three pixels at a
// time. Requires at least 16 pixels.
KeyMaterial keygen_gray(const ImageBuffer& image, double r, double r0,
                        const ChaosConfig& cfg);

// Color extension: the three layers (rows rotated by floor(r0*1e3)) are
// keyed independently with the shared r and r0, and the component-wise mean
// of the three keys is returned.
KeyMaterial keygen_color(const ImageBuffer& image, double r, double r0,
                         const ChaosConfig& cfg);

// Entropy-backed draw from [0, 4) for callers that do not supply r0.
double draw_r0();

}  // namespace chaoscrypt
