#pragma once

#include <cstddef>
#include <vector>

#include "chaoscrypt/cellular.hpp"
#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/image.hpp"
#include "chaoscrypt/keygen.hpp"
#include "chaoscrypt/mat.hpp"
#include "chaoscrypt/shifts.hpp"

namespace chaoscrypt {

// Keystream material derived from one key for an n x m image.
struct CipherContext {
  std::vector<long long> v1;  // per-row bit shifts, length n
  std::vector<long long> v2;  // per-column bit shifts, length 8m
  ByteMatrix mask;            // M, entries in [0, 254]
  ByteMatrix mask_shifted;    // Ms, cyclic shift of M keyed on q
  KeyMaterial key;
};

CipherContext derive_streams(const KeyMaterial& key, std::size_t n,
                             std::size_t m, const ChaosConfig& cfg);

// Bit-plane confusion: bytes expand MSB-first to an n x 8m bit matrix, rows
// rotate by v1, the four n x 2m panels stack into a 4n x 2m matrix whose
// columns rotate by v2, then the panels unstack.
BitMatrix bit_shuffle(const ByteMatrix& image, const CipherContext& ctx);
ByteMatrix bit_shuffle_inv(const BitMatrix& bits, const CipherContext& ctx);

// MSB/LSB nibble planes plus the odd-row slice fed to the CA stage.
struct NibblePlanes {
  BitMatrix msb;  // n x 4m
  BitMatrix lsb;  // n x 4m
  BitMatrix i3;   // s x 4m, rows 0, 2, ..., 2s-2 of msb
  std::size_t s = 0;
};

NibblePlanes nibble_split(const BitMatrix& bits);
BitMatrix nibble_merge(const BitMatrix& msb, const BitMatrix& lsb);
void write_odd_rows(BitMatrix& msb, const BitMatrix& i3);

struct EncryptResult {
  ImageBuffer ciphertext;
  KeyMaterial key;
};

// Full pipeline for a grayscale image: key derivation, keystreams, bit-plane
// confusion, CA diffusion on the MSB slice, composed shift, XOR masking.
// Requires even height and both dimensions >= 8.
EncryptResult encrypt_gray(const ImageBuffer& image, double r, double r0,
                           const ChaosConfig& cfg);
ImageBuffer encrypt_gray_with_key(const ImageBuffer& image,
                                  const KeyMaterial& key,
                                  const ChaosConfig& cfg);
ImageBuffer decrypt_gray(const ImageBuffer& ciphertext, const KeyMaterial& key,
                         const ChaosConfig& cfg);

// Color pipeline: block permutation of the three layers under the
// chaos-ordered permutation, then the grayscale pipeline per layer with the
// shared key. Layers must be square with even side >= 8.
EncryptResult encrypt_color(const ImageBuffer& image, double r, double r0,
                            const ChaosConfig& cfg);
ImageBuffer decrypt_color(const ImageBuffer& ciphertext,
                          const KeyMaterial& key, const ChaosConfig& cfg);

// Ordering permutation of the first 3*(n/p)^2 chi values; p is the block
// side (n/4 when 4 | n, n/2 otherwise).
std::vector<std::size_t> color_block_permutation(const KeyMaterial& key,
                                                 std::size_t n,
                                                 const ChaosConfig& cfg);

}  // namespace chaoscrypt
