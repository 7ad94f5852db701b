#include "chaoscrypt/cipher.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chaoscrypt {

namespace {

void check_gray_dims(const ImageBuffer& image, const char* who) {
  if (image.channels != 1)
    throw std::invalid_argument(std::string(who) + ": grayscale image expected");
  if (image.height % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": height must be even");
  if (image.height < 8 || image.width < 8)
    throw std::invalid_argument(std::string(who) + ": dimensions must be >= 8");
}

std::vector<long long> floored_stream(const ChaosState& q, double param,
                                      std::size_t count,
                                      const ChaosConfig& cfg) {
  const std::vector<double> vals = chi(q, param, count, cfg);
  std::vector<long long> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = static_cast<long long>(std::floor(vals[i] * 1000.0));
  return out;
}

ByteMatrix circ_shifted(const ByteMatrix& m, std::size_t dr, std::size_t dc) {
  ByteMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out((i + dr) % m.rows(), (j + dc) % m.cols()) = m(i, j);
  return out;
}

// rotate one bit-matrix row right by k
void rotate_row(BitMatrix& b, std::size_t row, long long k) {
  const long long len = static_cast<long long>(b.cols());
  const std::size_t s = static_cast<std::size_t>(((k % len) + len) % len);
  if (s == 0) return;
  std::rotate(&b(row, 0), &b(row, 0) + (b.cols() - s), &b(row, 0) + b.cols());
}

BitMatrix stack_panels(const BitMatrix& bits, std::size_t n, std::size_t m) {
  BitMatrix r4(4 * n, 2 * m);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < 2 * m; ++j)
        r4(p * n + i, j) = bits(i, 2 * p * m + j);
  return r4;
}

BitMatrix unstack_panels(const BitMatrix& r4, std::size_t n, std::size_t m) {
  BitMatrix bits(n, 8 * m);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < 2 * m; ++j)
        bits(i, 2 * p * m + j) = r4(p * n + i, j);
  return bits;
}

void rotate_column(BitMatrix& b, std::size_t col, long long k) {
  const long long len = static_cast<long long>(b.rows());
  const std::size_t s = static_cast<std::size_t>(((k % len) + len) % len);
  if (s == 0) return;
  std::vector<std::uint8_t> tmp(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) tmp[(i + s) % b.rows()] = b(i, col);
  for (std::size_t i = 0; i < b.rows(); ++i) b(i, col) = tmp[i];
}

// composed shift keyed on v1 positions 10/20/30/40 (1-based, wrapped mod n);
// non-square matrices shift their largest centered square, the border strip
// passes through untouched.
ByteMatrix keyed_fcs(const ByteMatrix& a, const CipherContext& ctx,
                     bool inverse) {
  const std::size_t n = ctx.v1.size();
  auto pick = [&](std::size_t pos) { return ctx.v1[(pos - 1) % n]; };
  const long long k1 = pick(10), k2 = -pick(20), k3 = pick(30), k4 = -pick(40);
  if (a.rows() == a.cols())
    return inverse ? fcs_inv(a, k1, k2, k3, k4) : fcs(a, k1, k2, k3, k4);

  const std::size_t side = std::min(a.rows(), a.cols());
  const std::size_t r0 = (a.rows() - side) / 2;
  const std::size_t c0 = (a.cols() - side) / 2;
  ByteMatrix square(side, side);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) square(i, j) = a(r0 + i, c0 + j);
  square = inverse ? fcs_inv(square, k1, k2, k3, k4)
                   : fcs(square, k1, k2, k3, k4);
  ByteMatrix out = a;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) out(r0 + i, c0 + j) = square(i, j);
  return out;
}

ByteMatrix xor_masks(const ByteMatrix& a, const CipherContext& ctx) {
  ByteMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data()[i] = static_cast<std::uint8_t>(
        out.data()[i] ^ ctx.mask.data()[i] ^ ctx.mask_shifted.data()[i]);
  return out;
}

}  // namespace

CipherContext derive_streams(const KeyMaterial& key, std::size_t n,
                             std::size_t m, const ChaosConfig& cfg) {
  if (n < 8 || m < 8)
    throw std::invalid_argument("derive_streams: dimensions must be >= 8");
  CipherContext ctx;
  ctx.key = key;
  ctx.v1 = floored_stream(key.q, key.r, n, cfg);
  ctx.v2 = floored_stream(key.q, key.r0, 8 * m, cfg);
  const std::vector<long long> mv =
      floored_stream(key.q, (key.r + key.r0) / 2.0, n * m, cfg);
  ctx.mask = ByteMatrix(n, m);
  for (std::size_t i = 0; i < n * m; ++i)
    ctx.mask.data()[i] = static_cast<std::uint8_t>(mv[i] % 255);
  const auto dr = static_cast<std::size_t>(std::floor(key.q.x * 100.0));
  const auto dc = static_cast<std::size_t>(std::floor(key.q.y * 100.0));
  ctx.mask_shifted = circ_shifted(ctx.mask, dr % n, dc % m);
  return ctx;
}

BitMatrix bit_shuffle(const ByteMatrix& image, const CipherContext& ctx) {
  const std::size_t n = image.rows();
  const std::size_t m = image.cols();
  if (ctx.v1.size() != n || ctx.v2.size() != 8 * m)
    throw std::invalid_argument("bit_shuffle: context does not match image size");

  BitMatrix bits(n, 8 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint8_t byte = image(i, j);
      for (int b = 0; b < 8; ++b)
        bits(i, 8 * j + static_cast<std::size_t>(b)) =
            static_cast<std::uint8_t>((byte >> (7 - b)) & 1);
    }

  for (std::size_t i = 0; i < n; ++i) rotate_row(bits, i, ctx.v1[i]);
  BitMatrix r4 = stack_panels(bits, n, m);
  for (std::size_t j = 0; j < 2 * m; ++j) rotate_column(r4, j, ctx.v2[j]);
  return unstack_panels(r4, n, m);
}

ByteMatrix bit_shuffle_inv(const BitMatrix& bits, const CipherContext& ctx) {
  const std::size_t n = bits.rows();
  const std::size_t m = bits.cols() / 8;
  if (ctx.v1.size() != n || ctx.v2.size() != 8 * m || bits.cols() % 8 != 0)
    throw std::invalid_argument("bit_shuffle_inv: context does not match size");

  BitMatrix r4 = stack_panels(bits, n, m);
  for (std::size_t j = 0; j < 2 * m; ++j) rotate_column(r4, j, -ctx.v2[j]);
  BitMatrix flat = unstack_panels(r4, n, m);
  for (std::size_t i = 0; i < n; ++i) rotate_row(flat, i, -ctx.v1[i]);

  ByteMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      int byte = 0;
      for (int b = 0; b < 8; ++b)
        byte = (byte << 1) | (flat(i, 8 * j + static_cast<std::size_t>(b)) & 1);
      out(i, j) = static_cast<std::uint8_t>(byte);
    }
  return out;
}

NibblePlanes nibble_split(const BitMatrix& bits) {
  const std::size_t n = bits.rows();
  if (n < 8) throw std::invalid_argument("nibble_split: need at least 8 rows");
  if (bits.cols() % 8 != 0)
    throw std::invalid_argument("nibble_split: column count must be a multiple of 8");
  const std::size_t m = bits.cols() / 8;

  NibblePlanes out;
  out.msb = BitMatrix(n, 4 * m);
  out.lsb = BitMatrix(n, 4 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t b = 0; b < 4; ++b) {
        out.msb(i, 4 * j + b) = bits(i, 8 * j + b);
        out.lsb(i, 4 * j + b) = bits(i, 8 * j + 4 + b);
      }

  const std::size_t half = n / 2;
  out.s = half - half % 3;
  out.i3 = BitMatrix(out.s, 4 * m);
  for (std::size_t k = 0; k < out.s; ++k)
    for (std::size_t j = 0; j < 4 * m; ++j) out.i3(k, j) = out.msb(2 * k, j);
  return out;
}

BitMatrix nibble_merge(const BitMatrix& msb, const BitMatrix& lsb) {
  if (msb.rows() != lsb.rows() || msb.cols() != lsb.cols() ||
      msb.cols() % 4 != 0)
    throw std::invalid_argument("nibble_merge: plane shape mismatch");
  const std::size_t n = msb.rows();
  const std::size_t m = msb.cols() / 4;
  BitMatrix bits(n, 8 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t b = 0; b < 4; ++b) {
        bits(i, 8 * j + b) = msb(i, 4 * j + b);
        bits(i, 8 * j + 4 + b) = lsb(i, 4 * j + b);
      }
  return bits;
}

void write_odd_rows(BitMatrix& msb, const BitMatrix& i3) {
  if (i3.cols() != msb.cols() || 2 * i3.rows() > msb.rows())
    throw std::invalid_argument("write_odd_rows: slice shape mismatch");
  for (std::size_t k = 0; k < i3.rows(); ++k)
    for (std::size_t j = 0; j < i3.cols(); ++j) msb(2 * k, j) = i3(k, j);
}

ImageBuffer encrypt_gray_with_key(const ImageBuffer& image,
                                  const KeyMaterial& key,
                                  const ChaosConfig& cfg) {
  check_gray_dims(image, "encrypt_gray");
  const CipherContext ctx = derive_streams(key, image.height, image.width, cfg);

  BitMatrix bits = bit_shuffle(to_matrix(image), ctx);
  NibblePlanes planes = nibble_split(bits);
  const BitMatrix diffused = ca_encrypt_matrix(planes.i3, key.q, key.r, cfg);
  write_odd_rows(planes.msb, diffused);
  const ByteMatrix bytes = bit_shuffle_inv(nibble_merge(planes.msb, planes.lsb), ctx);
  const ByteMatrix shifted = keyed_fcs(bytes, ctx, false);
  return from_matrix(xor_masks(shifted, ctx));
}

EncryptResult encrypt_gray(const ImageBuffer& image, double r, double r0,
                           const ChaosConfig& cfg) {
  check_gray_dims(image, "encrypt_gray");
  const KeyMaterial key = keygen_gray(image, r, r0, cfg);
  return {encrypt_gray_with_key(image, key, cfg), key};
}

ImageBuffer decrypt_gray(const ImageBuffer& ciphertext, const KeyMaterial& key,
                         const ChaosConfig& cfg) {
  check_gray_dims(ciphertext, "decrypt_gray");
  const CipherContext ctx =
      derive_streams(key, ciphertext.height, ciphertext.width, cfg);

  const ByteMatrix shifted = xor_masks(to_matrix(ciphertext), ctx);
  const ByteMatrix bytes = keyed_fcs(shifted, ctx, true);
  BitMatrix bits = bit_shuffle(bytes, ctx);
  NibblePlanes planes = nibble_split(bits);
  const BitMatrix restored = ca_decrypt_matrix(planes.i3, key.q, key.r, cfg);
  write_odd_rows(planes.msb, restored);
  const ByteMatrix plain =
      bit_shuffle_inv(nibble_merge(planes.msb, planes.lsb), ctx);
  return from_matrix(plain);
}

std::vector<std::size_t> color_block_permutation(const KeyMaterial& key,
                                                 std::size_t n,
                                                 const ChaosConfig& cfg) {
  const std::size_t grid = (n % 4 == 0) ? 4 : 2;
  if (n % grid != 0)
    throw std::invalid_argument("color_block_permutation: side must be even");
  const std::size_t m = 3 * grid * grid;
  const std::vector<double> vals = chi(key.q, key.r, m, cfg);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  return perm;
}

namespace {

void check_color_dims(const ImageBuffer& image, const char* who) {
  if (image.channels != 3)
    throw std::invalid_argument(std::string(who) + ": three-channel image expected");
  if (image.width != image.height)
    throw std::invalid_argument(std::string(who) + ": square layers required");
  if (image.height % 2 != 0 || image.height < 8)
    throw std::invalid_argument(std::string(who) + ": side must be even and >= 8");
}

}  // namespace

EncryptResult encrypt_color(const ImageBuffer& image, double r, double r0,
                            const ChaosConfig& cfg) {
  check_color_dims(image, "encrypt_color");
  const KeyMaterial key = keygen_color(image, r, r0, cfg);
  const auto perm = color_block_permutation(key, image.height, cfg);

  const Std3Result shuffled =
      std3(to_matrix(extract_channel(image, 0)),
           to_matrix(extract_channel(image, 1)),
           to_matrix(extract_channel(image, 2)), perm);

  ImageBuffer out(image.width, image.height, 3);
  const ByteMatrix* layers[3] = {&shuffled.a, &shuffled.b, &shuffled.c};
  for (int c = 0; c < 3; ++c) {
    const ImageBuffer enc =
        encrypt_gray_with_key(from_matrix(*layers[c]), key, cfg);
    insert_channel(out, enc, c);
  }
  return {out, key};
}

ImageBuffer decrypt_color(const ImageBuffer& ciphertext,
                          const KeyMaterial& key, const ChaosConfig& cfg) {
  check_color_dims(ciphertext, "decrypt_color");
  const auto perm = color_block_permutation(key, ciphertext.height, cfg);

  ByteMatrix layers[3];
  for (int c = 0; c < 3; ++c)
    layers[c] = to_matrix(
        decrypt_gray(extract_channel(ciphertext, c), key, cfg));

  const Std3Result restored =
      std3(layers[0], layers[1], layers[2], inverse_permutation(perm));
  ImageBuffer out(ciphertext.width, ciphertext.height, 3);
  insert_channel(out, from_matrix(restored.a), 0);
  insert_channel(out, from_matrix(restored.b), 1);
  insert_channel(out, from_matrix(restored.c), 2);
  return out;
}

}  // namespace chaoscrypt
