#include "chaoscrypt/shifts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace chaoscrypt {

namespace {

std::vector<PathCell> build_path(std::size_t n) {
  std::vector<PathCell> path;
  path.reserve(n * n);
  // first row
  for (std::size_t j = 0; j < n; ++j) path.emplace_back(0, j);
  // main anti-diagonal from (2, n-1) down to (n, 1)
  for (std::size_t i = 1; i < n; ++i) path.emplace_back(i, n - 1 - i);
  // last row from (n, 2)
  for (std::size_t j = 1; j < n; ++j) path.emplace_back(n - 1, j);
  // last column upward from (n-1, n) to (2, n)
  for (std::size_t i = n - 2; i >= 1; --i) path.emplace_back(i, n - 1);
  // interior anti-diagonals below the main one (0-based sums
  // i + j = n .. 2n-4), rows ascending within each
  for (std::size_t s = n; s <= 2 * n - 4; ++s) {
    for (std::size_t i = s - n + 2; i <= n - 2; ++i)
      path.emplace_back(i, s - i);
  }
  // then the ones above (i + j = n-2 down to 1), rows descending
  for (std::size_t s = n - 2; s >= 1; --s) {
    for (std::size_t i = std::min(s, n - 2); i >= 1; --i)
      path.emplace_back(i, s - i);
  }
  return path;
}

const std::vector<PathCell>& cached_path(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<PathCell>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_path(n)).first;
  return it->second;
}

void require_square(const ByteMatrix& a, const char* who) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": square matrix required");
  if (a.rows() < 4)
    throw std::invalid_argument(std::string(who) + ": size must be >= 4");
}

}  // namespace

const std::vector<PathCell>& traversal_path(std::size_t n) {
  if (n < 4) throw std::invalid_argument("traversal_path: n must be >= 4");
  return cached_path(n);
}

ByteMatrix transposed(const ByteMatrix& a) {
  ByteMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ByteMatrix flipped_lr(const ByteMatrix& a) {
  ByteMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, a.cols() - 1 - j) = a(i, j);
  return out;
}

ByteMatrix flipped_ud(const ByteMatrix& a) {
  ByteMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(a.rows() - 1 - i, j) = a(i, j);
  return out;
}

ByteMatrix ults(const ByteMatrix& a, long long k) {
  require_square(a, "ults");
  const auto& path = traversal_path(a.rows());
  const long long len = static_cast<long long>(path.size());
  const std::size_t shift = static_cast<std::size_t>(((k % len) + len) % len);
  ByteMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < path.size(); ++j) {
    const auto& dst = path[(j + shift) % path.size()];
    const auto& src = path[j];
    out(dst.first, dst.second) = a(src.first, src.second);
  }
  return out;
}

ByteMatrix fcs(const ByteMatrix& a, long long n1, long long n2, long long n3,
               long long n4) {
  ByteMatrix b = ults(a, n1);
  b = ults(transposed(b), n2);
  b = ults(flipped_lr(b), n3);
  b = ults(flipped_ud(b), n4);
  return b;
}

ByteMatrix fcs_inv(const ByteMatrix& a, long long n1, long long n2,
                   long long n3, long long n4) {
  ByteMatrix b = flipped_ud(ults(a, -n4));
  b = flipped_lr(ults(b, -n3));
  b = transposed(ults(b, -n2));
  return ults(b, -n1);
}

ByteMatrix scs(const ByteMatrix& a, long long n1, long long n2, long long n3,
               long long n4) {
  ByteMatrix c = ults(flipped_ud(a), n1);
  c = ults(flipped_lr(c), n2);
  c = ults(transposed(c), n3);
  return ults(c, n4);
}

ByteMatrix scs_inv(const ByteMatrix& a, long long n1, long long n2,
                   long long n3, long long n4) {
  ByteMatrix c = transposed(ults(ults(a, -n4), -n3));
  c = flipped_lr(ults(c, -n2));
  return flipped_ud(ults(c, -n1));
}

Std3Result std3(const ByteMatrix& a, const ByteMatrix& b, const ByteMatrix& c,
                const std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  for (const ByteMatrix* m : {&a, &b, &c})
    if (m->rows() != n || m->cols() != n)
      throw std::invalid_argument("std3: three equal square matrices required");
  const std::size_t m = perm.size();
  if (m == 0 || m % 3 != 0)
    throw std::invalid_argument("std3: permutation length must be a positive multiple of 3");
  const std::size_t per = m / 3;
  const std::size_t g = static_cast<std::size_t>(std::llround(std::sqrt(double(per))));
  if (g * g != per)
    throw std::invalid_argument("std3: permutation length / 3 must be a perfect square");
  if (g == 0 || n % g != 0)
    throw std::invalid_argument("std3: block grid must divide the matrix size");
  const std::size_t p = n / g;  // block side in pixels

  std::vector<bool> seen(m, false);
  for (std::size_t v : perm) {
    if (v >= m || seen[v])
      throw std::invalid_argument("std3: not a permutation");
    seen[v] = true;
  }

  const ByteMatrix* mats[3] = {&a, &b, &c};
  Std3Result out{ByteMatrix(n, n), ByteMatrix(n, n), ByteMatrix(n, n)};
  ByteMatrix* outs[3] = {&out.a, &out.b, &out.c};

  // block index: matrix-major, then row-major over the g x g block grid
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t src = perm[j];
    const ByteMatrix& sm = *mats[src / per];
    ByteMatrix& dm = *outs[j / per];
    const std::size_t sr = ((src % per) / g) * p, sc = ((src % per) % g) * p;
    const std::size_t dr = ((j % per) / g) * p, dc = ((j % per) % g) * p;
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t cidx = 0; cidx < p; ++cidx)
        dm(dr + r, dc + cidx) = sm(sr + r, sc + cidx);
  }
  return out;
}

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) inv[p[j]] = j;
  return inv;
}

}  // namespace chaoscrypt
