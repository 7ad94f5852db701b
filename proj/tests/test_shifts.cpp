#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chaoscrypt/shifts.hpp"

using namespace chaoscrypt;

namespace {

ByteMatrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ByteMatrix out(n, m);
  for (auto& v : out.data()) v = static_cast<std::uint8_t>(rng() & 0xff);
  return out;
}

std::vector<std::uint8_t> sorted_entries(const ByteMatrix& m) {
  std::vector<std::uint8_t> v = m.data();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("shifts") {

TEST_CASE("traversal path visits every cell once and honors the anchors") {
  for (std::size_t n : {4u, 5u, 8u, 16u}) {
    const auto& path = traversal_path(n);
    REQUIRE(path.size() == n * n);
    std::set<PathCell> cells(path.begin(), path.end());
    CHECK(cells.size() == n * n);

    // first row left to right
    for (std::size_t j = 0; j < n; ++j) CHECK(path[j] == PathCell{0, j});
    // main anti-diagonal down to the bottom-left corner
    for (std::size_t i = 1; i < n; ++i)
      CHECK(path[n - 1 + i] == PathCell{i, n - 1 - i});
    // last row from column 2
    for (std::size_t j = 1; j < n; ++j)
      CHECK(path[2 * n - 2 + j] == PathCell{n - 1, j});
    // last column upward to row 2
    for (std::size_t i = 0; i < n - 2; ++i)
      CHECK(path[3 * n - 2 + i] == PathCell{n - 2 - i, n - 1});
  }
  CHECK_THROWS_AS(traversal_path(3), std::invalid_argument);
}

TEST_CASE("ults basics") {
  const ByteMatrix a = random_matrix(5, 5, 101);
  CHECK(ults(a, 0) == a);
  CHECK(ults(ults(a, 7), -7) == a);
  CHECK(ults(a, 25) == a);  // full cycle

  // the full cycle again, one path step at a time
  ByteMatrix walked = a;
  for (int i = 0; i < 25; ++i) walked = ults(walked, 1);
  CHECK(walked == a);

  // shift additivity
  CHECK(ults(ults(a, 9), 8) == ults(a, 17));

  const ByteMatrix tiny(3, 3);
  CHECK_THROWS_AS(ults(tiny, 1), std::invalid_argument);
  const ByteMatrix rect(4, 6);
  CHECK_THROWS_AS(ults(rect, 1), std::invalid_argument);
}

TEST_CASE("ults is a bijection for random sizes and shifts") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 13;
    const long long k =
        static_cast<long long>(rng() % 2000) - 1000;
    const ByteMatrix a = random_matrix(n, n, rng());
    const ByteMatrix shifted = ults(a, k);
    CHECK(sorted_entries(shifted) == sorted_entries(a));
    CHECK(ults(shifted, -k) == a);
  }
}

TEST_CASE("fcs composition and inverse") {
  const ByteMatrix a = random_matrix(8, 8, 55);

  CHECK(fcs(a, 0, 0, 0, 0) == flipped_ud(flipped_lr(transposed(a))));
  CHECK(fcs_inv(fcs(a, 3, -5, 2, -1), 3, -5, 2, -1) == a);
  CHECK(sorted_entries(fcs(a, 11, 7, -3, 19)) == sorted_entries(a));
}

TEST_CASE("scs composition and inverse") {
  const ByteMatrix a = random_matrix(8, 8, 56);
  CHECK(scs(a, 0, 0, 0, 0) == transposed(flipped_lr(flipped_ud(a))));
  CHECK(scs_inv(scs(a, 4, 9, -2, 6), 4, 9, -2, 6) == a);

  const ByteMatrix b = random_matrix(6, 6, 57);
  CHECK(scs(b, 1, 2, 3, 4) != fcs(b, 1, 2, 3, 4));
}

TEST_CASE("std3 identity permutation leaves the inputs unchanged") {
  const ByteMatrix a = random_matrix(6, 6, 1);
  const ByteMatrix b = random_matrix(6, 6, 2);
  const ByteMatrix c = random_matrix(6, 6, 3);
  std::vector<std::size_t> ident(12);
  std::iota(ident.begin(), ident.end(), std::size_t{0});
  const Std3Result r = std3(a, b, c, ident);
  CHECK(r.a == a);
  CHECK(r.b == b);
  CHECK(r.c == c);
}

TEST_CASE("std3 twelve-block relocation matches direct block arithmetic") {
  // n = 6, twelve 3x3 blocks, four per matrix, 2x2 grid each
  const std::size_t n = 6, p = 3, g = 2, per = 4;
  const ByteMatrix a = random_matrix(n, n, 11);
  const ByteMatrix b = random_matrix(n, n, 12);
  const ByteMatrix c = random_matrix(n, n, 13);
  const std::vector<std::size_t> perm = {5, 0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10};
  const Std3Result r = std3(a, b, c, perm);

  const ByteMatrix* ins[3] = {&a, &b, &c};
  const ByteMatrix* outs[3] = {&r.a, &r.b, &r.c};
  for (std::size_t j = 0; j < 12; ++j) {
    const std::size_t src = perm[j];
    for (std::size_t rr = 0; rr < p; ++rr)
      for (std::size_t cc = 0; cc < p; ++cc) {
        const std::uint8_t got = (*outs[j / per])(
            (j % per) / g * p + rr, (j % per) % g * p + cc);
        const std::uint8_t want = (*ins[src / per])(
            (src % per) / g * p + rr, (src % per) % g * p + cc);
        CHECK(got == want);
      }
  }
}

TEST_CASE("std3 inverse permutation restores the inputs") {
  const ByteMatrix a = random_matrix(8, 8, 21);
  const ByteMatrix b = random_matrix(8, 8, 22);
  const ByteMatrix c = random_matrix(8, 8, 23);
  std::vector<std::size_t> perm(48);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(99);
  std::shuffle(perm.begin(), perm.end(), rng);

  const Std3Result shuffled = std3(a, b, c, perm);
  const Std3Result restored =
      std3(shuffled.a, shuffled.b, shuffled.c, inverse_permutation(perm));
  CHECK(restored.a == a);
  CHECK(restored.b == b);
  CHECK(restored.c == c);

  // the entries of the three matrices are preserved as a multiset
  std::vector<std::uint8_t> before = a.data(), after = shuffled.a.data();
  before.insert(before.end(), b.data().begin(), b.data().end());
  before.insert(before.end(), c.data().begin(), c.data().end());
  after.insert(after.end(), shuffled.b.data().begin(), shuffled.b.data().end());
  after.insert(after.end(), shuffled.c.data().begin(), shuffled.c.data().end());
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  CHECK(before == after);
}

TEST_CASE("path cache is safe under concurrent first use") {
  // sizes no earlier test touched, so every thread races on cold entries
  std::vector<std::thread> workers;
  std::vector<ByteMatrix> results(8);
  const ByteMatrix a = random_matrix(23, 23, 5150);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      traversal_path(19 + static_cast<std::size_t>(t % 3));
      results[t] = ults(a, 7 + t);
    });
  for (auto& th : workers) th.join();
  for (int t = 0; t < 8; ++t) CHECK(results[t] == ults(a, 7 + t));
}

TEST_CASE("std3 rejects bad block geometry") {
  const ByteMatrix a(6, 6), b(6, 6), c(6, 6);
  std::vector<std::size_t> perm(10);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  CHECK_THROWS_AS(std3(a, b, c, perm), std::invalid_argument);  // 10 % 3 != 0

  perm.resize(18);  // 18/3 = 6, not a perfect square
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  CHECK_THROWS_AS(std3(a, b, c, perm), std::invalid_argument);

  perm.resize(48);  // grid 4 does not divide n = 6
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  CHECK_THROWS_AS(std3(a, b, c, perm), std::invalid_argument);

  perm.resize(12);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  perm[0] = 1;  // duplicate
  CHECK_THROWS_AS(std3(a, b, c, perm), std::invalid_argument);

  const ByteMatrix rect(6, 8);
  perm[0] = 0;
  CHECK_THROWS_AS(std3(rect, b, c, perm), std::invalid_argument);
}

}  // TEST_SUITE
