#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "chaoscrypt/metrics.hpp"

using namespace chaoscrypt;

namespace {

ImageBuffer random_gray(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ImageBuffer img(w, h, 1);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() & 0xff);
  return img;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("correlation extremes") {
  // rows constant: every horizontal pair is (v, v)
  ImageBuffer rowimg(16, 16, 1);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      rowimg.at(i, j) = static_cast<std::uint8_t>(i * 16);
  const auto c1 = adjacency_correlation(rowimg, Direction::kHorizontal, 4096, 1);
  REQUIRE(c1.has_value());
  CHECK(*c1 == doctest::Approx(1.0).epsilon(1e-12));

  // columns alternate v / 255-v: horizontal neighbours anti-correlate
  ImageBuffer anti(16, 16, 1);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const std::uint8_t v = static_cast<std::uint8_t>(i * 16);
      anti.at(i, j) = (j % 2 == 0) ? v : static_cast<std::uint8_t>(255 - v);
    }
  const auto c2 = adjacency_correlation(anti, Direction::kHorizontal, 4096, 1);
  REQUIRE(c2.has_value());
  CHECK(*c2 == doctest::Approx(-1.0).epsilon(1e-12));

  // constant image: undefined, reported distinctly
  const ImageBuffer flat(16, 16, 1);
  CHECK(!adjacency_correlation(flat, Direction::kVertical, 4096, 1).has_value());

  CHECK_THROWS_AS(adjacency_correlation(rowimg, Direction::kHorizontal, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("correlation is deterministic given the seed") {
  const ImageBuffer img = random_gray(32, 32, 9);
  for (Direction d : {Direction::kHorizontal, Direction::kVertical,
                      Direction::kDiagonalUp, Direction::kDiagonalDown}) {
    const auto a = adjacency_correlation(img, d, 2048, 42);
    const auto b = adjacency_correlation(img, d, 2048, 42);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
    CHECK(*a >= -1.0);
    CHECK(*a <= 1.0);
  }
}

TEST_CASE("entropy endpoints") {
  const ImageBuffer flat(16, 16, 1);
  CHECK(shannon_entropy(flat) == 0.0);

  ImageBuffer uniform(16, 16, 1);
  for (std::size_t i = 0; i < 256; ++i)
    uniform.pixels[i] = static_cast<std::uint8_t>(i);
  CHECK(shannon_entropy(uniform) == doctest::Approx(8.0).epsilon(1e-12));

  const ImageBuffer img = random_gray(64, 64, 3);
  const double h = shannon_entropy(img);
  CHECK(h >= 0.0);
  CHECK(h <= 8.0);
}

TEST_CASE("differential metrics on equal and complementary images") {
  const ImageBuffer img = random_gray(32, 32, 17);
  CHECK(npcr(img, img) == 0.0);
  CHECK(uaci(img, img) == 0.0);

  ImageBuffer comp = img;
  for (auto& p : comp.pixels) p = static_cast<std::uint8_t>(255 - p);
  CHECK(npcr(img, comp) == 100.0);

  double want = 0.0;
  for (auto p : img.pixels) want += std::abs(2.0 * p - 255.0);
  want = 100.0 * want / (255.0 * static_cast<double>(img.pixels.size()));
  CHECK(uaci(img, comp) == doctest::Approx(want).epsilon(1e-12));

  CHECK_THROWS_AS(npcr(img, ImageBuffer(16, 16, 1)), std::invalid_argument);
  CHECK(std::isinf(psnr(img, img)));
}

TEST_CASE("published critical constants") {
  const CriticalValues a = critical_values(256, SignificanceLevel::k005);
  CHECK(a.npcr_min == 99.5693);
  CHECK(a.uaci_lo == 33.2824);
  CHECK(a.uaci_hi == 33.6447);
  const CriticalValues b = critical_values(256, SignificanceLevel::k001);
  CHECK(b.npcr_min == 99.5527);
  CHECK(b.uaci_lo == 33.2255);
  CHECK(b.uaci_hi == 33.7016);
  const CriticalValues c = critical_values(256, SignificanceLevel::k0001);
  CHECK(c.npcr_min == 99.5341);
  CHECK(c.uaci_lo == 33.1594);
  CHECK(c.uaci_hi == 33.7677);
  const CriticalValues d = critical_values(512, SignificanceLevel::k005);
  CHECK(d.npcr_min == 99.5893);
  CHECK(d.uaci_lo == 33.3730);
  CHECK(d.uaci_hi == 33.5541);
  const CriticalValues e = critical_values(512, SignificanceLevel::k001);
  CHECK(e.npcr_min == 99.5810);
  CHECK(e.uaci_lo == 33.3445);
  CHECK(e.uaci_hi == 33.5826);
  const CriticalValues f = critical_values(512, SignificanceLevel::k0001);
  CHECK(f.npcr_min == 99.5717);
  CHECK(f.uaci_lo == 33.3115);
  CHECK(f.uaci_hi == 33.6156);

  CHECK_THROWS_WITH_AS(critical_values(128, SignificanceLevel::k005),
                       doctest::Contains("supported: 256, 512"),
                       std::invalid_argument);
}

TEST_CASE("identical ciphertexts fail the gate arithmetic") {
  const ImageBuffer img = random_gray(32, 32, 4);
  const CriticalValues gate = critical_values(256, SignificanceLevel::k005);
  CHECK(npcr(img, img) < gate.npcr_min);
  CHECK(uaci(img, img) < gate.uaci_lo);
}

TEST_CASE("salt and pepper counts") {
  ImageBuffer mid(32, 32, 1);
  for (auto& p : mid.pixels) p = 128;

  CHECK(salt_pepper(mid, 0.0, 7) == mid);

  const ImageBuffer full = salt_pepper(mid, 1.0, 7);
  for (auto p : full.pixels) CHECK((p == 0 || p == 255));

  const ImageBuffer tenth = salt_pepper(mid, 0.1, 7);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < mid.pixels.size(); ++i)
    changed += tenth.pixels[i] != mid.pixels[i];
  CHECK(changed == mid.pixels.size() / 10);

  CHECK_THROWS_AS(salt_pepper(mid, 1.5, 7), std::invalid_argument);
}

TEST_CASE("crop zeroes exactly the rectangle") {
  const ImageBuffer img = random_gray(16, 16, 12);
  const ImageBuffer cropped = crop_zero(img, {4, 5, 6, 7});
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const bool inside = i >= 5 && i < 12 && j >= 4 && j < 10;
      CHECK(cropped.at(i, j) == (inside ? 0 : img.at(i, j)));
    }
  CHECK_THROWS_AS(crop_zero(img, {10, 10, 7, 4}), std::invalid_argument);
}

TEST_CASE("robustness report, zero-strength and noisy attacks") {
  const ImageBuffer img = random_gray(16, 16, 2);

  AttackSpec none;
  none.kind = AttackSpec::Kind::kSaltPepper;
  none.density = 0.0;
  const RobustnessReport clean = robustness_report(img, 0.7, 0.7, none, case_i());
  CHECK(clean.psnr_infinite);
  CHECK(clean.npcr_value == 0.0);
  CHECK(clean.decrypted == img);

  AttackSpec noisy;
  noisy.kind = AttackSpec::Kind::kSaltPepper;
  noisy.density = 0.1;
  noisy.seed = 9;
  const RobustnessReport rep = robustness_report(img, 0.7, 0.7, noisy, case_i());
  CHECK(!rep.psnr_infinite);
  CHECK(rep.psnr_value > 0.0);
  CHECK(rep.npcr_value > 0.0);

  AttackSpec cropped;
  cropped.kind = AttackSpec::Kind::kCrop;
  cropped.rect = {0, 0, 8, 8};
  const RobustnessReport rep2 =
      robustness_report(img, 0.7, 0.7, cropped, case_i());
  CHECK(rep2.decrypted.width == img.width);
}

TEST_CASE("differential gate runs and reports trials") {
  const ImageBuffer img = random_gray(256, 256, 99);
  const DifferentialReport rep =
      differential_gate(img, 0.7, 0.7, 3, SignificanceLevel::k005, 5, case_i());
  CHECK(rep.trials == 3);
  CHECK(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    CHECK(row.npcr_value > 99.0);
    CHECK(row.uaci_value > 32.0);
    CHECK(row.uaci_value < 35.0);
  }
  CHECK_THROWS_AS(differential_gate(random_gray(100, 100, 1), 0.7, 0.7, 1,
                                    SignificanceLevel::k005, 5, case_i()),
                  std::invalid_argument);
}

TEST_CASE("differential gate covers color layers") {
  ImageBuffer img(256, 256, 3);
  std::mt19937_64 rng(2);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() & 0xff);
  const DifferentialReport rep =
      differential_gate(img, 0.7, 0.7, 1, SignificanceLevel::k005, 11, case_i());
  CHECK(rep.rows.size() == 3);  // one row per layer
  for (const auto& row : rep.rows) {
    CHECK(row.npcr_value > 99.0);
    CHECK(row.uaci_value > 32.0);
    CHECK(row.uaci_value < 35.0);
  }
}

}  // TEST_SUITE
