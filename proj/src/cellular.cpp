#include "chaoscrypt/cellular.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoscrypt {

namespace {

void check_rule(int rule) {
  if (rule < 0 || rule > 255)
    throw std::invalid_argument("cellular: rule must be in [0, 255]");
}

}  // namespace

BitVector eca_step(const BitVector& v, int rule) {
  check_rule(rule);
  const std::size_t n = v.size();
  if (n < 3)
    throw std::invalid_argument("eca_step: need at least 3 cells");
  BitVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int left = v[(i + n - 1) % n] & 1;
    const int center = v[i] & 1;
    const int right = v[(i + 1) % n] & 1;
    out[i] = static_cast<std::uint8_t>((rule >> (4 * left + 2 * center + right)) & 1);
  }
  return out;
}

std::pair<BitVector, BitVector> phi(BitVector x, BitVector y, int rule,
                                    std::size_t rep) {
  if (x.size() != y.size())
    throw std::invalid_argument("phi: input lengths differ");
  for (std::size_t t = 0; t < rep; ++t) {
    BitVector next = eca_step(y, rule);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] ^= x[i] & 1;
    x = std::move(y);
    y = std::move(next);
  }
  return {std::move(x), std::move(y)};
}

std::pair<BitVector, BitVector> phi_inv(BitVector x, BitVector y, int rule,
                                        std::size_t rep) {
  if (x.size() != y.size())
    throw std::invalid_argument("phi_inv: input lengths differ");
  for (std::size_t t = 0; t < rep; ++t) {
    BitVector prev = eca_step(x, rule);
    for (std::size_t i = 0; i < prev.size(); ++i) prev[i] ^= y[i] & 1;
    y = std::move(x);
    x = std::move(prev);
  }
  return {std::move(x), std::move(y)};
}

int rule_from_value(double v) {
  return static_cast<int>(std::llround(std::floor(v * 100.0))) % 256;
}

std::vector<int> rules_from_chaos(const ChaosState& q, double r,
                                  std::size_t count, const ChaosConfig& cfg) {
  if (count < 1)
    throw std::invalid_argument("rules_from_chaos: count must be >= 1");
  const std::vector<double> vals = chi(q, r, count, cfg);
  std::vector<int> rules(count);
  for (std::size_t i = 0; i < count; ++i) rules[i] = rule_from_value(vals[i]);
  return rules;
}

namespace {

BitMatrix ca_apply(const BitMatrix& m, const ChaosState& q, double r,
                   const ChaosConfig& cfg, bool decrypt) {
  const std::size_t s = m.rows();
  const std::size_t c = m.cols();
  if (c == 0 || c % 2 != 0)
    throw std::invalid_argument("ca matrix: column count must be even");
  if (s < 3)
    throw std::invalid_argument("ca matrix: need at least 3 rows");
  const std::vector<int> rules = rules_from_chaos(q, r, c / 2, cfg);

  BitMatrix out = m;
  BitVector x(s), y(s);
  for (std::size_t t = 0; t < c / 2; ++t) {
    const std::size_t d0 = 2 * t, d1 = 2 * t + 1;
    for (std::size_t i = 0; i < s; ++i) {
      x[i] = m(i, (i + d0) % c);
      y[i] = m(i, (i + d1) % c);
    }
    auto [xr, yr] = decrypt ? phi_inv(x, y, rules[t], 1)
                            : phi(x, y, rules[t], 1);
    for (std::size_t i = 0; i < s; ++i) {
      out(i, (i + d0) % c) = xr[i];
      out(i, (i + d1) % c) = yr[i];
    }
  }
  return out;
}

}  // namespace

BitMatrix ca_encrypt_matrix(const BitMatrix& m, const ChaosState& q, double r,
                            const ChaosConfig& cfg) {
  return ca_apply(m, q, r, cfg, false);
}

BitMatrix ca_decrypt_matrix(const BitMatrix& m, const ChaosState& q, double r,
                            const ChaosConfig& cfg) {
  return ca_apply(m, q, r, cfg, true);
}

}  // namespace chaoscrypt
