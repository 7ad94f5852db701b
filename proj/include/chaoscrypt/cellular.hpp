#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/mat.hpp"

namespace chaoscrypt {

using BitVector = std::vector<std::uint8_t>;  // entries in {0, 1}

// One step of an elementary CA with triple neighborhoods and periodic
// boundary: cell i's next state is bit (4*left + 2*center + right) of the
// rule's truth table. Requires length >= 3 and rule in [0, 255].
BitVector eca_step(const BitVector& v, int rule);

// Second-order reversible CA: rep applications of
// (x, y) -> (y, eca_step(y, rule) XOR x).
std::pair<BitVector, BitVector> phi(BitVector x, BitVector y, int rule,
                                    std::size_t rep);

// Exact inverse: rep applications of
// (x', y') -> (eca_step(x', rule) XOR y', x').
std::pair<BitVector, BitVector> phi_inv(BitVector x, BitVector y, int rule,
                                        std::size_t rep);

// floor(v * 100) mod 256 -- the rule a two-decimal-truncated chaos sample
// encodes (range 0..99 for v in [0,1)).
int rule_from_value(double v);

// Rule schedule from the two-decimal-truncated chaos matrix, rows
// concatenated, one rule per entry.
std::vector<int> rules_from_chaos(const ChaosState& q, double r,
                                  std::size_t count, const ChaosConfig& cfg);

// Diagonal diffusion: the c wrapped diagonals of the s x c bit matrix are
// paired (0,1), (2,3), ... and each pair runs one phi step under the
// chaos-derived rule schedule. Requires even c and s >= 3.
BitMatrix ca_encrypt_matrix(const BitMatrix& m, const ChaosState& q, double r,
                            const ChaosConfig& cfg);
BitMatrix ca_decrypt_matrix(const BitMatrix& m, const ChaosState& q, double r,
                            const ChaosConfig& cfg);

}  // namespace chaoscrypt
