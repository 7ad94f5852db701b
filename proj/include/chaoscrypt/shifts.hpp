#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chaoscrypt/mat.hpp"

namespace chaoscrypt {

using PathCell = std::pair<std::size_t, std::size_t>;  // (row, col), 0-based

// The fixed Hamiltonian traversal over an n x n grid used by ults: first
// row, main anti-diagonal down to (n,1), last row, last column upward, then
// the remaining cells by anti-diagonals. Cached per n; thread-safe.
const std::vector<PathCell>& traversal_path(std::size_t n);

ByteMatrix transposed(const ByteMatrix& a);
ByteMatrix flipped_lr(const ByteMatrix& a);
ByteMatrix flipped_ud(const ByteMatrix& a);

// Cyclic shift of the entries k positions forward along the traversal path.
// ults(a, -k) is the exact inverse. Requires square a with n >= 4.
ByteMatrix ults(const ByteMatrix& a, long long k);

// Composed shifts: ults interleaved with transpose and flips.
ByteMatrix fcs(const ByteMatrix& a, long long n1, long long n2, long long n3,
               long long n4);
ByteMatrix fcs_inv(const ByteMatrix& a, long long n1, long long n2,
                   long long n3, long long n4);
ByteMatrix scs(const ByteMatrix& a, long long n1, long long n2, long long n3,
               long long n4);
ByteMatrix scs_inv(const ByteMatrix& a, long long n1, long long n2,
                   long long n3, long long n4);

struct Std3Result {
  ByteMatrix a, b, c;
};

// Block-level relocation across three equal square matrices: blocks of the
// concatenated block vector V are rearranged as W[j] = V[perm[j]]. Applying
// std3 again with the inverse permutation restores the inputs.
Std3Result std3(const ByteMatrix& a, const ByteMatrix& b, const ByteMatrix& c,
                const std::vector<std::size_t>& perm);

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& p);

}  // namespace chaoscrypt
