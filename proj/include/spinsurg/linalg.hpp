#pragma once

#include <cstddef>

#include "spinsurg/int_matrix.hpp"

namespace spinsurg {

// Signature of the real symmetric form (number of positive minus number
// of negative eigenvalues), computed exactly by rational congruence
// diagonalization; no floating point is involved.
int signature(const SymIntMatrix& s);

// Rank of the kernel of s over Q, i.e. dim - rank(s).
std::size_t kernel_rank(const SymIntMatrix& s);

}  // namespace spinsurg
