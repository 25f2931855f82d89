#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinsurg/errors.hpp"

namespace spinsurg {

// Vector over GF(2); entries are 0 or 1.
using GF2Vector = std::vector<std::uint8_t>;

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> a_;
};

// Solution set of a*x = b over GF(2), described by one particular
// solution plus a basis of the kernel of a.  The empty solution set is
// a value (solvable == false), not an error.
struct GF2AffineSolution {
  bool solvable = false;
  GF2Vector particular;
  std::vector<GF2Vector> kernel_basis;

  // Number of solutions is 2^kernel_basis.size() when solvable.
  std::uint64_t count() const;
  // All solutions, deterministic order; throws size_cap_error if the
  // count exceeds cap.
  std::vector<GF2Vector> enumerate(std::uint64_t cap = kEnumerationCap) const;
};

GF2AffineSolution solve_gf2_affine(const GF2Matrix& a, const GF2Vector& b);

}  // namespace spinsurg
