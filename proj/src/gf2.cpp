#include "spinsurg/gf2.hpp"

namespace spinsurg {

std::uint64_t GF2AffineSolution::count() const {
  if (!solvable) return 0;
  if (kernel_basis.size() >= 64) throw size_cap_error("GF2: solution count overflows");
  return std::uint64_t{1} << kernel_basis.size();
}

std::vector<GF2Vector> GF2AffineSolution::enumerate(std::uint64_t cap) const {
  if (!solvable) return {};
  if (kernel_basis.size() >= 64 || count() > cap)
    throw size_cap_error("GF2: too many solutions to enumerate");
  std::vector<GF2Vector> out;
  out.reserve(count());
  const std::uint64_t total = count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    GF2Vector x = particular;
    for (std::size_t b = 0; b < kernel_basis.size(); ++b)
      if (mask >> b & 1)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= kernel_basis[b][i];
    out.push_back(std::move(x));
  }
  return out;
}

GF2AffineSolution solve_gf2_affine(const GF2Matrix& a, const GF2Vector& b) {
  if (b.size() != a.rows())
    throw precondition_error("solve_gf2_affine: rhs size mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  GF2Matrix m = a;
  GF2Vector rhs = b;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      std::swap(rhs[p], rhs[r]);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) ^= m.at(r, j);
      rhs[i] ^= rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  GF2AffineSolution sol;
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i]) return sol;  // inconsistent; solvable stays false
  sol.solvable = true;

  std::vector<std::uint8_t> is_pivot(cols, 0);
  for (const auto c : pivot_col) is_pivot[c] = 1;

  sol.particular.assign(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    sol.particular[pivot_col[i]] = rhs[i];

  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    GF2Vector k(cols, 0);
    k[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      k[pivot_col[i]] = m.at(i, c);
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

}  // namespace spinsurg
