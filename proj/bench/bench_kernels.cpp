// Timing comparison of the enumeration kernels: the OpenMP histogram
// sweep vs its serial order, the compiled Gauss sum vs the exact
// rational reference, and the brute-force isomorphism search in both
// scheduling modes.  Informational output; exits nonzero only if the
// serial and parallel paths disagree.

#include <omp.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spinsurg/classification.hpp"
#include "spinsurg/compiled.hpp"
#include "spinsurg/forms.hpp"

using namespace spinsurg;

namespace {

QuadraticForm diagonal_form(long factor, std::size_t rank, long qnum,
                            long qden) {
  FiniteAbelianGroup g(std::vector<mpz_class>(rank, factor));
  std::vector<std::vector<QZ>> gram(rank, std::vector<QZ>(rank));
  std::vector<QZ> qgen(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    qgen[i] = QZ(qnum, qden);
    gram[i][i] = QZ(2 * qnum, qden);
  }
  return QuadraticForm(g, qgen, gram);
}

// Congruent scramble of a diagonal pairing on (Z_p)^rank by a random
// invertible change of basis mod p.
LinkingPairing scrambled_diagonal(long p, std::size_t rank,
                                  const std::vector<long>& diag_num,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(0, p - 1);
  std::vector<std::vector<long>> m(rank, std::vector<long>(rank));
  auto det_nonzero = [&]() {
    // Gaussian elimination mod p (p prime).
    auto a = m;
    for (std::size_t c = 0; c < rank; ++c) {
      std::size_t piv = c;
      while (piv < rank && a[piv][c] % p == 0) ++piv;
      if (piv == rank) return false;
      std::swap(a[piv], a[c]);
      for (std::size_t r = c + 1; r < rank; ++r) {
        while (a[r][c] % p != 0)
          for (std::size_t k = 0; k < rank; ++k)
            a[r][k] = (a[r][k] + a[c][k]) % p;
      }
    }
    return true;
  };
  do {
    for (auto& row : m)
      for (auto& v : row) v = d(rng);
  } while (!det_nonzero());
  FiniteAbelianGroup g(std::vector<mpz_class>(rank, p));
  std::vector<std::vector<QZ>> gram(rank, std::vector<QZ>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      long acc = 0;
      for (std::size_t k = 0; k < rank; ++k)
        acc = (acc + diag_num[k] * m[k][i] % p * m[k][j]) % p;
      gram[i][j] = QZ(acc, p);
    }
  return LinkingPairing(g, gram);
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = omp_get_wtime();
    f();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

int check_failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::printf("  ** serial/parallel disagreement: %s\n", what);
    ++check_failures;
  }
}

void bench_histogram() {
  std::printf("histogram sweep (order 65536), best of 20:\n");
  struct Case {
    const char* label;
    QuadraticForm q;
  } cases[] = {
      {"Z4^8,  rank 8 ", diagonal_form(4, 8, 1, 4)},
      {"Z2^16, rank 16", diagonal_form(2, 16, 1, 4)},
  };
  for (auto& c : cases) {
    auto cq = detail::compile_quadratic(c.q);
    std::vector<std::uint64_t> hs, hp;
    double ts = best_of(20, [&] { hs = detail::value_histogram(cq, false); });
    double tp = best_of(20, [&] { hp = detail::value_histogram(cq, true); });
    expect(hs == hp, "histogram counts");
    std::printf("  %s  serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                c.label, ts * 1e3, tp * 1e3, ts / tp);
  }
}

void bench_gauss_reference() {
  std::printf("Gauss sum, compiled vs exact rational reference:\n");
  struct Case {
    const char* label;
    QuadraticForm q;
    int reps;
  } cases[] = {
      {"Z8^4, order 4096 ", diagonal_form(8, 4, 1, 8), 10},
      {"Z4^8, order 65536", diagonal_form(4, 8, 1, 4), 3},
  };
  for (auto& c : cases) {
    GaussBrown fast, exact;
    double tf = best_of(c.reps, [&] { fast = gauss_brown(c.q); });
    double te = best_of(c.reps, [&] { exact = gauss_brown_reference(c.q); });
    expect(fast == exact, "Gauss sum value");
    std::printf(
        "  %s  compiled %8.3f ms   reference %8.3f ms   (both = %s)\n",
        c.label, tf * 1e3, te * 1e3, fast.str().c_str());
  }
}

void bench_brute_force() {
  std::printf("brute-force pairing isomorphism on Z3^5 (order 243):\n");
  auto a = scrambled_diagonal(3, 5, {1, 1, 1, 1, 1}, 1);
  auto b_iso = scrambled_diagonal(3, 5, {1, 1, 1, 1, 1}, 2);
  auto b_non = scrambled_diagonal(3, 5, {1, 1, 1, 1, 2}, 3);
  struct Case {
    const char* label;
    const LinkingPairing* rhs;
  } cases[] = {{"isomorphic pair    ", &b_iso},
               {"non-isomorphic pair", &b_non}};
  for (auto& c : cases) {
    IsoWitness ws, wp;
    IsoOptions serial{.brute_force_cap = kBruteForceCap, .parallel = false};
    IsoOptions parallel{.brute_force_cap = kBruteForceCap, .parallel = true};
    double ts = best_of(3, [&] { ws = brute_force_iso(a, *c.rhs, serial); });
    double tp = best_of(3, [&] { wp = brute_force_iso(a, *c.rhs, parallel); });
    expect(ws.found == wp.found, "search verdict");
    if (ws.found)
      expect(witness_is_pairing_iso(a, *c.rhs, ws) &&
                 witness_is_pairing_iso(a, *c.rhs, wp),
             "witness validity");
    std::printf("  %s  serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                c.label, ts * 1e3, tp * 1e3, ts / tp);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::string only = argc > 1 ? argv[1] : "";
  if (only.empty() || only == "histogram") bench_histogram();
  if (only.empty() || only == "gauss") bench_gauss_reference();
  if (only.empty() || only == "brute") bench_brute_force();
  return check_failures;
}
