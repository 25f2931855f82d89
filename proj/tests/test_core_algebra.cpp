#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinsurg/errors.hpp"
#include "spinsurg/gf2.hpp"
#include "spinsurg/int_matrix.hpp"
#include "spinsurg/linalg.hpp"
#include "spinsurg/qz.hpp"
#include "spinsurg/snf.hpp"
#include "test_util.hpp"

using namespace spinsurg;
using testutil::gamma8;
using testutil::hopf;

namespace {

void check_snf_postconditions(const IntMatrix& m) {
  const SmithNormalForm snf = smith_normal_form(m);
  CHECK(snf.u * m * snf.v == snf.d);
  CHECK(snf.u * snf.u_inv == IntMatrix::identity(m.rows()));
  CHECK(snf.u_inv * snf.u == IntMatrix::identity(m.rows()));
  CHECK(snf.v * snf.v_inv == IntMatrix::identity(m.cols()));
  CHECK(is_unimodular(snf.u));
  CHECK(is_unimodular(snf.v));
  for (std::size_t i = 0; i < snf.d.rows(); ++i)
    for (std::size_t j = 0; j < snf.d.cols(); ++j)
      if (i != j) CHECK(snf.d.at(i, j) == 0);
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] == 0)
      CHECK(diag[i + 1] == 0);
    else
      CHECK(diag[i + 1] % diag[i] == 0);
  }
}

}  // namespace

TEST_CASE("QZ canonical representative") {
  CHECK(QZ(3, 2) == QZ(1, 2));
  CHECK(QZ(-1, 3) == QZ(2, 3));
  CHECK(QZ(4, 2).is_zero());
  CHECK(QZ(6, 4) == QZ(1, 2));
  CHECK(QZ(1, -3) == QZ(2, 3));
  CHECK(QZ().str() == "0/1");
  CHECK(QZ(5, 10).str() == "1/2");
  CHECK(QZ(2, 3).order() == 3);
  CHECK_THROWS_AS(QZ(1, 0), precondition_error);
}

TEST_CASE("QZ parse/print round-trip") {
  for (const char* s : {"0/1", "1/2", "2/3", "7/12", "13/64"}) {
    CHECK(QZ::parse(s).str() == s);
  }
  CHECK(QZ::parse("5") == QZ());
  CHECK(QZ::parse("-1/4") == QZ(3, 4));
  CHECK_THROWS_AS(QZ::parse("x/2"), parse_error);
}

TEST_CASE("QZ arithmetic laws (randomized)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 24);
  for (int t = 0; t < 300; ++t) {
    const QZ a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == QZ());
    CHECK(a + QZ() == a);
    CHECK(a.times(a.den()).is_zero());
  }
}

TEST_CASE("smith_normal_form examples") {
  {
    const auto snf = smith_normal_form(IntMatrix::identity(1));
    CHECK(snf.d == IntMatrix::identity(1));
    CHECK(snf.u == IntMatrix::identity(1));
    CHECK(snf.v == IntMatrix::identity(1));
  }
  {
    const auto snf = smith_normal_form(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(snf.diagonal() == std::vector<mpz_class>{1, 1});
    check_snf_postconditions(IntMatrix::from_rows({{0, 1}, {1, 0}}));
  }
  {
    const auto snf =
        smith_normal_form(IntMatrix::from_rows({{6, 0}, {0, 0}}));
    CHECK(snf.diagonal() == std::vector<mpz_class>{6, 0});
  }
  {
    // 2x + 4y type relations: gcd pulls to the front.
    const auto snf = smith_normal_form(IntMatrix::from_rows({{2, 4}, {4, 2}}));
    CHECK(snf.diagonal() == std::vector<mpz_class>{2, 6});
    check_snf_postconditions(IntMatrix::from_rows({{2, 4}, {4, 2}}));
  }
  {
    const auto snf = smith_normal_form(IntMatrix(0, 0));
    CHECK(snf.d.rows() == 0);
  }
}

TEST_CASE("smith_normal_form postconditions (randomized)") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int t = 0; t < 120; ++t) {
    check_snf_postconditions(testutil::random_matrix(rng, dim(rng), dim(rng)));
  }
  // Rectangular shapes too.
  for (int t = 0; t < 40; ++t) {
    check_snf_postconditions(
        testutil::random_matrix(rng, dim(rng), dim(rng)));
  }
}

TEST_CASE("signature examples") {
  CHECK(signature(SymIntMatrix::diagonal({3, -1})) == 0);
  CHECK(signature(gamma8()) == 8);
  CHECK(signature(hopf()) == 0);
  CHECK(signature(SymIntMatrix()) == 0);
  CHECK(signature(SymIntMatrix::zeros(4)) == 0);
}

TEST_CASE("signature agrees with characteristic-polynomial oracle") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (int t = 0; t < 150; ++t) {
    const auto s = testutil::random_symmetric(rng, dim(rng));
    CHECK(signature(s) == testutil::signature_oracle(s));
  }
}

TEST_CASE("signature congruence invariance and additivity") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 80; ++t) {
    const auto s = testutil::random_symmetric(rng, dim(rng));
    const auto p = testutil::random_unimodular(rng, s.dim());
    CHECK(signature(congruent_transform(s, p)) == signature(s));
    const auto s2 = testutil::random_symmetric(rng, dim(rng));
    CHECK(signature(s.direct_sum(s2)) == signature(s) + signature(s2));
  }
}

TEST_CASE("congruent_transform examples") {
  const auto s = SymIntMatrix::diagonal({1, 1});
  CHECK(congruent_transform(s, IntMatrix::identity(2)) == s);
  CHECK(congruent_transform(s, IntMatrix::from_rows({{1, 1}, {0, 1}})) ==
        SymIntMatrix::from_rows({{1, 1}, {1, 2}}));
  CHECK(congruent_transform(hopf(), IntMatrix::from_rows({{0, 1}, {1, 0}})) ==
        hopf());
  CHECK_THROWS_AS(
      congruent_transform(s, IntMatrix::from_rows({{2, 0}, {0, 1}})),
      precondition_error);
  CHECK_THROWS_AS(
      congruent_transform(s, IntMatrix::from_rows({{1, 1}, {1, 1}})),
      precondition_error);
}

TEST_CASE("kernel_rank examples and rank identity") {
  CHECK(kernel_rank(SymIntMatrix::zeros(3)) == 3);
  CHECK(kernel_rank(gamma8()) == 0);
  CHECK(kernel_rank(SymIntMatrix::from_rows(
            {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})) == 1);

  std::mt19937_64 rng(15);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int t = 0; t < 60; ++t) {
    const auto s = testutil::random_symmetric(rng, dim(rng));
    std::size_t rank = 0;
    for (const auto& d : smith_normal_form(s.mat()).diagonal())
      if (d != 0) ++rank;
    CHECK(kernel_rank(s) + rank == s.dim());
  }
}

TEST_CASE("determinant and unimodularity") {
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(gamma8().mat()) == 1);
  CHECK(is_unimodular(IntMatrix::identity(3)));
  CHECK(!is_unimodular(IntMatrix::from_rows({{2}})));
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    const auto p = testutil::random_unimodular(rng, 5);
    CHECK(is_unimodular(p));
    CHECK(p * unimodular_inverse(p) == IntMatrix::identity(5));
  }
}

TEST_CASE("solve_gf2_affine examples") {
  {
    GF2Matrix a(2, 2);
    a.at(0, 0) = a.at(1, 1) = 1;
    const auto sol = solve_gf2_affine(a, GF2Vector{1, 0});
    REQUIRE(sol.solvable);
    CHECK(sol.count() == 1);
    CHECK(sol.particular == GF2Vector{1, 0});
  }
  {
    const auto sol = solve_gf2_affine(GF2Matrix(3, 3), GF2Vector{0, 0, 0});
    REQUIRE(sol.solvable);
    CHECK(sol.count() == 8);
    CHECK(sol.enumerate().size() == 8);
  }
  {
    GF2Matrix a(2, 2);
    a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = a.at(1, 1) = 1;
    const auto sol = solve_gf2_affine(a, GF2Vector{1, 1});
    REQUIRE(sol.solvable);
    const auto all = sol.enumerate();
    REQUIRE(all.size() == 2);
    CHECK(((all[0] == GF2Vector{1, 0} && all[1] == GF2Vector{0, 1}) ||
           (all[0] == GF2Vector{0, 1} && all[1] == GF2Vector{1, 0})));
  }
  {
    GF2Matrix a(2, 1);
    a.at(0, 0) = 1;
    const auto sol = solve_gf2_affine(a, GF2Vector{0, 1});
    CHECK(!sol.solvable);
    CHECK(sol.count() == 0);
    CHECK(sol.enumerate().empty());
  }
}

TEST_CASE("solve_gf2_affine matches exhaustive enumeration (randomized)") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int t = 0; t < 120; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    GF2Matrix a(r, c);
    GF2Vector b(r);
    for (std::size_t i = 0; i < r; ++i) {
      b[i] = static_cast<std::uint8_t>(bit(rng));
      for (std::size_t j = 0; j < c; ++j)
        a.at(i, j) = static_cast<std::uint8_t>(bit(rng));
    }
    std::vector<GF2Vector> expect;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
      GF2Vector x(c);
      for (std::size_t j = 0; j < c; ++j) x[j] = mask >> j & 1;
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc ^= a.at(i, j) & x[j];
        ok = acc == b[i];
      }
      if (ok) expect.push_back(std::move(x));
    }
    const auto sol = solve_gf2_affine(a, b);
    auto got = sol.enumerate();
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
  }
}

TEST_CASE("is_even examples") {
  CHECK(hopf().is_even());
  CHECK(SymIntMatrix::diagonal({2}).is_even());
  CHECK(!SymIntMatrix::diagonal({1}).is_even());
  CHECK(gamma8().is_even());
  CHECK(SymIntMatrix().is_even());
}

TEST_CASE("SymIntMatrix construction guards") {
  CHECK_THROWS_AS(SymIntMatrix(IntMatrix::from_rows({{1, 2}, {3, 4}})),
                  precondition_error);
  CHECK_THROWS_AS(SymIntMatrix(IntMatrix(2, 3)), precondition_error);
  CHECK(SymIntMatrix().dim() == 0);
}
