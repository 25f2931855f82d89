#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinsurg/presentations.hpp"
#include "spinsurg/classification.hpp"
#include "spinsurg/forms.hpp"
#include "spinsurg/linalg.hpp"
#include "test_util.hpp"

using namespace spinsurg;

namespace {

SymIntMatrix diag(const std::vector<long>& d) {
  return SymIntMatrix::diagonal(d);
}

// Determinant oracle for the torsion order: |coker| = |det| for
// nonsingular S, computed by Bareiss elimination rather than SNF.
mpz_class torsion_order_oracle(const SymIntMatrix& s) {
  mpz_class d = determinant(s.mat());
  return abs(d);
}

}  // namespace

TEST_CASE("presented group of simple matrices") {
  const auto zero3 = presented_group(SymIntMatrix::zeros(3));
  CHECK(zero3.free_rank == 3);
  CHECK(zero3.torsion.is_trivial());

  const auto six = presented_group(diag({6, 0}));
  CHECK(six.free_rank == 1);
  REQUIRE(six.torsion.rank() == 1);
  CHECK(six.torsion.factors()[0] == 6);

  const auto g8 = presented_group(testutil::gamma8());
  CHECK(g8.free_rank == 0);
  CHECK(g8.torsion.is_trivial());

  const auto two = presented_group(diag({2}));
  CHECK(two.free_rank == 0);
  REQUIRE(two.torsion.factors().size() == 1);
  CHECK(two.torsion.factors()[0] == 2);

  const auto empty = presented_group(SymIntMatrix());
  CHECK(empty.free_rank == 0);
  CHECK(empty.torsion.is_trivial());

  const auto h = presented_group(testutil::hopf());
  CHECK(h.free_rank == 0);
  CHECK(h.torsion.is_trivial());
}

TEST_CASE("presented group against rank and determinant oracles") {
  std::mt19937_64 rng(2201);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto s = testutil::random_symmetric(rng, n, -4, 4);
    const auto pres = presented_group(s);
    CHECK(pres.free_rank == kernel_rank(s));
    if (pres.free_rank == 0)
      CHECK(pres.torsion.order() == torsion_order_oracle(s));
    CHECK(pres.generator_lifts.rows() == n);
    CHECK(pres.generator_lifts.cols() == pres.torsion.rank());
  }
}

TEST_CASE("presented pairing on small lens-type matrices") {
  const auto b2 = presented_pairing(diag({2}));
  REQUIRE(b2.group().factors() == std::vector<mpz_class>{2});
  CHECK(b2.gram_at(0, 0) == QZ(1, 2));

  const auto b3 = presented_pairing(diag({3}));
  REQUIRE(b3.group().factors() == std::vector<mpz_class>{3});
  CHECK(b3.gram_at(0, 0) == QZ(1, 3));

  // Negative framing flips the residue class: -1/3 = 2/3, which is not
  // isomorphic to 1/3 (automorphisms scale by unit squares).
  const auto bm3 = presented_pairing(diag({-3}));
  CHECK(bm3.gram_at(0, 0) == QZ(2, 3));

  CHECK(presented_pairing(testutil::gamma8()).group().is_trivial());
  CHECK(presented_pairing(SymIntMatrix::zeros(2)).group().is_trivial());
}

TEST_CASE("presented pairing is symmetric and nondegenerate") {
  std::mt19937_64 rng(2202);
  int nontrivial = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto s = testutil::random_symmetric(rng, n, -3, 3);
    const auto b = presented_pairing(s);
    const std::size_t t = b.group().rank();
    if (t > 0) ++nontrivial;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        CHECK(b.gram_at(i, j) == b.gram_at(j, i));
    if (b.group().order() <= 4096) CHECK(is_nondegenerate(b));
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("wu classes of small matrices") {
  auto bits = [](std::vector<GF2Vector> v) { return v; };

  const auto w2 = bits(wu_classes_mod2(diag({2})));
  REQUIRE(w2.size() == 2);  // condition vacuous mod 2
  const auto w3 = bits(wu_classes_mod2(diag({3})));
  REQUIRE(w3.size() == 1);
  CHECK(w3[0] == GF2Vector{1});

  CHECK(wu_classes_mod2(SymIntMatrix::zeros(3)).size() == 8);
  CHECK(wu_classes_mod2(testutil::hopf()).size() == 1);
  CHECK(wu_classes_mod2(testutil::gamma8()).size() == 1);

  // Every solution satisfies the integer characteristic condition.
  std::mt19937_64 rng(2203);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = testutil::random_symmetric(rng, 1 + trial % 5, -4, 4);
    for (const auto& w : wu_classes_mod2(s))
      CHECK(is_wu_class(s, WuClass::from_bits(w)));
  }
}

TEST_CASE("wu class lift round trip") {
  const auto w = WuClass::from_longs({3, -2, 5});
  CHECK(w.bits() == GF2Vector{1, 0, 1});
  const auto v = WuClass::from_bits({1, 0, 1});
  CHECK(v.entries == std::vector<mpz_class>{1, 0, 1});
}

TEST_CASE("presented quadratic on generators of lens spaces") {
  const auto q0 = presented_quadratic(diag({2}), WuClass::from_longs({0}));
  REQUIRE(q0.qgen().size() == 1);
  CHECK(q0.qgen()[0] == QZ(1, 4));

  const auto q1 = presented_quadratic(diag({2}), WuClass::from_longs({1}));
  CHECK(q1.qgen()[0] == QZ(3, 4));

  const auto q3 = presented_quadratic(diag({-3}), WuClass::from_longs({1}));
  CHECK(q3.qgen()[0] == QZ(1, 3));

  // w = 0 fails the characteristic condition for odd diagonal.
  CHECK_THROWS_AS(presented_quadratic(diag({-3}), WuClass::from_longs({0})),
                  precondition_error);
}

TEST_CASE("presented quadratic refines the presented pairing") {
  std::mt19937_64 rng(2204);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testutil::random_symmetric(rng, 1 + trial % 4, -3, 3);
    const auto b = presented_pairing(s);
    if (b.group().order() > 512) continue;
    const auto refinements = quad_refinements(b);
    for (const auto& wbits : wu_classes_mod2(s)) {
      const auto q = presented_quadratic(s, WuClass::from_bits(wbits));
      CHECK(q.pairing() == b);
      // The form induced by any Wu class is one of the refinements the
      // torsion pairing admits.
      bool listed = false;
      for (const auto& r : refinements) listed = listed || r == q;
      CHECK(listed);
    }
  }
}

TEST_CASE("presented quadratic depends on the wu class only mod 2F") {
  std::mt19937_64 rng(2205);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto s = testutil::random_symmetric(rng, n, -4, 4);
    const auto ws = wu_classes_mod2(s);
    auto w = WuClass::from_bits(ws[trial % ws.size()]);
    auto w2 = w;
    for (auto& e : w2.entries) e += 2 * shift(rng);
    CHECK(is_wu_class(s, w2));
    CHECK(presented_quadratic(s, w) == presented_quadratic(s, w2));
  }
}

TEST_CASE("signature minus self-pairing agrees with the gauss sum") {
  // Pinned values first: lens spaces and the two unimodular examples.
  const auto r0 = van_der_blij(diag({2}), WuClass::from_longs({0}));
  CHECK(r0.lhs == GaussBrown::finite(1));
  CHECK(r0.rhs_mod8 == 1);
  CHECK(r0.equal);

  const auto r1 = van_der_blij(diag({2}), WuClass::from_longs({1}));
  CHECK(r1.lhs == GaussBrown::finite(7));
  CHECK(r1.rhs_mod8 == 7);
  CHECK(r1.equal);

  const auto rg = van_der_blij(testutil::gamma8(),
                               WuClass::from_longs({0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(rg.lhs == GaussBrown::finite(0));
  CHECK(rg.rhs_mod8 == 0);  // signature 8 reduces to 0
  CHECK(rg.equal);

  const auto rm3 = van_der_blij(diag({-3}), WuClass::from_longs({1}));
  CHECK(rm3.lhs == GaussBrown::finite(2));
  CHECK(rm3.equal);
}

TEST_CASE("van der blij equality on random matrices and all wu classes") {
  std::mt19937_64 rng(2206);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto s = testutil::random_symmetric(rng, n, -4, 4);
    const auto pres = presented_group(s);
    if (!pres.torsion.is_trivial() &&
        pres.torsion.order() > 4096)
      continue;  // keep the gauss sums cheap in the unit suite
    for (const auto& wbits : wu_classes_mod2(s)) {
      const auto rep = van_der_blij(s, WuClass::from_bits(wbits));
      CHECK(rep.equal);
      ++checked;
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("presentation invariants survive congruence") {
  std::mt19937_64 rng(2207);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto s = testutil::random_symmetric(rng, n, -3, 3);
    const auto p = testutil::random_unimodular(rng, n);
    const auto s2 = congruent_transform(s, p);

    const auto a = presented_group(s);
    const auto b = presented_group(s2);
    CHECK(a.free_rank == b.free_rank);
    CHECK(a.torsion.factors() == b.torsion.factors());

    if (a.torsion.order() > 512) continue;
    const auto w = brute_force_iso(presented_pairing(s), presented_pairing(s2));
    CHECK(w.found);
    CHECK(witness_is_pairing_iso(presented_pairing(s), presented_pairing(s2),
                                 w));
  }
}

TEST_CASE("wu classes transport along congruence") {
  // w characteristic for S iff P^{-1} w characteristic for P^T S P; the
  // induced quadratic forms are isomorphic.
  std::mt19937_64 rng(2208);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto s = testutil::random_symmetric(rng, n, -3, 3);
    if (presented_group(s).torsion.order() > 512) continue;
    const auto p = testutil::random_unimodular(rng, n);
    const auto s2 = congruent_transform(s, p);
    const auto pinv = unimodular_inverse(p);

    for (const auto& wbits : wu_classes_mod2(s)) {
      const auto w = WuClass::from_bits(wbits);
      WuClass w2;
      w2.entries.resize(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          w2.entries[i] += pinv.at(i, j) * w.entries[j];
      REQUIRE(is_wu_class(s2, w2));
      const auto qa = presented_quadratic(s, w);
      const auto qb = presented_quadratic(s2, w2);
      const auto wit = brute_force_iso(qa, qb);
      CHECK(wit.found);
      CHECK(witness_is_quadratic_iso(qa, qb, wit));
    }
  }
}

TEST_CASE("unimodular stabilization preserves the presented form") {
  std::mt19937_64 rng(2209);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto s = testutil::random_symmetric(rng, n, -3, 3);
    if (presented_group(s).torsion.order() > 512) continue;
    const long unit = (trial % 2 == 0) ? 1 : -1;
    const auto s2 = s.direct_sum(diag({unit}));

    const auto ws = wu_classes_mod2(s);
    const auto w = WuClass::from_bits(ws[trial % ws.size()]);
    WuClass w2 = w;
    w2.entries.push_back(1);  // the new block is odd, its bit must be 1
    REQUIRE(is_wu_class(s2, w2));

    CHECK(presented_group(s).torsion.factors() ==
          presented_group(s2).torsion.factors());
    const auto qa = presented_quadratic(s, w);
    const auto qb = presented_quadratic(s2, w2);
    const auto wit = brute_force_iso(qa, qb);
    CHECK(wit.found);
    CHECK(witness_is_quadratic_iso(qa, qb, wit));
  }
}
