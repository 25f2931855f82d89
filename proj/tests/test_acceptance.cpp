// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Usage: test_acceptance [n ...]  (default: run all ten).  The exit
// code is the number of failed criteria.  Each criterion has a runtime
// budget enforced here, so a pass certifies both the result and the
// speed.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpus_util.hpp"
#include "spinsurg/classification.hpp"
#include "spinsurg/linalg.hpp"
#include "spinsurg/presentations.hpp"
#include "spinsurg/surgery.hpp"
#include "test_util.hpp"

namespace {

using namespace spinsurg;

std::string group_tag(const FiniteAbelianGroup& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.rank(); ++i)
    s += (i ? "," : "") + g.factors()[i].get_str();
  return s + "]";
}

// --- 1: Gauss sum equals signature defect on random lattices ---------

bool c1_van_der_blij(std::string& detail) {
  std::mt19937_64 rng(20260801);
  std::uniform_int_distribution<std::size_t> dims(1, 6);
  std::size_t matrices = 0, checks = 0;
  while (matrices < 200) {
    auto s = testutil::random_symmetric(rng, dims(rng), -5, 5);
    if (presented_group(s).torsion.order() > 65536) continue;
    ++matrices;
    for (const auto& bits : wu_classes_mod2(s)) {
      ++checks;
      if (!van_der_blij(s, WuClass::from_bits(bits)).equal) {
        detail = "identity fails on a " + std::to_string(s.dim()) +
                 "-dimensional matrix";
        return false;
      }
    }
  }
  detail = "200 matrices, " + std::to_string(checks) + " Wu classes";
  return true;
}

// --- 2: the two spin structures of real projective space -------------

bool c2_projective_space(std::string& detail) {
  auto b = SymIntMatrix::diagonal({2});
  auto spins = spin_structures(b);
  if (spins.size() != 2) {
    detail = "expected 2 spin structures";
    return false;
  }
  SpinPresentation p0(b, spins[0]), p1(b, spins[1]);
  std::set<int> rochlins{spin_invariants(p0).rochlin_mod8,
                         spin_invariants(p1).rochlin_mod8};
  if (rochlins != std::set<int>{1, 7}) {
    detail = "Rochlin values are not {1,7}";
    return false;
  }
  if (ys_equivalent(p0, p1)) {
    detail = "the two spin structures compare equivalent";
    return false;
  }
  detail = "2 spins, Rochlin {1,7}, inequivalent";
  return true;
}

// --- 3: eight equivalent spin structures on the 3-torus --------------

bool c3_torus(std::string& detail) {
  auto b = SymIntMatrix::zeros(3);
  auto spins = spin_structures(b);
  if (spins.size() != 8) {
    detail = "expected 8 spin structures";
    return false;
  }
  std::vector<SpinPresentation> ps;
  for (const auto& s : spins) {
    ps.emplace_back(b, s);
    if (spin_invariants(ps.back()).rochlin_mod8 != 0) {
      detail = "nonzero Rochlin value";
      return false;
    }
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      ++pairs;
      if (!ys_equivalent(ps[i], ps[j])) {
        detail = "inequivalent pair found";
        return false;
      }
    }
  detail = "8 spins, Rochlin 0, " + std::to_string(pairs) +
           " equivalent pairs";
  return true;
}

// --- 4: Poincare sphere vs the 3-sphere ------------------------------

bool c4_poincare(std::string& detail) {
  auto g8 = testutil::gamma8();
  if (signature(g8) != 8) {
    detail = "signature(Gamma8) != 8";
    return false;
  }
  SpinPresentation poincare(g8, GF2Vector(8, 0));
  if (!ys_equivalent(poincare, SpinPresentation())) {
    detail = "not spin equivalent to the sphere";
    return false;
  }
  detail = "spin equivalent, signature 8";
  return true;
}

// --- 5: quadratic decider vs brute force, all groups of order <= 32 --

bool c5_quadratic_agreement(std::string& detail) {
  testutil::AgreementStats st;
  for (const auto& g : abelian_groups_up_to(32)) {
    if (!testutil::quadratic_agreement_on_group(g, &st)) {
      detail = "disagreement on " + group_tag(g);
      return false;
    }
  }
  detail = std::to_string(st.structures) + " forms, " +
           std::to_string(st.classes) + " classes, " +
           std::to_string(st.positive) + "+/" +
           std::to_string(st.negative) + "- exhaustive checks";
  return true;
}

// --- 6: level tables vs brute force, 2-groups of order <= 32 ---------

bool c6_level_table_completeness(std::string& detail) {
  testutil::AgreementStats st;
  for (const auto& g : abelian_groups_up_to(32)) {
    if (mpz_popcount(g.order().get_mpz_t()) != 1) continue;  // 2-groups
    if (!testutil::pairing_agreement_on_group(g, &st)) {
      detail = "disagreement on " + group_tag(g);
      return false;
    }
  }
  detail = std::to_string(st.structures) + " pairings, " +
           std::to_string(st.classes) + " classes, " +
           std::to_string(st.positive) + "+/" +
           std::to_string(st.negative) + "- exhaustive checks";
  return true;
}

// --- 7: border moves preserve all four invariants --------------------

bool c7_move_invariance(std::string& detail) {
  std::mt19937_64 rng(20260802);
  std::uniform_int_distribution<std::size_t> dims(1, 5);
  std::uniform_int_distribution<long> small(-2, 2);
  std::size_t done = 0, moves = 0;
  while (done < 100) {
    auto b = testutil::random_symmetric(rng, dims(rng), -4, 4);
    if (presented_group(b).torsion.order() > 2048) continue;
    ++done;
    auto spins = spin_structures(b);
    SpinPresentation p(b, spins[rng() % spins.size()]);
    const auto base = spin_invariants(p);
    for (int m = 0; m < 3; ++m) {
      std::vector<mpz_class> linkings(p.dim());
      for (auto& x : linkings) x = small(rng);
      p = y_surgery(p, linkings, small(rng));
      ++moves;
      const auto now = spin_invariants(p);
      if (now.betti1 != base.betti1 ||
          now.rochlin_mod8 != base.rochlin_mod8 ||
          !pairing_iso(now.phi.pairing(), base.phi.pairing()) ||
          !quadratic_iso(now.phi, base.phi)) {
        detail = "invariant changed after a move";
        return false;
      }
    }
  }
  detail = "100 presentations, " + std::to_string(moves) + " moves";
  return true;
}

// --- 8: refinements collapse without summands of order 2 or 4 --------

bool c8_refinement_collapse(std::string& detail) {
  // Z8, Z9, Z3, Z8+Z3 (= Z24 in invariant-factor form).
  std::size_t pairs = 0;
  for (long d : {8L, 9L, 3L, 24L}) {
    FiniteAbelianGroup g({mpz_class(d)});
    for (const auto& b : enumerate_nondegenerate_pairings(g)) {
      auto refs = quad_refinements(b);
      for (std::size_t i = 0; i < refs.size(); ++i)
        for (std::size_t j = i + 1; j < refs.size(); ++j) {
          ++pairs;
          if (!quadratic_iso(refs[i], refs[j]) ||
              !brute_force_iso(refs[i], refs[j]).found) {
            detail = "refinements of a pairing on Z" + std::to_string(d) +
                     " are not isomorphic";
            return false;
          }
        }
    }
  }
  auto z2 = FiniteAbelianGroup({mpz_class(2)});
  auto refs = quad_refinements(
      LinkingPairing(z2, {{QZ(1, 2)}}));
  if (refs.size() != 2 || quadratic_iso(refs[0], refs[1]) ||
      brute_force_iso(refs[0], refs[1]).found) {
    detail = "the two refinements on Z2 compare isomorphic";
    return false;
  }
  detail = std::to_string(pairs) + " collapsing pairs, Z2 pair separated";
  return true;
}

// --- 9: quadratic correspondence shifts the level table --------------

bool c9_level_shift_relations(std::string& detail) {
  std::size_t pairings = 0;
  for (const auto& g : abelian_groups_up_to(32)) {
    if (g.is_trivial() || mpz_popcount(g.order().get_mpz_t()) != 1) continue;
    if (g.factors().front() < 4) continue;  // special: no order-2 summand
    for (const auto& b : enumerate_nondegenerate_pairings(g)) {
      ++pairings;
      auto q = wall_psi(b);
      auto outer = kk_invariants(b);
      auto inner = kk_invariants(q.pairing());
      bool ok = outer.levels.size() == inner.levels.size() + 1 &&
                outer.levels[0].rank == 0 &&
                outer.levels[0].sigma == gauss_brown(q);
      for (std::size_t k = 0; ok && k < inner.levels.size(); ++k)
        ok = outer.levels[k + 1] == inner.levels[k];
      if (!ok) {
        detail = "relation fails on " + group_tag(g);
        return false;
      }
    }
  }
  detail = std::to_string(pairings) + " special pairings";
  return true;
}

// --- 10: stable equivalence of even lattices -------------------------

bool c10_stable_even(std::string& detail) {
  auto g8 = testutil::gamma8();
  auto h = testutil::hopf();
  auto h4 = h.direct_sum(h).direct_sum(h).direct_sum(h);
  if (!stably_equivalent_even(g8, h4)) {
    detail = "signature-8 block vs 4 hyperbolics: expected equivalent";
    return false;
  }
  if (stably_equivalent_even(g8, g8.direct_sum(SymIntMatrix::zeros(1)))) {
    detail = "kernel growth went undetected";
    return false;
  }
  std::mt19937_64 rng(20260803);
  std::uniform_int_distribution<std::size_t> dims(1, 5);
  std::size_t done = 0;
  while (done < 20) {
    auto s = testutil::random_symmetric(rng, dims(rng), -4, 4);
    IntMatrix m = s.mat();
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) *= 2;
    SymIntMatrix even(std::move(m));
    if (presented_group(even).torsion.order() > 2048) continue;
    ++done;
    if (!stably_equivalent_even(even, even.direct_sum(h))) {
      detail = "S vs S+H: expected equivalent";
      return false;
    }
  }
  detail = "named pairs plus 20 random even lattices";
  return true;
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "van der Blij identity on random lattices", 30, c1_van_der_blij},
    {2, "projective space: two spins, Rochlin {1,7}", 1, c2_projective_space},
    {3, "3-torus: eight equivalent spin structures", 1, c3_torus},
    {4, "Poincare sphere is spin equivalent to the sphere", 1, c4_poincare},
    {5, "quadratic decider vs brute force, orders <= 32", 600,
     c5_quadratic_agreement},
    {6, "pairing level tables complete on 2-groups <= 32", 600,
     c6_level_table_completeness},
    {7, "border moves preserve the four invariants", 120, c7_move_invariance},
    {8, "refinements collapse without low-order summands", 10,
     c8_refinement_collapse},
    {9, "quadratic correspondence shifts the level table", 60,
     c9_level_shift_relations},
    {10, "stable equivalence of even lattices", 10, c10_stable_even},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<const Criterion*> selected;
  if (argc <= 1) {
    for (const auto& c : kCriteria) selected.push_back(&c);
  } else {
    for (int i = 1; i < argc; ++i) {
      int id = std::atoi(argv[i]);
      if (id < 1 || id > 10) {
        std::fprintf(stderr, "unknown criterion '%s' (want 1..10)\n", argv[i]);
        return 1;
      }
      selected.push_back(&kCriteria[id - 1]);
    }
  }
  int failures = 0;
  for (const auto* c : selected) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok;
    try {
      ok = c->fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    if (dt >= c->budget_s) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    }
    if (!ok) ++failures;
    std::printf("[%2d/10] %-52s %s  %7.2fs / %gs  (%s)\n", c->id, c->label,
                ok ? "PASS" : "FAIL", dt, c->budget_s, detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
