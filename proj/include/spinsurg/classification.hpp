#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinsurg/forms.hpp"

namespace spinsurg {

// One level of the complete invariant family for linking pairings on
// finite 2-groups: rank of the k-th graded piece and the sigma value.
struct KKLevel {
  std::size_t rank = 0;
  GaussBrown sigma;

  bool operator==(const KKLevel&) const = default;
};

// Levels k = 1..K, K the largest k with rank != 0; sigma is recorded at
// every level (it can separate pairings even where rank vanishes).
struct KKInvariants {
  std::vector<KKLevel> levels;

  bool operator==(const KKInvariants&) const = default;
  std::string str() const;
};

KKInvariants kk_invariants(const LinkingPairing& b);

// The quadratic form induced by a special pairing (2-group with no
// order-2 summand): on G'/T2 with q(x) = b'(x', x'), b = 2 b'.
QuadraticForm wall_psi(const LinkingPairing& b_special);

struct IsoOptions {
  std::uint64_t brute_force_cap = kBruteForceCap;
  bool parallel = true;
};

// Certificate of a structure isomorphism: images of the source
// generators in the target group (empty and found=true for the trivial
// group; found=false when no isomorphism exists).
struct IsoWitness {
  bool found = false;
  std::vector<GroupElement> images;
};

IsoWitness brute_force_iso(const QuadraticForm& a, const QuadraticForm& b,
                           const IsoOptions& opts = {});
IsoWitness brute_force_iso(const LinkingPairing& a, const LinkingPairing& b,
                           const IsoOptions& opts = {});

// Exact re-verification of a witness (bijectivity plus structure
// preservation), in rational arithmetic independent of the search.
bool witness_is_pairing_iso(const LinkingPairing& a, const LinkingPairing& b,
                            const IsoWitness& w);
bool witness_is_quadratic_iso(const QuadraticForm& a, const QuadraticForm& b,
                              const IsoWitness& w);

// Production deciders.  Pairings: p-primary split, 2-part by the
// invariant family above, odd parts by pruned exhaustive search.
// Quadratic forms: group + pairing class + Gauss sum logarithm.
bool pairing_iso(const LinkingPairing& a, const LinkingPairing& b,
                 const IsoOptions& opts = {});
bool quadratic_iso(const QuadraticForm& a, const QuadraticForm& b,
                   const IsoOptions& opts = {});

// Corpus enumeration for the desk-scale exhaustive checks.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::uint64_t max_order);
std::vector<LinkingPairing> enumerate_nondegenerate_pairings(
    const FiniteAbelianGroup& g, std::uint64_t gram_cap = std::uint64_t{1} << 20);

}  // namespace spinsurg
