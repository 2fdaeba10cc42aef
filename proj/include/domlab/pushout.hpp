#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "domlab/monoid.hpp"
#include "domlab/morphisms.hpp"

namespace domlab {

// The square B x B with componentwise multiplication, neutral (1,1), and the
// two injections b -> (b,1) and b -> (1,b).  Element (i,j) has index
// i * |B| + j.
struct CoproductPair {
  FiniteMonoid monoid;
  Homomorphism inject_left;
  Homomorphism inject_right;
};

CoproductPair coproduct_pair(FiniteMonoid const& b);

// The amalgamated square of B over a submonoid A: the quotient of B x B by
// the congruence generated by (a,1) ~ (1,a) for a in A, with the two
// composite maps p1, p2.  By construction p1 and p2 agree on A, and the
// quotient of a square lies in every equational class the base does, so the
// same object serves every variety of commutative monoids containing B.
struct PushoutResult {
  FiniteMonoid monoid;
  Homomorphism p1;
  Homomorphism p2;
};

PushoutResult pushout_over(FiniteMonoid const& b, SubmonoidEmbedding const& a);

// The equalizer { b : p1(b) = p2(b) } of the amalgamated square; the exact
// dominion of A in B.
std::vector<ElementId> dominion_pushout(FiniteMonoid const& b,
                                        SubmonoidEmbedding const& a);

// { b : a zigzag over A with value b exists within the length cap }.
std::vector<ElementId> dominion_zigzag(FiniteMonoid const& b,
                                       SubmonoidEmbedding const& a, std::size_t cap);

enum class DominionMethod { pushout, zigzag, both };

std::string to_string(DominionMethod method);

struct DominionReport {
  std::vector<ElementId> elements;
  DominionMethod method;
  std::size_t zigzag_cap;  // meaningful for zigzag and both

  // "dominion <B> over {A}: {i, j, ...} method: <m>"
  std::string serialize(FiniteMonoid const& b, SubmonoidEmbedding const& a) const;
};

// Runs the requested method(s); with DominionMethod::both the two sets are
// compared element by element and any discrepancy raises MethodDisagreement
// carrying the differing element and the cap in force.  Default cap is
// |B|^2, the size of the zigzag state space.
DominionReport dominion(FiniteMonoid const& b, SubmonoidEmbedding const& a,
                        DominionMethod method = DominionMethod::both,
                        std::size_t cap = 0 /* 0 = |B|^2 */);

// Sanity under-approximation of the complement: elements excluded from the
// dominion by an explicit separating pair of homomorphisms into one of the
// supplied targets.  Can only confirm non-membership; the amalgamated square
// remains the ground truth.
std::vector<ElementId> confirmed_non_dominion(FiniteMonoid const& b,
                                              SubmonoidEmbedding const& a,
                                              std::vector<FiniteMonoid> const& targets,
                                              std::size_t hom_cap = 1'000'000);

}  // namespace domlab
