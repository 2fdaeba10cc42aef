#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "domlab/monoid.hpp"
#include "domlab/morphisms.hpp"
#include "domlab/varieties.hpp"

namespace domlab {

// A zigzag of length n over an ambient monoid B: arguments a_1..a_{2n+1},
// spines z_1..z_n and w_1..w_n, and a value b, subject to the six equation
// families
//
//   (1)  a_1 z_1 = b
//   (2)  w_1 a_2 = a_1
//   (3)  a_{2i} z_i = a_{2i+1} z_{i+1}        for i = 1..n-1
//   (4)  w_i a_{2i+1} = w_{i+1} a_{2i+2}      for i = 1..n-1
//   (5)  a_{2n} z_n = a_{2n+1}
//   (6)  w_n a_{2n+1} = b
//
// For n = 0 the witness degenerates to the single equation a_1 = b, with
// empty spines.  For dominion use the arguments are drawn from a submonoid
// and the spines from the ambient monoid.
struct ZigzagWitness {
  FiniteMonoid ambient;
  std::size_t n = 0;
  std::vector<ElementId> args;     // length 2n+1
  std::vector<ElementId> spine_z;  // length n
  std::vector<ElementId> spine_w;  // length n
  ElementId value = 0;
};

// First violated equation, by family number 1..6 and (for families 3 and 4)
// the 1-based index i.
struct EquationViolation {
  int family;
  std::size_t index;

  bool operator==(EquationViolation const&) const = default;
};

// Checks all equations of the witness in ambient order; nullopt means the
// witness verifies.  Throws ValidationError on malformed sequence lengths.
std::optional<EquationViolation> first_violation(ZigzagWitness const& w);

bool verify_witness(ZigzagWitness const& w);

// One link of the product chain threaded through a verified witness:
// both sides must equal the witness value.
struct SpineLink {
  ElementId left;   // w_m a_{2m+1} z_{m+1}   (w_0 = neutral)
  ElementId right;  // w_{m+1} a_{2m+2} z_{m+1}
};

// Evaluates the chain for m = 0..n-1 on a verified witness of length n >= 1
// and asserts every side equals the value; a failure is an implementation
// bug and throws std::logic_error.
std::vector<SpineLink> spine_chain(ZigzagWitness const& w);

// Length n-1 witness with first argument w_1 a_3 and the first spine entries
// dropped.  Requires a verified witness with n >= 1.
ZigzagWitness transform_drop_head(ZigzagWitness const& w);

// Same-length witness with a_1, every w_i, and the value multiplied by e.
ZigzagWitness transform_scale(ZigzagWitness const& w, ElementId e);

// For a_2 = neutral: length n-1 witness with first argument a_1 a_3.
ZigzagWitness transform_shorten_unit(ZigzagWitness const& w);

// For a_1 = a_2 and w_1 invertible: length n-1 witness with first argument
// a_3 and spine entries w_1^{-1} w_i.  The caller supplies the inverse of
// w_1, which is checked.
ZigzagWitness transform_shorten_equal(ZigzagWitness const& w, ElementId d1_inverse);

// Searches for a zigzag of length at most cap with arguments in the
// submonoid and value b, shortest first.  The reachable search states are
// pairs (current w, current right product a_{2i} z_i), of which there are at
// most |B|^2; state expansion is exhaustive, so a witness of length n is
// found whenever cap >= n.
std::optional<ZigzagWitness> search_witness(FiniteMonoid const& ambient,
                                            SubmonoidEmbedding const& sub,
                                            ElementId b, std::size_t cap);

// All values b admitting some spine for the given arguments (length must be
// odd; n is inferred).  Returned sorted.  On any single monoid the result
// has at most one element; returning the set keeps that a checkable fact
// rather than an assumption.
std::vector<ElementId> isbell_value(FiniteMonoid const& ambient,
                                    std::vector<ElementId> const& args);

// All b with a^(n+1) b = a^n and b^2 a = b, for sig = (m, n) with m >= 1 and
// satisfies(m, sig).  On subdirectly irreducible members the set is a
// singleton: a^n when a is nilpotent, a^(m-1) when a is invertible.
std::vector<ElementId> extendable_inverse(FiniteMonoid const& m, VarietySignature sig,
                                          ElementId a);

// "zigzag n=<n> args: ... z: ... w: ... value: <b>"
std::string to_string(ZigzagWitness const& w);

}  // namespace domlab
