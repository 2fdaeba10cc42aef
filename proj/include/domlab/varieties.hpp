#pragma once

#include <cstdint>
#include <string>

#include "domlab/monoid.hpp"
#include "domlab/morphisms.hpp"

namespace domlab {

// Names the variety of commutative monoids axiomatized by x^(m+n) = x^n.
// Signatures are plain names: (2,1) and (4,1) are distinct signatures even
// when one variety contains the other; equality of varieties is mutual
// containment.  m = 0 names the variety of all commutative monoids for any n.
struct VarietySignature {
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  bool operator==(VarietySignature const&) const = default;
};

// "V(m,n)"; used by parsers and reports.
std::string to_string(VarietySignature sig);

// Accepts "V(m,n)", the aliases "A(n)" = V(n,0) and "C(n)" = V(1,n), and
// "CM" = V(0,0).
VarietySignature parse_signature(std::string const& text);

// Every element satisfies a^(m+n) = a^n.
bool satisfies(FiniteMonoid const& m, VarietySignature sig);

// Least signature satisfied by the monoid: m is the lcm of the element
// periods, n the maximum of the element indices.  The result is re-verified:
// it must hold, and must fail for every proper divisor of m and for n - 1.
VarietySignature generated_variety(FiniteMonoid const& m);

// Whether the variety named by inner is included in the one named by outer.
// Decided on the free 1-generated member of inner: outer's identity holds in
// V(inner) iff it holds in monogenic(inner.n, inner.m).
bool contains(VarietySignature outer, VarietySignature inner);

// True iff every member is an inverse monoid; holds exactly when m >= 1 and
// n <= 1, equivalently when the variety does not contain V(1,2).  Both
// formulations are computed and must agree.
bool is_inverse_variety(VarietySignature sig);

// The largest subuniverse on which sig's identity holds; it is closed under
// multiplication and contains the neutral element.  For m = 0 the core is
// the whole monoid.
SubmonoidEmbedding variety_core(FiniteMonoid const& m, VarietySignature sig);

}  // namespace domlab
