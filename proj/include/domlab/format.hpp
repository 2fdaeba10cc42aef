#pragma once

#include <iosfwd>
#include <string>

#include "domlab/monoid.hpp"
#include "domlab/morphisms.hpp"

namespace domlab {

// Text format for monoids, consumed and produced byte for byte:
//
//   monoid <name>
//   order <k>
//   neutral <i>
//   labels <l0> <l1> ...     (optional)
//   table
//   <k lines of k space-separated indices>
//   end
//
// Labels are whitespace-free tokens; a missing name prints as "unnamed".
std::string print_monoid(FiniteMonoid const& m);

// Parses one monoid block; trailing content after "end" is ignored.  Throws
// ParseError with the offending 1-based line number.
FiniteMonoid parse_monoid(std::istream& in);
FiniteMonoid parse_monoid(std::string const& text);
FiniteMonoid load_monoid_file(std::string const& path);

// "cong <name> blocks: {i,j,...} {k,...} ..."
std::string print_congruence(Congruence const& theta, std::string const& name);

// "hom <name> <src> -> <dst> map: i0 i1 ..."
std::string print_homomorphism(Homomorphism const& h, std::string const& name);

}  // namespace domlab
