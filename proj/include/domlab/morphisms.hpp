#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "domlab/monoid.hpp"

namespace domlab {

// A monoid homomorphism between two finite commutative monoids, stored as the
// full image vector indexed by source element.
struct Homomorphism {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<ElementId> map;

  // Checks neutral preservation and multiplicativity on all pairs.
  static Homomorphism validate(FiniteMonoid source, FiniteMonoid target,
                               std::vector<ElementId> map);

  ElementId operator()(ElementId a) const {
    source.check_element(a);
    return map[a];
  }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(Homomorphism const& lhs, Homomorphism const& rhs) {
    return lhs.source == rhs.source && lhs.target == rhs.target && lhs.map == rhs.map;
  }
};

// g after f; requires f.target == g.source structurally.
Homomorphism compose(Homomorphism const& g, Homomorphism const& f);

// A congruence on a finite commutative monoid, stored canonically as the map
// sending each element to the least element of its block.  Canonical storage
// makes equality and hashing of congruences cheap.
class Congruence {
 public:
  static Congruence identity(FiniteMonoid const& m);

  // All pairs identified: the kernel of the map to the trivial monoid.
  static Congruence universal(FiniteMonoid const& m);

  // Least congruence containing the given pairs, by union-find closure: when
  // the classes of x and y merge, the classes of xc and yc are merged for
  // every c, to fixpoint.
  static Congruence generated(FiniteMonoid const& m,
                              std::vector<std::pair<ElementId, ElementId>> const& pairs);

  // Common refinement: related in the meet iff related in both.
  static Congruence meet(Congruence const& lhs, Congruence const& rhs);

  FiniteMonoid const& monoid() const noexcept { return monoid_; }
  ElementId representative(ElementId a) const {
    monoid_.check_element(a);
    return rep_[a];
  }
  bool related(ElementId a, ElementId b) const {
    return representative(a) == representative(b);
  }
  bool is_identity() const;
  std::size_t block_count() const;

  // Blocks ordered by least element, each sorted ascending.
  std::vector<std::vector<ElementId>> blocks() const;

  std::vector<ElementId> const& representative_map() const noexcept { return rep_; }

  friend bool operator==(Congruence const& lhs, Congruence const& rhs) {
    return lhs.monoid_ == rhs.monoid_ && lhs.rep_ == rhs.rep_;
  }

 private:
  Congruence(FiniteMonoid monoid, std::vector<ElementId> rep)
      : monoid_(std::move(monoid)), rep_(std::move(rep)) {}

  FiniteMonoid monoid_;
  std::vector<ElementId> rep_;
};

// A submonoid of an ambient monoid, given by its (sorted) universe.
struct SubmonoidEmbedding {
  FiniteMonoid ambient;
  std::vector<ElementId> universe;

  // Checks that the universe contains the neutral element and is closed
  // under multiplication.
  static SubmonoidEmbedding validate(FiniteMonoid ambient,
                                     std::vector<ElementId> universe);

  // Submonoid generated by the given elements.
  static SubmonoidEmbedding generate(FiniteMonoid ambient,
                                     std::vector<ElementId> const& gens);

  bool contains(ElementId a) const;

  // The submonoid as a standalone monoid; its element i is universe[i].
  FiniteMonoid as_monoid() const;

  // The inclusion into the ambient monoid, as a homomorphism from as_monoid().
  Homomorphism inclusion() const;
};

// All congruences generated by a single pair (a, b) with a != b, deduplicated,
// in a deterministic order.
std::vector<Congruence> all_principal_congruences(FiniteMonoid const& m);

struct SubdirectIrreducibility {
  bool subdirectly_irreducible;
  // The minimum nontrivial congruence, present exactly when irreducible.
  std::optional<Congruence> monolith;
};

// A monoid is subdirectly irreducible iff the meet of all principal
// congruences over distinct pairs is not the identity; the trivial monoid is
// not subdirectly irreducible.
SubdirectIrreducibility subdirect_irreducibility(FiniteMonoid const& m);

// Block monoid together with the canonical projection.
std::pair<FiniteMonoid, Homomorphism> quotient(FiniteMonoid const& m,
                                               Congruence const& theta);

// All homomorphisms m1 -> m2, found by backtracking over images of a
// generating set of m1 and verified on the full map.  Throws CapExceededError
// when |m2|^(#generators) exceeds the cap.
std::vector<Homomorphism> enumerate_homomorphisms(FiniteMonoid const& m1,
                                                  FiniteMonoid const& m2,
                                                  std::size_t cap = 1'000'000);

}  // namespace domlab
