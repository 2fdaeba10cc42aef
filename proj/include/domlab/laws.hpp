#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domlab/monoid.hpp"
#include "domlab/morphisms.hpp"
#include "domlab/varieties.hpp"

namespace domlab {

struct EnumerationConfig {
  std::size_t max_order = 4;
  std::optional<VarietySignature> variety_filter = std::nullopt;
  bool si_only = false;
  std::size_t hard_cap = 6;  // enumeration is quadratic-table backtracking;
                             // beyond this the canonical pass dominates
};

// Flattened multiplication table minimized lexicographically over all
// relabelings that send the neutral element to 0.  Two monoids are
// isomorphic iff their canonical tables coincide.
std::vector<ElementId> canonical_table(FiniteMonoid const& m);

bool isomorphic(FiniteMonoid const& lhs, FiniteMonoid const& rhs);

// Streams one commutative monoid per isomorphism class for every order up to
// cfg.max_order, in a fixed deterministic order, honoring the variety and
// subdirect-irreducibility filters.  Tables are found by backtracking
// completion with incremental associativity pruning; a completed table is
// emitted iff it equals its own canonical form.
void enumerate_monoids(EnumerationConfig const& cfg,
                       std::function<void(FiniteMonoid const&)> const& yield);

std::vector<FiniteMonoid> collect_monoids(EnumerationConfig const& cfg);

// Class counts per order (index 0 unused) for the two independent
// enumeration strategies: keep-self-canonical versus collect-all-then-dedup.
// The two must agree; the comparison is the enumeration's self-check.
std::vector<std::size_t> class_counts_canonical(std::size_t max_order);
std::vector<std::size_t> class_counts_dedup(std::size_t max_order);

struct LawReport {
  std::string law;
  std::size_t instances_checked = 0;
  std::vector<std::string> counterexamples;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return counterexamples.empty(); }
};

// Every element of every subdirectly irreducible member of V(m,n), m >= 1,
// is n-nilpotent or invertible with inverse a^(m-1).  Requires
// cfg.variety_filter with m >= 1.
LawReport check_si_dichotomy(EnumerationConfig cfg);

// No element of a subdirectly irreducible commutative monoid is stuck
// between nilpotent and invertible.
LawReport check_grillet(EnumerationConfig cfg);

// Every idempotent of a subdirectly irreducible commutative monoid is the
// neutral element or the zero.
LawReport check_idempotent_dichotomy(EnumerationConfig cfg);

// Zigzag-search and amalgamated-square dominions agree on every submonoid
// pair A <= B over the enumerated monoids, plus the pinned nine-element
// pair.  cap = 0 means |B|^2 per monoid.
LawReport check_dominion_equivalence(EnumerationConfig cfg, std::size_t cap = 0);

// Inverse submonoids are absolutely closed: A inverse implies dominion = A.
LawReport check_inverse_closure(EnumerationConfig cfg);

// No proper submonoid dominates everything: A < B implies dominion != B.
LawReport check_weak_es(EnumerationConfig cfg);

// For an inverse variety every tested pair has dominion = A; for a
// noninverse variety the pinned nine-element pair escapes its submonoid.
LawReport check_main_theorem(VarietySignature sig, EnumerationConfig cfg = {});

// The signatures exercised by default when no variety is requested.
std::vector<VarietySignature> default_signature_battery();

// The pinned pair: the nine-element monoid and the five-element submonoid
// generated by the three two-coordinate triples.
std::pair<FiniteMonoid, SubmonoidEmbedding> pinned_dominion_pair();

// All submonoids of m, by ascending universe bitmask.  Intended for small
// orders; guarded by the enumeration hard cap.
std::vector<SubmonoidEmbedding> all_submonoids(FiniteMonoid const& m);

}  // namespace domlab
