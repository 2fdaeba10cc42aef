#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domlab/errors.hpp"

namespace domlab {

// Elements of a finite monoid are dense indices 0..order-1 relative to a
// specific FiniteMonoid.  Labels, when present, are presentation-only.
using ElementId = std::uint32_t;

struct ElementClassification {
  enum class Kind { invertible, nilpotent, neither };

  Kind kind;
  ElementId inverse = 0;    // meaningful when kind == invertible
  std::size_t degree = 0;   // meaningful when kind == nilpotent; least k >= 1

  static ElementClassification make_invertible(ElementId inv) {
    return {Kind::invertible, inv, 0};
  }
  static ElementClassification make_nilpotent(std::size_t k) {
    return {Kind::nilpotent, 0, k};
  }
  static ElementClassification make_neither() { return {Kind::neither, 0, 0}; }

  bool operator==(ElementClassification const&) const = default;
};

// A finite commutative monoid given by its Cayley table.  Instances are
// immutable after construction and always satisfy associativity,
// commutativity, and neutrality; the only way to build one from raw data is
// the validating factory.
class FiniteMonoid {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 64;

  // Checks the three monoid laws and returns the monoid; throws
  // ValidationError naming the first violated law with a witness triple
  // (associativity), pair (commutativity), or element (neutrality).
  static FiniteMonoid validate(std::size_t order, ElementId neutral,
                               std::vector<ElementId> table,
                               std::vector<std::string> labels = {},
                               std::string name = "",
                               std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return order_; }
  ElementId neutral() const noexcept { return neutral_; }
  std::string const& name() const noexcept { return name_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::vector<std::string> const& labels() const noexcept { return labels_; }

  // Display string for an element: its label when present, else its index.
  std::string describe(ElementId a) const;

  ElementId mul(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    return table_[a * order_ + b];
  }

  // a^k by repeated squaring; a^0 is the neutral element.
  ElementId pow(ElementId a, std::uint64_t k) const;

  // The unique z with zb = z for all b, when it exists.
  std::optional<ElementId> find_zero() const;

  // Invertible takes precedence over nilpotent; the two coincide only on the
  // neutral element of the trivial monoid, which is reported invertible.
  ElementClassification classify_element(ElementId a) const;

  bool is_cancellative_element(ElementId a) const;

  // Every a admits some b with a = a^2 b.
  bool is_inverse_monoid() const;

  // Least subset containing gens and the neutral element that is closed
  // under multiplication; returned sorted.
  std::vector<ElementId> subuniverse_generate(std::vector<ElementId> const& gens) const;

  std::vector<ElementId> const& table() const noexcept { return table_; }

  // Structural equality: order, neutral, and table.  Labels and name are
  // presentation-only and ignored.
  friend bool operator==(FiniteMonoid const& lhs, FiniteMonoid const& rhs) {
    return lhs.order_ == rhs.order_ && lhs.neutral_ == rhs.neutral_ &&
           lhs.table_ == rhs.table_;
  }

  void check_element(ElementId a) const {
    if (a >= order_)
      throw ValidationError("element index " + std::to_string(a) +
                            " out of range for order " + std::to_string(order_));
  }

 private:
  FiniteMonoid(std::size_t order, ElementId neutral, std::vector<ElementId> table,
               std::vector<std::string> labels, std::string name)
      : order_(order),
        neutral_(neutral),
        table_(std::move(table)),
        labels_(std::move(labels)),
        name_(std::move(name)) {}

  std::size_t order_;
  ElementId neutral_;
  std::vector<ElementId> table_;       // row-major, order x order
  std::vector<std::string> labels_;    // empty or one per element
  std::string name_;
};

// The one-element monoid.
FiniteMonoid trivial();

// Integers modulo s under addition, s >= 1.
FiniteMonoid cyclic(std::size_t s);

// Quotient of the naturals under addition identifying k with k + m for all
// k >= n; order n + m, index n, period m.  Requires n >= 0, m >= 1.
FiniteMonoid monogenic(std::size_t n, std::size_t m);

// The nine-element monoid on {0,1}^3 plus an absorbing sink: triples multiply
// by componentwise addition, overflowing coordinates collapse to the sink.
// Indices 0..7 are the triples in lexicographic order (neutral (0,0,0) = 0),
// index 8 is the sink.
FiniteMonoid nine_element();

// Componentwise product; element (a1, a2) has index a1 * m2.order() + a2.
FiniteMonoid direct_product(FiniteMonoid const& m1, FiniteMonoid const& m2);

}  // namespace domlab
