#include "domlab/monoid.hpp"

#include <algorithm>
#include <set>

namespace domlab {

FiniteMonoid FiniteMonoid::validate(std::size_t order, ElementId neutral,
                                    std::vector<ElementId> table,
                                    std::vector<std::string> labels,
                                    std::string name, std::size_t max_order) {
  if (order == 0) throw ValidationError("order must be positive");
  if (order > max_order)
    throw ValidationError("order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(max_order));
  if (neutral >= order) throw ValidationError("neutral index out of range");
  if (table.size() != order * order)
    throw ValidationError("table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(order * order));
  if (!labels.empty() && labels.size() != order)
    throw ValidationError("labels count does not match order");

  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };

  for (ElementId e : table)
    if (e >= order) throw ValidationError("table entry out of range");

  for (std::size_t a = 0; a < order; ++a)
    if (at(neutral, a) != a)
      throw ValidationError("neutrality fails at element " + std::to_string(a) +
                            ": " + std::to_string(neutral) + "*" + std::to_string(a) +
                            " = " + std::to_string(at(neutral, a)));

  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = a + 1; b < order; ++b)
      if (at(a, b) != at(b, a))
        throw ValidationError("commutativity fails at pair (" + std::to_string(a) +
                              ", " + std::to_string(b) + ")");

  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw ValidationError("associativity fails at triple (" + std::to_string(a) +
                                ", " + std::to_string(b) + ", " + std::to_string(c) + ")");

  return FiniteMonoid(order, neutral, std::move(table), std::move(labels),
                      std::move(name));
}

std::string FiniteMonoid::describe(ElementId a) const {
  check_element(a);
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

ElementId FiniteMonoid::pow(ElementId a, std::uint64_t k) const {
  check_element(a);
  ElementId result = neutral_;
  ElementId base = a;
  while (k > 0) {
    if (k & 1) result = table_[result * order_ + base];
    base = table_[base * order_ + base];
    k >>= 1;
  }
  return result;
}

std::optional<ElementId> FiniteMonoid::find_zero() const {
  for (ElementId z = 0; z < order_; ++z) {
    bool absorbing = true;
    for (ElementId b = 0; b < order_ && absorbing; ++b)
      absorbing = mul(z, b) == z;
    if (absorbing) return z;  // unique when it exists
  }
  return std::nullopt;
}

ElementClassification FiniteMonoid::classify_element(ElementId a) const {
  check_element(a);
  for (ElementId b = 0; b < order_; ++b)
    if (mul(a, b) == neutral_) return ElementClassification::make_invertible(b);

  if (auto zero = find_zero()) {
    ElementId p = a;
    for (std::size_t k = 1; k <= order_; ++k) {
      if (p == *zero) return ElementClassification::make_nilpotent(k);
      p = mul(p, a);
    }
  }
  return ElementClassification::make_neither();
}

bool FiniteMonoid::is_cancellative_element(ElementId a) const {
  check_element(a);
  for (ElementId b = 0; b < order_; ++b)
    for (ElementId c = b + 1; c < order_; ++c)
      if (mul(a, b) == mul(a, c)) return false;
  return true;
}

bool FiniteMonoid::is_inverse_monoid() const {
  for (ElementId a = 0; a < order_; ++a) {
    ElementId aa = mul(a, a);
    bool found = false;
    for (ElementId b = 0; b < order_ && !found; ++b)
      found = mul(aa, b) == a;
    if (!found) return false;
  }
  return true;
}

std::vector<ElementId> FiniteMonoid::subuniverse_generate(
    std::vector<ElementId> const& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<ElementId> members;
  auto add = [&](ElementId e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  add(neutral_);
  for (ElementId g : gens) {
    check_element(g);
    add(g);
  }
  // worklist closure: members[i] paired against everything already present
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      add(mul(members[i], members[j]));
  std::sort(members.begin(), members.end());
  return members;
}

FiniteMonoid trivial() {
  return FiniteMonoid::validate(1, 0, {0}, {}, "trivial");
}

FiniteMonoid cyclic(std::size_t s) {
  if (s == 0) throw ValidationError("cyclic: order must be >= 1");
  std::vector<ElementId> table(s * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      table[a * s + b] = static_cast<ElementId>((a + b) % s);
  return FiniteMonoid::validate(s, 0, std::move(table), {},
                                "cyclic(" + std::to_string(s) + ")",
                                std::max(FiniteMonoid::kDefaultMaxOrder, s));
}

FiniteMonoid monogenic(std::size_t n, std::size_t m) {
  if (m == 0) throw ValidationError("monogenic: period must be >= 1");
  std::size_t k = n + m;
  auto reduce = [&](std::size_t x) {
    return x < k ? x : n + ((x - n) % m);
  };
  std::vector<ElementId> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      table[a * k + b] = static_cast<ElementId>(reduce(a + b));
  return FiniteMonoid::validate(k, 0, std::move(table), {},
                                "monogenic(" + std::to_string(n) + "," +
                                    std::to_string(m) + ")",
                                std::max(FiniteMonoid::kDefaultMaxOrder, k));
}

FiniteMonoid nine_element() {
  constexpr std::size_t k = 9;
  constexpr ElementId sink = 8;
  // triple for index i < 8: bits of i, most significant coordinate first
  auto coord = [](ElementId i, int c) { return (i >> (2 - c)) & 1u; };
  std::vector<ElementId> table(k * k);
  for (ElementId a = 0; a < k; ++a) {
    for (ElementId b = 0; b < k; ++b) {
      ElementId r;
      if (a == sink || b == sink) {
        r = sink;
      } else {
        unsigned sums[3];
        bool overflow = false;
        for (int c = 0; c < 3; ++c) {
          sums[c] = coord(a, c) + coord(b, c);
          overflow = overflow || sums[c] > 1;
        }
        r = overflow ? sink
                     : static_cast<ElementId>((sums[0] << 2) | (sums[1] << 1) | sums[2]);
      }
      table[a * k + b] = r;
    }
  }
  std::vector<std::string> labels;
  for (ElementId i = 0; i < 8; ++i)
    labels.push_back("(" + std::to_string(coord(i, 0)) + "," +
                     std::to_string(coord(i, 1)) + "," + std::to_string(coord(i, 2)) +
                     ")");
  labels.push_back("0");
  return FiniteMonoid::validate(k, 0, std::move(table), std::move(labels),
                                "nine_element");
}

FiniteMonoid direct_product(FiniteMonoid const& m1, FiniteMonoid const& m2) {
  std::size_t k1 = m1.order(), k2 = m2.order();
  std::size_t k = k1 * k2;
  std::vector<ElementId> table(k * k);
  for (std::size_t a1 = 0; a1 < k1; ++a1)
    for (std::size_t a2 = 0; a2 < k2; ++a2)
      for (std::size_t b1 = 0; b1 < k1; ++b1)
        for (std::size_t b2 = 0; b2 < k2; ++b2)
          table[(a1 * k2 + a2) * k + (b1 * k2 + b2)] = static_cast<ElementId>(
              m1.mul(static_cast<ElementId>(a1), static_cast<ElementId>(b1)) * k2 +
              m2.mul(static_cast<ElementId>(a2), static_cast<ElementId>(b2)));
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t a1 = 0; a1 < k1; ++a1)
    for (std::size_t a2 = 0; a2 < k2; ++a2)
      labels.push_back("(" + m1.describe(static_cast<ElementId>(a1)) + "," +
                       m2.describe(static_cast<ElementId>(a2)) + ")");
  ElementId neutral = static_cast<ElementId>(m1.neutral() * k2 + m2.neutral());
  std::string name = (m1.name().empty() ? "lhs" : m1.name()) + "*" +
                     (m2.name().empty() ? "rhs" : m2.name());
  return FiniteMonoid::validate(k, neutral, std::move(table), std::move(labels),
                                std::move(name),
                                std::max(FiniteMonoid::kDefaultMaxOrder, k));
}

}  // namespace domlab
