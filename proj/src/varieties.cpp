#include "domlab/varieties.hpp"

#include <numeric>
#include <stdexcept>

namespace domlab {

std::string to_string(VarietySignature sig) {
  return "V(" + std::to_string(sig.m) + "," + std::to_string(sig.n) + ")";
}

VarietySignature parse_signature(std::string const& text) {
  if (text == "CM") return {0, 0};
  auto malformed = [&]() {
    return ValidationError("cannot parse variety signature '" + text +
                           "' (expected V(m,n), A(n), C(n), or CM)");
  };
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') throw malformed();
  char head = text[0];
  std::string body = text.substr(2, text.size() - 3);
  auto parse_num = [&](std::string const& s) -> std::uint32_t {
    if (s.empty()) throw malformed();
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw malformed();
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > 0xffffffffull) throw malformed();
    }
    return static_cast<std::uint32_t>(v);
  };
  if (head == 'A') return {parse_num(body), 0};
  if (head == 'C') return {1, parse_num(body)};
  if (head == 'V') {
    auto comma = body.find(',');
    if (comma == std::string::npos) throw malformed();
    return {parse_num(body.substr(0, comma)), parse_num(body.substr(comma + 1))};
  }
  throw malformed();
}

bool satisfies(FiniteMonoid const& m, VarietySignature sig) {
  for (ElementId a = 0; a < m.order(); ++a)
    if (m.pow(a, sig.m + static_cast<std::uint64_t>(sig.n)) != m.pow(a, sig.n))
      return false;
  return true;
}

namespace {

// Index and period of a single element: the power sequence a^0, a^1, ... is
// eventually periodic; index is the first position that recurs, period the
// cycle length.
struct IndexPeriod {
  std::uint64_t index;
  std::uint64_t period;
};

IndexPeriod element_index_period(FiniteMonoid const& m, ElementId a) {
  std::vector<std::int64_t> seen(m.order(), -1);
  ElementId p = m.neutral();
  std::uint64_t step = 0;
  while (seen[p] < 0) {
    seen[p] = static_cast<std::int64_t>(step);
    p = m.mul(p, a);
    ++step;
  }
  std::uint64_t index = static_cast<std::uint64_t>(seen[p]);
  return {index, step - index};
}

}  // namespace

VarietySignature generated_variety(FiniteMonoid const& m) {
  std::uint64_t lcm_periods = 1;
  std::uint64_t max_index = 0;
  for (ElementId a = 0; a < m.order(); ++a) {
    IndexPeriod ip = element_index_period(m, a);
    lcm_periods = std::lcm(lcm_periods, ip.period);
    max_index = std::max(max_index, ip.index);
  }
  VarietySignature sig{static_cast<std::uint32_t>(lcm_periods),
                       static_cast<std::uint32_t>(max_index)};
  // minimality checks
  if (!satisfies(m, sig))
    throw std::logic_error("generated_variety: computed signature not satisfied");
  for (std::uint32_t d = 1; d < sig.m; ++d)
    if (sig.m % d == 0 && satisfies(m, {d, sig.n}))
      throw std::logic_error("generated_variety: signature not period-minimal");
  if (sig.n > 0 && satisfies(m, {sig.m, sig.n - 1}))
    throw std::logic_error("generated_variety: signature not index-minimal");
  return sig;
}

bool contains(VarietySignature outer, VarietySignature inner) {
  if (outer.m == 0) return true;   // outer is all commutative monoids
  if (inner.m == 0) return false;  // proper variety cannot contain all of them
  return satisfies(monogenic(inner.n, inner.m), outer);
}

bool is_inverse_variety(VarietySignature sig) {
  bool by_shape = sig.m >= 1 && sig.n <= 1;
  bool by_containment = !contains(sig, VarietySignature{1, 2});
  if (by_shape != by_containment)
    throw std::logic_error("is_inverse_variety: formulations disagree on " +
                           to_string(sig));
  return by_shape;
}

SubmonoidEmbedding variety_core(FiniteMonoid const& m, VarietySignature sig) {
  std::vector<ElementId> universe;
  for (ElementId a = 0; a < m.order(); ++a)
    if (sig.m == 0 ||
        m.pow(a, sig.m + static_cast<std::uint64_t>(sig.n)) == m.pow(a, sig.n))
      universe.push_back(a);
  return SubmonoidEmbedding::validate(m, std::move(universe));
}

}  // namespace domlab
