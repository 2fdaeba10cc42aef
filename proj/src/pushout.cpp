#include "domlab/pushout.hpp"

#include <algorithm>

#include "domlab/zigzag.hpp"

namespace domlab {

CoproductPair coproduct_pair(FiniteMonoid const& b) {
  FiniteMonoid square = direct_product(b, b);
  std::size_t k = b.order();
  std::vector<ElementId> left(k), right(k);
  for (ElementId x = 0; x < k; ++x) {
    left[x] = static_cast<ElementId>(x * k + b.neutral());
    right[x] = static_cast<ElementId>(b.neutral() * k + x);
  }
  Homomorphism inj_left = Homomorphism::validate(b, square, std::move(left));
  Homomorphism inj_right = Homomorphism::validate(b, square, std::move(right));
  return CoproductPair{std::move(square), std::move(inj_left), std::move(inj_right)};
}

PushoutResult pushout_over(FiniteMonoid const& b, SubmonoidEmbedding const& a) {
  if (!(a.ambient == b))
    throw ValidationError("pushout_over: submonoid has a different ambient monoid");
  CoproductPair cop = coproduct_pair(b);
  std::size_t k = b.order();
  std::vector<std::pair<ElementId, ElementId>> seeds;
  seeds.reserve(a.universe.size());
  for (ElementId x : a.universe)
    seeds.emplace_back(static_cast<ElementId>(x * k + b.neutral()),
                       static_cast<ElementId>(b.neutral() * k + x));
  Congruence theta = Congruence::generated(cop.monoid, seeds);
  auto [quot, proj] = quotient(cop.monoid, theta);
  Homomorphism p1 = compose(proj, cop.inject_left);
  Homomorphism p2 = compose(proj, cop.inject_right);
  for (ElementId x : a.universe)
    if (p1.map[x] != p2.map[x])
      throw std::logic_error("pushout_over: maps disagree on the amalgamated part");
  return PushoutResult{std::move(quot), std::move(p1), std::move(p2)};
}

std::vector<ElementId> dominion_pushout(FiniteMonoid const& b,
                                        SubmonoidEmbedding const& a) {
  PushoutResult p = pushout_over(b, a);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < b.order(); ++x)
    if (p.p1.map[x] == p.p2.map[x]) out.push_back(x);
  return out;
}

std::vector<ElementId> dominion_zigzag(FiniteMonoid const& b,
                                       SubmonoidEmbedding const& a, std::size_t cap) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < b.order(); ++x)
    if (search_witness(b, a, x, cap)) out.push_back(x);
  return out;
}

std::string to_string(DominionMethod method) {
  switch (method) {
    case DominionMethod::pushout: return "pushout";
    case DominionMethod::zigzag: return "zigzag";
    case DominionMethod::both: return "both";
  }
  return "?";
}

std::string DominionReport::serialize(FiniteMonoid const& b,
                                      SubmonoidEmbedding const& a) const {
  std::string s = "dominion " + (b.name().empty() ? "B" : b.name()) + " over {";
  for (std::size_t i = 0; i < a.universe.size(); ++i)
    s += (i ? "," : "") + std::to_string(a.universe[i]);
  s += "}: {";
  for (std::size_t i = 0; i < elements.size(); ++i)
    s += (i ? ", " : "") + std::to_string(elements[i]);
  s += "} method: " + to_string(method);
  return s;
}

DominionReport dominion(FiniteMonoid const& b, SubmonoidEmbedding const& a,
                        DominionMethod method, std::size_t cap) {
  if (cap == 0) cap = b.order() * b.order();
  switch (method) {
    case DominionMethod::pushout:
      return DominionReport{dominion_pushout(b, a), method, cap};
    case DominionMethod::zigzag:
      return DominionReport{dominion_zigzag(b, a, cap), method, cap};
    case DominionMethod::both: {
      std::vector<ElementId> via_pushout = dominion_pushout(b, a);
      std::vector<ElementId> via_zigzag = dominion_zigzag(b, a, cap);
      if (via_pushout != via_zigzag) {
        ElementId culprit = 0;
        for (ElementId x = 0; x < b.order(); ++x) {
          bool in_p = std::binary_search(via_pushout.begin(), via_pushout.end(), x);
          bool in_z = std::binary_search(via_zigzag.begin(), via_zigzag.end(), x);
          if (in_p != in_z) {
            culprit = x;
            break;
          }
        }
        throw MethodDisagreement(
            "dominion methods disagree on element " + std::to_string(culprit) +
                " (zigzag cap " + std::to_string(cap) + ")",
            culprit, cap);
      }
      return DominionReport{std::move(via_pushout), method, cap};
    }
  }
  throw std::logic_error("dominion: unknown method");
}

std::vector<ElementId> confirmed_non_dominion(FiniteMonoid const& b,
                                              SubmonoidEmbedding const& a,
                                              std::vector<FiniteMonoid> const& targets,
                                              std::size_t hom_cap) {
  std::vector<bool> excluded(b.order(), false);
  for (FiniteMonoid const& c : targets) {
    std::vector<Homomorphism> homs = enumerate_homomorphisms(b, c, hom_cap);
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (std::size_t j = i + 1; j < homs.size(); ++j) {
        bool agree_on_a = true;
        for (ElementId x : a.universe)
          if (homs[i].map[x] != homs[j].map[x]) {
            agree_on_a = false;
            break;
          }
        if (!agree_on_a) continue;
        for (ElementId x = 0; x < b.order(); ++x)
          if (homs[i].map[x] != homs[j].map[x]) excluded[x] = true;
      }
  }
  std::vector<ElementId> out;
  for (ElementId x = 0; x < b.order(); ++x)
    if (excluded[x]) out.push_back(x);
  return out;
}

}  // namespace domlab
