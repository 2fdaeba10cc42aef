#include "domlab/morphisms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace domlab {

Homomorphism Homomorphism::validate(FiniteMonoid source, FiniteMonoid target,
                                    std::vector<ElementId> map) {
  if (map.size() != source.order())
    throw ValidationError("homomorphism map size does not match source order");
  for (ElementId v : map) target.check_element(v);
  if (map[source.neutral()] != target.neutral())
    throw ValidationError("homomorphism does not preserve the neutral element");
  for (ElementId a = 0; a < source.order(); ++a)
    for (ElementId b = a; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw ValidationError("homomorphism property fails at pair (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
  return Homomorphism{std::move(source), std::move(target), std::move(map)};
}

bool Homomorphism::is_injective() const {
  std::vector<bool> seen(target.order(), false);
  for (ElementId v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> seen(target.order(), false);
  for (ElementId v : map) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
  if (!(f.target == g.source))
    throw ValidationError("compose: inner target differs from outer source");
  std::vector<ElementId> map(f.source.order());
  for (ElementId a = 0; a < f.source.order(); ++a) map[a] = g.map[f.map[a]];
  return Homomorphism::validate(f.source, g.target, std::move(map));
}

namespace {

// Union-find with path halving.
struct UnionFind {
  std::vector<ElementId> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  ElementId find(ElementId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true when two distinct classes were merged.
  bool unite(ElementId x, ElementId y) {
    ElementId rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

std::vector<ElementId> least_representative_map(UnionFind& uf, std::size_t n) {
  std::vector<ElementId> least(n, 0);
  std::vector<bool> assigned(n, false);
  for (ElementId a = 0; a < n; ++a) {
    ElementId r = uf.find(a);
    if (!assigned[r]) {
      assigned[r] = true;
      least[r] = a;  // ascending scan: first member of the class is least
    }
  }
  std::vector<ElementId> rep(n);
  for (ElementId a = 0; a < n; ++a) rep[a] = least[uf.find(a)];
  return rep;
}

}  // namespace

Congruence Congruence::identity(FiniteMonoid const& m) {
  std::vector<ElementId> rep(m.order());
  std::iota(rep.begin(), rep.end(), 0);
  return Congruence(m, std::move(rep));
}

Congruence Congruence::universal(FiniteMonoid const& m) {
  return Congruence(m, std::vector<ElementId>(m.order(), 0));
}

Congruence Congruence::generated(
    FiniteMonoid const& m, std::vector<std::pair<ElementId, ElementId>> const& pairs) {
  std::size_t n = m.order();
  UnionFind uf(n);
  std::deque<std::pair<ElementId, ElementId>> pending;
  for (auto const& [a, b] : pairs) {
    m.check_element(a);
    m.check_element(b);
    pending.emplace_back(a, b);
  }
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    if (!uf.unite(x, y)) continue;
    for (ElementId c = 0; c < n; ++c) pending.emplace_back(m.mul(x, c), m.mul(y, c));
  }
  return Congruence(m, least_representative_map(uf, n));
}

Congruence Congruence::meet(Congruence const& lhs, Congruence const& rhs) {
  if (!(lhs.monoid_ == rhs.monoid_))
    throw ValidationError("meet: congruences live on different monoids");
  std::size_t n = lhs.monoid_.order();
  std::vector<ElementId> rep(n);
  // block of a in the meet is keyed by the pair of block representatives
  std::map<std::pair<ElementId, ElementId>, ElementId> key;
  for (ElementId a = 0; a < n; ++a) {
    auto k = std::make_pair(lhs.rep_[a], rhs.rep_[a]);
    auto it = key.find(k);
    if (it == key.end()) {
      key.emplace(k, a);
      rep[a] = a;
    } else {
      rep[a] = it->second;
    }
  }
  return Congruence(lhs.monoid_, std::move(rep));
}

bool Congruence::is_identity() const {
  for (ElementId a = 0; a < rep_.size(); ++a)
    if (rep_[a] != a) return false;
  return true;
}

std::size_t Congruence::block_count() const {
  std::size_t count = 0;
  for (ElementId a = 0; a < rep_.size(); ++a)
    if (rep_[a] == a) ++count;
  return count;
}

std::vector<std::vector<ElementId>> Congruence::blocks() const {
  std::vector<std::vector<ElementId>> out;
  std::vector<std::size_t> index(rep_.size(), 0);
  for (ElementId a = 0; a < rep_.size(); ++a) {
    if (rep_[a] == a) {
      index[a] = out.size();
      out.emplace_back();
    }
    out[index[rep_[a]]].push_back(a);
  }
  return out;
}

SubmonoidEmbedding SubmonoidEmbedding::validate(FiniteMonoid ambient,
                                                std::vector<ElementId> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  for (ElementId a : universe) ambient.check_element(a);
  if (!std::binary_search(universe.begin(), universe.end(), ambient.neutral()))
    throw ValidationError("submonoid universe does not contain the neutral element");
  for (ElementId a : universe)
    for (ElementId b : universe) {
      ElementId p = ambient.mul(a, b);
      if (!std::binary_search(universe.begin(), universe.end(), p))
        throw ValidationError("submonoid universe not closed: " + std::to_string(a) +
                              "*" + std::to_string(b) + " = " + std::to_string(p) +
                              " is outside");
    }
  return SubmonoidEmbedding{std::move(ambient), std::move(universe)};
}

SubmonoidEmbedding SubmonoidEmbedding::generate(FiniteMonoid ambient,
                                                std::vector<ElementId> const& gens) {
  auto universe = ambient.subuniverse_generate(gens);
  return SubmonoidEmbedding{std::move(ambient), std::move(universe)};
}

bool SubmonoidEmbedding::contains(ElementId a) const {
  return std::binary_search(universe.begin(), universe.end(), a);
}

FiniteMonoid SubmonoidEmbedding::as_monoid() const {
  std::size_t k = universe.size();
  std::vector<ElementId> local(ambient.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[universe[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = local[ambient.mul(universe[i], universe[j])];
  std::vector<std::string> labels;
  if (ambient.has_labels()) {
    for (ElementId a : universe) labels.push_back(ambient.labels()[a]);
  }
  std::string name = ambient.name().empty() ? "sub" : ambient.name() + "_sub";
  return FiniteMonoid::validate(k, local[ambient.neutral()], std::move(table),
                                std::move(labels), std::move(name),
                                std::max(FiniteMonoid::kDefaultMaxOrder, k));
}

Homomorphism SubmonoidEmbedding::inclusion() const {
  return Homomorphism::validate(as_monoid(), ambient, universe);
}

std::vector<Congruence> all_principal_congruences(FiniteMonoid const& m) {
  std::vector<Congruence> out;
  for (ElementId a = 0; a < m.order(); ++a)
    for (ElementId b = a + 1; b < m.order(); ++b) {
      Congruence theta = Congruence::generated(m, {{a, b}});
      if (std::find(out.begin(), out.end(), theta) == out.end())
        out.push_back(std::move(theta));
    }
  return out;
}

SubdirectIrreducibility subdirect_irreducibility(FiniteMonoid const& m) {
  if (m.order() == 1) return {false, std::nullopt};
  std::optional<Congruence> intersection;
  for (ElementId a = 0; a < m.order(); ++a)
    for (ElementId b = a + 1; b < m.order(); ++b) {
      Congruence theta = Congruence::generated(m, {{a, b}});
      intersection = intersection ? Congruence::meet(*intersection, theta)
                                  : std::move(theta);
      if (intersection->is_identity()) return {false, std::nullopt};
    }
  return {true, std::move(intersection)};
}

std::pair<FiniteMonoid, Homomorphism> quotient(FiniteMonoid const& m,
                                               Congruence const& theta) {
  if (!(theta.monoid() == m))
    throw ValidationError("quotient: congruence lives on a different monoid");
  std::size_t n = m.order();
  std::vector<ElementId> block_index(n, 0);
  std::vector<ElementId> block_rep;
  for (ElementId a = 0; a < n; ++a)
    if (theta.representative(a) == a) {
      block_index[a] = static_cast<ElementId>(block_rep.size());
      block_rep.push_back(a);
    }
  std::size_t k = block_rep.size();
  std::vector<ElementId> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = block_index[theta.representative(m.mul(block_rep[i], block_rep[j]))];
  std::vector<std::string> labels;
  if (m.has_labels()) {
    for (ElementId r : block_rep) labels.push_back(m.labels()[r]);
  }
  std::string name = m.name().empty() ? "quotient" : m.name() + "_q";
  FiniteMonoid q = FiniteMonoid::validate(
      k, block_index[theta.representative(m.neutral())], std::move(table),
      std::move(labels), std::move(name), std::max(FiniteMonoid::kDefaultMaxOrder, k));
  std::vector<ElementId> proj(n);
  for (ElementId a = 0; a < n; ++a) proj[a] = block_index[theta.representative(a)];
  Homomorphism projection = Homomorphism::validate(m, q, std::move(proj));
  return {std::move(q), std::move(projection)};
}

namespace {

// Minimal generating-by-closure set: repeatedly adjoin the least element not
// yet generated.
std::vector<ElementId> greedy_generators(FiniteMonoid const& m) {
  std::vector<ElementId> gens;
  std::vector<ElementId> closure = m.subuniverse_generate({});
  while (closure.size() < m.order()) {
    ElementId next = 0;
    while (std::binary_search(closure.begin(), closure.end(), next)) ++next;
    gens.push_back(next);
    closure = m.subuniverse_generate(gens);
  }
  return gens;
}

// Propagate a partial map to its multiplicative closure.  Returns false on a
// conflict with the homomorphism property.
bool propagate(FiniteMonoid const& m1, FiniteMonoid const& m2,
               std::vector<std::optional<ElementId>>& map) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId a = 0; a < m1.order(); ++a) {
      if (!map[a]) continue;
      for (ElementId b = a; b < m1.order(); ++b) {
        if (!map[b]) continue;
        ElementId c = m1.mul(a, b);
        ElementId w = m2.mul(*map[a], *map[b]);
        if (!map[c]) {
          map[c] = w;
          changed = true;
        } else if (*map[c] != w) {
          return false;
        }
      }
    }
  }
  return true;
}

void extend_homomorphisms(FiniteMonoid const& m1, FiniteMonoid const& m2,
                          std::vector<ElementId> const& gens, std::size_t next,
                          std::vector<std::optional<ElementId>> const& map,
                          std::vector<Homomorphism>& out) {
  if (next == gens.size()) {
    std::vector<ElementId> full(m1.order());
    for (ElementId a = 0; a < m1.order(); ++a) full[a] = map[a].value();
    out.push_back(Homomorphism::validate(m1, m2, std::move(full)));
    return;
  }
  for (ElementId v = 0; v < m2.order(); ++v) {
    auto candidate = map;
    if (candidate[gens[next]] && *candidate[gens[next]] != v) continue;
    candidate[gens[next]] = v;
    if (propagate(m1, m2, candidate))
      extend_homomorphisms(m1, m2, gens, next + 1, candidate, out);
  }
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(FiniteMonoid const& m1,
                                                  FiniteMonoid const& m2,
                                                  std::size_t cap) {
  std::vector<ElementId> gens = greedy_generators(m1);
  double budget = 1.0;
  for (std::size_t i = 0; i < gens.size(); ++i) budget *= static_cast<double>(m2.order());
  if (budget > static_cast<double>(cap))
    throw CapExceededError("homomorphism search space " + std::to_string(budget) +
                           " exceeds cap " + std::to_string(cap));
  std::vector<std::optional<ElementId>> partial(m1.order());
  partial[m1.neutral()] = m2.neutral();
  std::vector<Homomorphism> out;
  if (propagate(m1, m2, partial)) extend_homomorphisms(m1, m2, gens, 0, partial, out);
  return out;
}

}  // namespace domlab
