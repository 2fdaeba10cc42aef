#include "domlab/laws.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "domlab/pushout.hpp"
#include "domlab/zigzag.hpp"

namespace domlab {

namespace {

// All permutations of 1..k-1 (position 0 pinned), memoized for the orders
// the enumerator visits.
std::vector<std::vector<ElementId>> make_perms(std::size_t k) {
  std::vector<ElementId> base;
  for (ElementId e = 1; e < k; ++e) base.push_back(e);
  std::vector<std::vector<ElementId>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<std::vector<ElementId>> const& perms_fixing_zero(std::size_t k) {
  static const auto cache = [] {
    std::array<std::vector<std::vector<ElementId>>, 8> c;
    for (std::size_t k = 1; k < 8; ++k) c[k] = make_perms(k);
    return c;
  }();
  if (k < 8) return cache[k];
  thread_local std::vector<std::vector<ElementId>> big;
  big = make_perms(k);
  return big;
}

// Canonical form of a raw table whose neutral element is `neutral`.
std::vector<ElementId> canonical_of(std::vector<ElementId> const& table,
                                    std::size_t k, ElementId neutral) {
  // inv maps new index -> old element; p maps old -> new
  std::vector<ElementId> inv(k), p(k), best, flat(k * k);
  bool first = true;
  std::vector<ElementId> others;
  for (ElementId e = 0; e < k; ++e)
    if (e != neutral) others.push_back(e);
  for (auto const& perm : perms_fixing_zero(k)) {
    inv[0] = neutral;
    for (std::size_t t = 0; t + 1 < k; ++t) inv[t + 1] = others[perm[t] - 1];
    for (std::size_t t = 0; t < k; ++t) p[inv[t]] = static_cast<ElementId>(t);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        flat[a * k + b] = p[table[inv[a] * k + inv[b]]];
    if (first || flat < best) {
      best = flat;
      first = false;
    }
  }
  return best;
}

}  // namespace

std::vector<ElementId> canonical_table(FiniteMonoid const& m) {
  return canonical_of(m.table(), m.order(), m.neutral());
}

bool isomorphic(FiniteMonoid const& lhs, FiniteMonoid const& rhs) {
  return lhs.order() == rhs.order() && canonical_table(lhs) == canonical_table(rhs);
}

namespace {

// Backtracking completion of commutative tables with neutral element 0.
// Calls sink on every completed associative table.
void complete_tables(std::size_t k,
                     std::function<void(std::vector<ElementId> const&)> const& sink) {
  ElementId const UNDEF = static_cast<ElementId>(k);
  std::vector<ElementId> t(k * k, UNDEF);
  for (std::size_t a = 0; a < k; ++a) t[a] = t[a * k] = static_cast<ElementId>(a);

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) cells.emplace_back(i, j);

  auto associative_so_far = [&]() {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        ElementId ab = t[a * k + b];
        if (ab == UNDEF) continue;
        for (std::size_t c = 0; c < k; ++c) {
          ElementId bc = t[b * k + c];
          if (bc == UNDEF) continue;
          ElementId l = t[ab * k + c];
          ElementId r = t[a * k + bc];
          if (l != UNDEF && r != UNDEF && l != r) return false;
        }
      }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      sink(t);
      return;
    }
    auto [i, j] = cells[idx];
    for (ElementId v = 0; v < k; ++v) {
      t[i * k + j] = t[j * k + i] = v;
      if (associative_so_far()) self(self, idx + 1);
    }
    t[i * k + j] = t[j * k + i] = UNDEF;
  };
  rec(rec, 0);
}

bool admits(EnumerationConfig const& cfg, FiniteMonoid const& m) {
  if (cfg.variety_filter && !satisfies(m, *cfg.variety_filter)) return false;
  if (cfg.si_only && !subdirect_irreducibility(m).subdirectly_irreducible)
    return false;
  return true;
}

}  // namespace

void enumerate_monoids(EnumerationConfig const& cfg,
                       std::function<void(FiniteMonoid const&)> const& yield) {
  if (cfg.max_order > cfg.hard_cap)
    throw CapExceededError("enumeration order " + std::to_string(cfg.max_order) +
                           " exceeds hard cap " + std::to_string(cfg.hard_cap));
  for (std::size_t k = 1; k <= cfg.max_order; ++k) {
    std::size_t index = 0;
    complete_tables(k, [&](std::vector<ElementId> const& table) {
      if (canonical_of(table, k, 0) != table) return;
      FiniteMonoid m = FiniteMonoid::validate(
          k, 0, table, {}, "M" + std::to_string(k) + "_" + std::to_string(index));
      ++index;
      if (admits(cfg, m)) yield(m);
    });
  }
}

std::vector<FiniteMonoid> collect_monoids(EnumerationConfig const& cfg) {
  std::vector<FiniteMonoid> out;
  enumerate_monoids(cfg, [&](FiniteMonoid const& m) { out.push_back(m); });
  return out;
}

std::vector<std::size_t> class_counts_canonical(std::size_t max_order) {
  std::vector<std::size_t> counts(max_order + 1, 0);
  for (std::size_t k = 1; k <= max_order; ++k)
    complete_tables(k, [&](std::vector<ElementId> const& table) {
      if (canonical_of(table, k, 0) == table) ++counts[k];
    });
  return counts;
}

std::vector<std::size_t> class_counts_dedup(std::size_t max_order) {
  std::vector<std::size_t> counts(max_order + 1, 0);
  for (std::size_t k = 1; k <= max_order; ++k) {
    std::set<std::vector<ElementId>> classes;
    complete_tables(k, [&](std::vector<ElementId> const& table) {
      classes.insert(canonical_of(table, k, 0));
    });
    counts[k] = classes.size();
  }
  return counts;
}

std::vector<VarietySignature> default_signature_battery() {
  return {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
}

std::pair<FiniteMonoid, SubmonoidEmbedding> pinned_dominion_pair() {
  FiniteMonoid nine = nine_element();
  SubmonoidEmbedding sub = SubmonoidEmbedding::generate(nine, {6, 2, 3});
  return {std::move(nine), std::move(sub)};
}

std::vector<SubmonoidEmbedding> all_submonoids(FiniteMonoid const& m) {
  std::size_t k = m.order();
  if (k > 16) throw CapExceededError("all_submonoids: order too large");
  std::vector<SubmonoidEmbedding> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (!(mask >> m.neutral() & 1)) continue;
    std::vector<ElementId> universe;
    for (ElementId e = 0; e < k; ++e)
      if (mask >> e & 1) universe.push_back(e);
    bool closed = true;
    for (ElementId a : universe) {
      for (ElementId b : universe)
        if (!(mask >> m.mul(a, b) & 1)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(SubmonoidEmbedding{m, std::move(universe)});
  }
  return out;
}

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::chrono::duration<double> elapsed() const {
    return std::chrono::steady_clock::now() - start;
  }
};

std::string element_list(std::vector<ElementId> const& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

// Enumerated monoids plus the pinned nine-element instance when it passes
// the config's filters.
void for_instances(EnumerationConfig const& cfg,
                   std::function<void(FiniteMonoid const&)> const& visit) {
  enumerate_monoids(cfg, visit);
  FiniteMonoid nine = nine_element();
  if ((!cfg.variety_filter || satisfies(nine, *cfg.variety_filter)) &&
      (!cfg.si_only || subdirect_irreducibility(nine).subdirectly_irreducible))
    visit(nine);
}

void for_submonoid_pairs(
    EnumerationConfig const& cfg,
    std::function<void(FiniteMonoid const&, SubmonoidEmbedding const&)> const& visit) {
  enumerate_monoids(cfg, [&](FiniteMonoid const& b) {
    for (SubmonoidEmbedding const& a : all_submonoids(b)) visit(b, a);
  });
  auto [nine, sub] = pinned_dominion_pair();
  visit(nine, sub);
}

}  // namespace

LawReport check_si_dichotomy(EnumerationConfig cfg) {
  if (!cfg.variety_filter || cfg.variety_filter->m < 1)
    throw ValidationError("si_dichotomy requires a variety filter with m >= 1");
  VarietySignature sig = *cfg.variety_filter;
  cfg.si_only = true;
  LawReport report;
  report.law = "si_dichotomy " + to_string(sig);
  Stopwatch clock;
  for_instances(cfg, [&](FiniteMonoid const& m) {
    for (ElementId a = 0; a < m.order(); ++a) {
      ++report.instances_checked;
      ElementClassification cls = m.classify_element(a);
      bool ok = false;
      if (cls.kind == ElementClassification::Kind::nilpotent)
        ok = cls.degree <= sig.n;
      else if (cls.kind == ElementClassification::Kind::invertible)
        ok = cls.inverse == m.pow(a, sig.m - 1);
      if (!ok)
        report.counterexamples.push_back(m.name() + " element " + std::to_string(a));
    }
  });
  report.elapsed = clock.elapsed();
  return report;
}

LawReport check_grillet(EnumerationConfig cfg) {
  cfg.si_only = true;
  LawReport report;
  report.law = "grillet";
  Stopwatch clock;
  for_instances(cfg, [&](FiniteMonoid const& m) {
    for (ElementId a = 0; a < m.order(); ++a) {
      ++report.instances_checked;
      if (m.classify_element(a).kind == ElementClassification::Kind::neither)
        report.counterexamples.push_back(m.name() + " element " + std::to_string(a) +
                                         " neither nilpotent nor invertible");
    }
  });
  report.elapsed = clock.elapsed();
  return report;
}

LawReport check_idempotent_dichotomy(EnumerationConfig cfg) {
  cfg.si_only = true;
  LawReport report;
  report.law = "idempotent_dichotomy";
  Stopwatch clock;
  for_instances(cfg, [&](FiniteMonoid const& m) {
    std::optional<ElementId> zero = m.find_zero();
    for (ElementId a = 0; a < m.order(); ++a) {
      if (m.mul(a, a) != a) continue;
      ++report.instances_checked;
      if (a != m.neutral() && (!zero || a != *zero))
        report.counterexamples.push_back(m.name() + " idempotent " +
                                         std::to_string(a) +
                                         " is neither neutral nor zero");
    }
  });
  report.elapsed = clock.elapsed();
  return report;
}

LawReport check_dominion_equivalence(EnumerationConfig cfg, std::size_t cap) {
  LawReport report;
  report.law = "dominion_equivalence";
  Stopwatch clock;
  for_submonoid_pairs(cfg, [&](FiniteMonoid const& b, SubmonoidEmbedding const& a) {
    ++report.instances_checked;
    std::size_t effective_cap = cap ? cap : b.order() * b.order();
    std::vector<ElementId> via_zigzag = dominion_zigzag(b, a, effective_cap);
    std::vector<ElementId> via_pushout = dominion_pushout(b, a);
    if (via_zigzag != via_pushout)
      report.counterexamples.push_back(
          b.name() + " A=" + element_list(a.universe) + " zigzag=" +
          element_list(via_zigzag) + " pushout=" + element_list(via_pushout) +
          " cap=" + std::to_string(effective_cap));
  });
  report.elapsed = clock.elapsed();
  return report;
}

LawReport check_inverse_closure(EnumerationConfig cfg) {
  LawReport report;
  report.law = "inverse_closure";
  Stopwatch clock;
  for_submonoid_pairs(cfg, [&](FiniteMonoid const& b, SubmonoidEmbedding const& a) {
    if (!a.as_monoid().is_inverse_monoid()) return;
    ++report.instances_checked;
    std::vector<ElementId> dom = dominion_pushout(b, a);
    if (dom != a.universe)
      report.counterexamples.push_back(b.name() + " inverse A=" +
                                       element_list(a.universe) + " dominion=" +
                                       element_list(dom));
  });
  report.elapsed = clock.elapsed();
  return report;
}

LawReport check_weak_es(EnumerationConfig cfg) {
  LawReport report;
  report.law = "weak_es";
  Stopwatch clock;
  for_submonoid_pairs(cfg, [&](FiniteMonoid const& b, SubmonoidEmbedding const& a) {
    if (a.universe.size() == b.order()) return;
    ++report.instances_checked;
    std::vector<ElementId> dom = dominion_pushout(b, a);
    if (dom.size() == b.order())
      report.counterexamples.push_back(b.name() + " proper A=" +
                                       element_list(a.universe) +
                                       " dominates everything");
  });
  report.elapsed = clock.elapsed();
  return report;
}

LawReport check_main_theorem(VarietySignature sig, EnumerationConfig cfg) {
  LawReport report;
  report.law = "main_theorem " + to_string(sig);
  Stopwatch clock;
  if (is_inverse_variety(sig)) {
    cfg.variety_filter = sig;
    enumerate_monoids(cfg, [&](FiniteMonoid const& b) {
      for (SubmonoidEmbedding const& a : all_submonoids(b)) {
        ++report.instances_checked;
        std::vector<ElementId> dom = dominion_pushout(b, a);
        if (dom != a.universe)
          report.counterexamples.push_back(b.name() + " A=" +
                                           element_list(a.universe) + " dominion=" +
                                           element_list(dom));
      }
    });
  } else {
    auto [nine, sub] = pinned_dominion_pair();
    ++report.instances_checked;
    if (!satisfies(nine, sig)) {
      report.counterexamples.push_back(
          "nine-element monoid unexpectedly outside " + to_string(sig));
    } else {
      std::vector<ElementId> dom = dominion_pushout(nine, sub);
      if (dom == sub.universe)
        report.counterexamples.push_back(
            "nine-element pair fails to escape its submonoid in " + to_string(sig));
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace domlab
