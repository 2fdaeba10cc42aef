#include "domlab/zigzag.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace domlab {

namespace {

void check_shape(ZigzagWitness const& w) {
  if (w.args.size() != 2 * w.n + 1)
    throw ValidationError("zigzag has " + std::to_string(w.args.size()) +
                          " arguments, expected " + std::to_string(2 * w.n + 1));
  if (w.spine_z.size() != w.n || w.spine_w.size() != w.n)
    throw ValidationError("zigzag spine lengths do not match n");
  for (ElementId a : w.args) w.ambient.check_element(a);
  for (ElementId z : w.spine_z) w.ambient.check_element(z);
  for (ElementId v : w.spine_w) w.ambient.check_element(v);
  w.ambient.check_element(w.value);
}

ZigzagWitness checked(ZigzagWitness w, char const* who) {
  if (!verify_witness(w))
    throw std::logic_error(std::string(who) + ": output fails verification");
  return w;
}

}  // namespace

std::optional<EquationViolation> first_violation(ZigzagWitness const& w) {
  check_shape(w);
  FiniteMonoid const& B = w.ambient;
  if (w.n == 0) {
    if (w.args[0] != w.value) return EquationViolation{1, 0};
    return std::nullopt;
  }
  // a_k = args[k-1], z_i = spine_z[i-1], w_i = spine_w[i-1]
  if (B.mul(w.args[0], w.spine_z[0]) != w.value) return EquationViolation{1, 0};
  if (B.mul(w.spine_w[0], w.args[1]) != w.args[0]) return EquationViolation{2, 0};
  for (std::size_t i = 1; i < w.n; ++i) {
    if (B.mul(w.args[2 * i - 1], w.spine_z[i - 1]) !=
        B.mul(w.args[2 * i], w.spine_z[i]))
      return EquationViolation{3, i};
    if (B.mul(w.spine_w[i - 1], w.args[2 * i]) !=
        B.mul(w.spine_w[i], w.args[2 * i + 1]))
      return EquationViolation{4, i};
  }
  if (B.mul(w.args[2 * w.n - 1], w.spine_z[w.n - 1]) != w.args[2 * w.n])
    return EquationViolation{5, 0};
  if (B.mul(w.spine_w[w.n - 1], w.args[2 * w.n]) != w.value)
    return EquationViolation{6, 0};
  return std::nullopt;
}

bool verify_witness(ZigzagWitness const& w) { return !first_violation(w); }

std::vector<SpineLink> spine_chain(ZigzagWitness const& w) {
  if (w.n == 0) throw ValidationError("spine_chain requires n >= 1");
  if (!verify_witness(w)) throw ValidationError("spine_chain requires a verified witness");
  FiniteMonoid const& B = w.ambient;
  std::vector<SpineLink> chain;
  for (std::size_t m = 0; m < w.n; ++m) {
    ElementId d_m = m == 0 ? B.neutral() : w.spine_w[m - 1];
    SpineLink link{B.mul(B.mul(d_m, w.args[2 * m]), w.spine_z[m]),
                   B.mul(B.mul(w.spine_w[m], w.args[2 * m + 1]), w.spine_z[m])};
    if (link.left != w.value || link.right != w.value)
      throw std::logic_error("spine_chain: link " + std::to_string(m) +
                             " does not meet the witness value");
    chain.push_back(link);
  }
  return chain;
}

ZigzagWitness transform_drop_head(ZigzagWitness const& w) {
  if (w.n == 0) throw ValidationError("drop_head requires n >= 1");
  if (!verify_witness(w)) throw ValidationError("drop_head requires a verified witness");
  ZigzagWitness out{w.ambient, w.n - 1, {}, {}, {}, w.value};
  out.args.push_back(w.ambient.mul(w.spine_w[0], w.args[2]));
  out.args.insert(out.args.end(), w.args.begin() + 3, w.args.end());
  out.spine_z.assign(w.spine_z.begin() + 1, w.spine_z.end());
  out.spine_w.assign(w.spine_w.begin() + 1, w.spine_w.end());
  return checked(std::move(out), "drop_head");
}

ZigzagWitness transform_scale(ZigzagWitness const& w, ElementId e) {
  if (!verify_witness(w)) throw ValidationError("scale requires a verified witness");
  w.ambient.check_element(e);
  ZigzagWitness out = w;
  out.args[0] = w.ambient.mul(e, w.args[0]);
  for (ElementId& d : out.spine_w) d = w.ambient.mul(e, d);
  out.value = w.ambient.mul(e, w.value);
  return checked(std::move(out), "scale");
}

ZigzagWitness transform_shorten_unit(ZigzagWitness const& w) {
  if (w.n == 0) throw ValidationError("shorten_unit requires n >= 1");
  if (!verify_witness(w))
    throw ValidationError("shorten_unit requires a verified witness");
  if (w.args[1] != w.ambient.neutral())
    throw ValidationError("shorten_unit requires a_2 to be the neutral element");
  // equation (2) forces w_1 = a_1, so dropping the head lands on a_1 a_3
  return transform_drop_head(w);
}

ZigzagWitness transform_shorten_equal(ZigzagWitness const& w, ElementId d1_inverse) {
  if (w.n == 0) throw ValidationError("shorten_equal requires n >= 1");
  if (!verify_witness(w))
    throw ValidationError("shorten_equal requires a verified witness");
  if (w.args[0] != w.args[1])
    throw ValidationError("shorten_equal requires a_1 = a_2");
  w.ambient.check_element(d1_inverse);
  if (w.ambient.mul(w.spine_w[0], d1_inverse) != w.ambient.neutral())
    throw ValidationError("shorten_equal: supplied element is not an inverse of w_1");
  // b = w_1 b, so scaling the dropped witness by w_1^{-1} restores the value
  // and turns the head argument w_1 a_3 back into a_3.
  return transform_scale(transform_drop_head(w), d1_inverse);
}

namespace {

// Factorizations of each ambient element v as v = a * u with a in the
// submonoid; the backbone of both witness search directions.
struct FactorTable {
  // factors[v] lists the pairs (a, u), a in sub, u in ambient, a*u = v.
  std::vector<std::vector<std::pair<ElementId, ElementId>>> factors;

  FactorTable(FiniteMonoid const& B, SubmonoidEmbedding const& sub)
      : factors(B.order()) {
    for (ElementId a : sub.universe)
      for (ElementId u = 0; u < B.order(); ++u)
        factors[B.mul(a, u)].emplace_back(a, u);
  }
};

struct SearchStep {
  std::size_t parent;   // index into the state arrays; npos for initial states
  ElementId arg_odd;    // a_{2i+1} (or a_1 for an initial state)
  ElementId z;          // z_{i+1}  (or z_1)
  ElementId w;          // w_{i+1}  (or w_1)
  ElementId arg_even;   // a_{2i+2} (or a_2)
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

std::optional<ZigzagWitness> search_witness(FiniteMonoid const& ambient,
                                            SubmonoidEmbedding const& sub,
                                            ElementId b, std::size_t cap) {
  if (!(sub.ambient == ambient))
    throw ValidationError("search_witness: submonoid has a different ambient monoid");
  ambient.check_element(b);

  if (sub.contains(b))
    return ZigzagWitness{ambient, 0, {b}, {}, {}, b};
  if (cap == 0) return std::nullopt;

  FactorTable ft(ambient, sub);
  std::size_t const order = ambient.order();
  auto state_id = [order](ElementId w, ElementId r) { return w * order + r; };

  // Breadth-first over states (w_i, a_{2i} z_i); each state is expanded once,
  // so reachability saturates after at most |B|^2 layers.
  std::vector<std::size_t> seen(order * order, npos);
  std::vector<SearchStep> steps;
  std::vector<std::pair<ElementId, ElementId>> states;  // (w, right product)
  std::deque<std::size_t> frontier;
  std::deque<std::size_t> next_frontier;

  auto visit = [&](ElementId wv, ElementId rv, SearchStep step,
                   std::deque<std::size_t>& layer) {
    std::size_t id = state_id(wv, rv);
    if (seen[id] != npos) return;
    seen[id] = steps.size();
    steps.push_back(step);
    states.emplace_back(wv, rv);
    layer.push_back(steps.size() - 1);
  };

  // stage 1: a_1 z_1 = b, w_1 a_2 = a_1
  for (auto const& [a1, z1] : ft.factors[b])
    for (auto const& [a2, w1] : ft.factors[a1])
      visit(w1, ambient.mul(a2, z1), SearchStep{npos, a1, z1, w1, a2}, frontier);

  auto reconstruct = [&](std::size_t leaf, std::size_t depth) -> ZigzagWitness {
    std::vector<SearchStep> path;
    for (std::size_t s = leaf; s != npos; s = path.back().parent)
      path.push_back(steps[s]);
    std::reverse(path.begin(), path.end());
    ZigzagWitness out{ambient, depth, {}, {}, {}, b};
    for (SearchStep const& st : path) {
      out.args.push_back(st.arg_odd);
      out.args.push_back(st.arg_even);
      out.spine_z.push_back(st.z);
      out.spine_w.push_back(st.w);
    }
    out.args.push_back(states[leaf].second);  // a_{2n+1} = right product
    if (!verify_witness(out))
      throw std::logic_error("search_witness: reconstructed witness fails");
    return out;
  };

  for (std::size_t depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    // termination: a_{2n+1} = right product must lie in the submonoid and
    // close equation (6)
    for (std::size_t s : frontier) {
      auto [wv, rv] = states[s];
      if (sub.contains(rv) && ambient.mul(wv, rv) == b) return reconstruct(s, depth);
    }
    if (depth == cap) break;
    next_frontier.clear();
    for (std::size_t s : frontier) {
      auto [wv, rv] = states[s];
      for (auto const& [a_odd, z_next] : ft.factors[rv]) {
        ElementId left = ambient.mul(wv, a_odd);
        for (auto const& [a_even, w_next] : ft.factors[left])
          visit(w_next, ambient.mul(a_even, z_next),
                SearchStep{s, a_odd, z_next, w_next, a_even}, next_frontier);
      }
    }
    frontier.swap(next_frontier);
  }
  return std::nullopt;
}

std::vector<ElementId> isbell_value(FiniteMonoid const& ambient,
                                    std::vector<ElementId> const& args) {
  if (args.size() % 2 == 0)
    throw ValidationError("isbell_value: argument count must be odd");
  for (ElementId a : args) ambient.check_element(a);
  std::size_t n = args.size() / 2;
  if (n == 0) return {args[0]};

  std::size_t const order = ambient.order();
  // The z-equations and w-equations share no variable, so each side is a
  // separate reachability pass over single elements; a value works iff both
  // sides produce it.

  // z side, backwards from (5): feasible z_i given z_{i+1} feasible.
  std::vector<bool> z_ok(order, false);
  for (ElementId z = 0; z < order; ++z)
    z_ok[z] = ambient.mul(args[2 * n - 1], z) == args[2 * n];
  for (std::size_t i = n - 1; i >= 1; --i) {
    std::vector<bool> image(order, false);
    for (ElementId z = 0; z < order; ++z)
      if (z_ok[z]) image[ambient.mul(args[2 * i], z)] = true;
    std::vector<bool> prev(order, false);
    for (ElementId z = 0; z < order; ++z)
      prev[z] = image[ambient.mul(args[2 * i - 1], z)];
    z_ok = std::move(prev);
  }
  std::vector<bool> from_z(order, false);
  for (ElementId z = 0; z < order; ++z)
    if (z_ok[z]) from_z[ambient.mul(args[0], z)] = true;  // (1)

  // w side, forwards from (2).
  std::vector<bool> w_ok(order, false);
  for (ElementId w = 0; w < order; ++w)
    w_ok[w] = ambient.mul(w, args[1]) == args[0];
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<bool> image(order, false);
    for (ElementId w = 0; w < order; ++w)
      if (w_ok[w]) image[ambient.mul(w, args[2 * i])] = true;
    std::vector<bool> next(order, false);
    for (ElementId w = 0; w < order; ++w)
      next[w] = image[ambient.mul(w, args[2 * i + 1])];
    w_ok = std::move(next);
  }
  std::vector<bool> from_w(order, false);
  for (ElementId w = 0; w < order; ++w)
    if (w_ok[w]) from_w[ambient.mul(w, args[2 * n])] = true;  // (6)

  std::vector<ElementId> values;
  for (ElementId v = 0; v < order; ++v)
    if (from_z[v] && from_w[v]) values.push_back(v);
  return values;
}

std::vector<ElementId> extendable_inverse(FiniteMonoid const& m, VarietySignature sig,
                                          ElementId a) {
  if (sig.m == 0)
    throw ValidationError("extendable_inverse requires a proper variety (m >= 1)");
  if (!satisfies(m, sig))
    throw ValidationError("extendable_inverse: monoid is not in " + to_string(sig));
  m.check_element(a);
  std::vector<ElementId> out;
  ElementId an = m.pow(a, sig.n);
  ElementId an1 = m.mul(an, a);
  for (ElementId b = 0; b < m.order(); ++b)
    if (m.mul(an1, b) == an && m.mul(m.mul(b, b), a) == b) out.push_back(b);
  return out;
}

std::string to_string(ZigzagWitness const& w) {
  std::string s = "zigzag n=" + std::to_string(w.n) + " args:";
  for (ElementId a : w.args) s += " " + std::to_string(a);
  s += " z:";
  for (ElementId z : w.spine_z) s += " " + std::to_string(z);
  s += " w:";
  for (ElementId v : w.spine_w) s += " " + std::to_string(v);
  s += " value: " + std::to_string(w.value);
  return s;
}

}  // namespace domlab
