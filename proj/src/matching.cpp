// Copyright 2026 The maxpareto Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxpareto/matching.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#include "maxpareto/errors.hpp"
#include "maxpareto/json_util.hpp"
#include "maxpareto/pareto.hpp"

namespace maxpareto {

namespace {

// Dense edge lookup plus adjacency lists; rebuilt per operation, which is
// cheap at the sizes this toolkit targets.
struct GraphView {
  int n1, n2;
  Mat<char> present;
  Mat<Rational> weight;
  std::vector<std::vector<int>> adj1;  // V2 neighbors per V1 vertex, ascending

  explicit GraphView(const BipartiteInstance& g)
      : n1(g.n1), n2(g.n2), present(g.n1, g.n2, 0), weight(g.n1, g.n2), adj1(g.n1) {
    for (const auto& e : g.edges) {
      present(e.i, e.j) = 1;
      weight(e.i, e.j) = e.weight;
      adj1[e.i].push_back(e.j);
    }
    for (auto& a : adj1) std::sort(a.begin(), a.end());
  }

  bool has(int i, int j) const { return present(i, j) != 0; }
  const Rational& w(int i, int j) const { return weight(i, j); }
};

std::vector<int> partner_array(const BipartiteInstance& g, const Matching& m) {
  std::vector<int> p(g.n1, -1);
  for (const auto& [i, j] : m.pairs) p[i] = j;
  return p;
}

}  // namespace

void validate_graph(const BipartiteInstance& g) {
  if (g.n1 < 0 || g.n2 < 0) throw DimensionError("vertex counts cannot be negative");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.i < 0 || e.i >= g.n1 || e.j < 0 || e.j >= g.n2)
      throw DimensionError("edge endpoint out of range");
    if (e.weight < 0) throw ValidationError("edge weights must be nonnegative");
    if (!seen.emplace(e.i, e.j).second)
      throw ValidationError("duplicate edge in graph");
  }
}

bool Matching::matched(int i) const { return partner_of(i) >= 0; }

int Matching::partner_of(int i) const {
  for (const auto& [a, b] : pairs)
    if (a == i) return b;
  return -1;
}

Matching Matching::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Matching m;
  m.pairs = std::move(pairs);
  return m;
}

void validate_matching(const BipartiteInstance& g, const Matching& m) {
  GraphView view(g);
  std::vector<char> used1(g.n1, 0), used2(g.n2, 0);
  for (const auto& [i, j] : m.pairs) {
    if (i < 0 || i >= g.n1 || j < 0 || j >= g.n2)
      throw InvalidMatching("matched vertex out of range");
    if (!view.has(i, j)) throw InvalidMatching("matched pair is not a graph edge");
    if (used1[i]++ || used2[j]++) throw InvalidMatching("vertex matched twice");
  }
}

PayoffVector payoff_vector(const BipartiteInstance& g, const Matching& m) {
  validate_matching(g, m);
  GraphView view(g);
  PayoffVector u(g.n1, Rational(0));
  for (const auto& [i, j] : m.pairs) u[i] = view.w(i, j);
  return u;
}

ReducedGraph reduced_graph(const BipartiteInstance& g, const Matching& m,
                           const std::vector<int>& r) {
  validate_matching(g, m);
  std::vector<char> drop1(g.n1, 0), drop2(g.n2, 0);
  for (int i : r) {
    if (i < 0 || i >= g.n1) throw DimensionError("R contains an invalid vertex");
    drop1[i] = 1;
    int j = m.partner_of(i);
    if (j >= 0) drop2[j] = 1;
  }
  ReducedGraph out;
  out.v1_map.assign(g.n1, -1);
  out.v2_map.assign(g.n2, -1);
  int a = 0, b = 0;
  for (int i = 0; i < g.n1; ++i)
    if (!drop1[i]) out.v1_map[i] = a++;
  for (int j = 0; j < g.n2; ++j)
    if (!drop2[j]) out.v2_map[j] = b++;
  out.graph.n1 = a;
  out.graph.n2 = b;
  for (const auto& e : g.edges)
    if (out.v1_map[e.i] >= 0 && out.v2_map[e.j] >= 0)
      out.graph.edges.push_back({out.v1_map[e.i], out.v2_map[e.j], e.weight});
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [i, j] : m.pairs)
    if (out.v1_map[i] >= 0 && out.v2_map[j] >= 0)
      pairs.emplace_back(out.v1_map[i], out.v2_map[j]);
  out.induced = Matching::from_pairs(std::move(pairs));
  return out;
}

std::vector<Matching> enumerate_matchings(const BipartiteInstance& g, size_t cap) {
  validate_graph(g);
  GraphView view(g);
  std::vector<Matching> out;
  std::vector<char> used2(g.n2, 0);
  std::vector<std::pair<int, int>> current;

  auto emit = [&]() {
    if (out.size() >= cap) throw CapExceeded("matching enumeration cap exceeded");
    out.push_back(Matching::from_pairs(current));
  };
  // DFS over V1 vertices; each either stays unmatched or takes a free
  // neighbor. Every prefix choice yields a distinct matching, so emission
  // happens at the leaves only.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == g.n1) {
      emit();
      return;
    }
    self(self, i + 1);
    for (int j : view.adj1[i]) {
      if (used2[j]) continue;
      used2[j] = 1;
      current.emplace_back(i, j);
      self(self, i + 1);
      current.pop_back();
      used2[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Does any matching pay every vertex at least `base`, someone strictly more?
bool dominating_matching_search(const GraphView& view, const PayoffVector& base) {
  const int n1 = view.n1;
  if (view.n2 > 64) throw CapExceeded("dominance search supports n2 <= 64");

  // can_strict[i]: some vertex >= i has an edge strictly above its payoff.
  std::vector<char> can_strict(n1 + 1, 0);
  for (int i = n1 - 1; i >= 0; --i) {
    bool here = false;
    for (int j : view.adj1[i])
      if (view.w(i, j) > base[i]) {
        here = true;
        break;
      }
    can_strict[i] = here || can_strict[i + 1];
  }

  auto rec = [&](auto&& self, int i, uint64_t used, bool strict) -> bool {
    if (i == n1) return strict;
    if (!strict && !can_strict[i]) return false;
    // Unmatched keeps payoff 0; admissible only if the vertex earns 0 now.
    if (base[i] == 0 && self(self, i + 1, used, strict)) return true;
    for (int j : view.adj1[i]) {
      if (used & (uint64_t(1) << j)) continue;
      const Rational& w = view.w(i, j);
      if (w < base[i]) continue;
      if (self(self, i + 1, used | (uint64_t(1) << j), strict || w > base[i]))
        return true;
    }
    return false;
  };
  return rec(rec, 0, 0, false);
}

}  // namespace

bool dominating_matching_exists(const BipartiteInstance& g,
                                const PayoffVector& base) {
  validate_graph(g);
  if (static_cast<int>(base.size()) != g.n1)
    throw DimensionError("payoff vector length must equal n1");
  GraphView view(g);
  return dominating_matching_search(view, base);
}

bool is_po_matching(const BipartiteInstance& g, const Matching& m, int enum_cap,
                    const NumericMode& mode) {
  validate_matching(g, m);
  if (g.n1 > enum_cap) return is_fpo_matching(g, m, mode);
  GraphView view(g);
  PayoffVector base = payoff_vector(g, m);
  return !dominating_matching_search(view, base);
}

MaxParetoInstance encode_matching_instance(const BipartiteInstance& g,
                                           const std::vector<Rational>& c) {
  validate_graph(g);
  const int ne = static_cast<int>(g.edges.size());
  if (ne == 0) throw DimensionError("cannot encode a graph without edges");
  if (!c.empty() && static_cast<int>(c.size()) != ne)
    throw DimensionError("edge objective length mismatch");

  MaxParetoInstance inst;
  const int m = g.n1 + g.n2 + ne;
  inst.a = Mat<Rational>(m, ne);
  inst.b.assign(m, Rational(0));
  for (int e = 0; e < ne; ++e) {
    inst.a(g.edges[e].i, e) = 1;
    inst.a(g.n1 + g.edges[e].j, e) = 1;
    inst.a(g.n1 + g.n2 + e, e) = -1;
  }
  for (int v = 0; v < g.n1 + g.n2; ++v) inst.b[v] = 1;

  inst.payoff_map = Mat<Rational>(g.n1, ne);
  for (int e = 0; e < ne; ++e) inst.payoff_map(g.edges[e].i, e) = g.edges[e].weight;

  inst.objective = c.empty() ? std::vector<Rational>(ne, Rational(0)) : c;

  MaxParetoInstance::MatchingShape shape;
  shape.n1 = g.n1;
  shape.n2 = g.n2;
  for (const auto& e : g.edges) shape.edge_of_var.emplace_back(e.i, e.j);
  inst.matching_shape = shape;
  return inst;
}

std::vector<Rational> matching_indicator(const BipartiteInstance& g,
                                         const Matching& m) {
  validate_matching(g, m);
  std::vector<Rational> x(g.edges.size(), Rational(0));
  for (size_t e = 0; e < g.edges.size(); ++e)
    for (const auto& [i, j] : m.pairs)
      if (g.edges[e].i == i && g.edges[e].j == j) x[e] = 1;
  return x;
}

bool is_fpo_matching(const BipartiteInstance& g, const Matching& m,
                     const NumericMode& mode) {
  MaxParetoInstance inst = encode_matching_instance(g);
  std::vector<Rational> x = matching_indicator(g, m);
  return !verify_pareto(inst, x, mode).dominated;
}

bool validate_blocking_set(const BipartiteInstance& g, const Matching& m,
                           const BlockingSet& b) {
  if (b.members.empty()) return false;
  GraphView view(g);
  std::vector<int> partner = partner_array(g, m);
  std::vector<char> in_b(g.n1, 0);
  std::vector<char> in_mb(g.n2, 0);
  for (int i : b.members) {
    if (i < 0 || i >= g.n1 || partner[i] < 0) return false;
    if (in_b[i]) return false;
    in_b[i] = 1;
    in_mb[partner[i]] = 1;
  }
  for (int i : b.members) {
    const Rational& own = view.w(i, partner[i]);
    for (int j : view.adj1[i]) {
      if (view.w(i, j) > own) return false;
      // Ties are only allowed into M(B); anything outside must be strict.
      if (!in_mb[j] && view.w(i, j) == own) return false;
    }
  }
  return true;
}

std::vector<BlockingSet> enumerate_blocking_sets(const BipartiteInstance& g,
                                                 const Matching& m) {
  validate_matching(g, m);
  std::vector<int> matched;
  for (const auto& [i, j] : m.pairs) matched.push_back(i);
  std::sort(matched.begin(), matched.end());
  if (matched.size() > 20) throw CapExceeded("too many matched vertices to enumerate");
  std::vector<BlockingSet> out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << matched.size()); ++mask) {
    BlockingSet b;
    for (size_t t = 0; t < matched.size(); ++t)
      if (mask & (uint32_t(1) << t)) b.members.push_back(matched[t]);
    if (validate_blocking_set(g, m, b)) out.push_back(std::move(b));
  }
  return out;
}

namespace {

std::atomic<long> g_blocking_fallbacks{0};

// Kuhn's augmenting-path maximum matching on an explicit auxiliary edge set.
// Returns the V2 partner per V1' vertex (-1 when exposed).
struct AuxMatching {
  std::vector<int> match1;  // per index into vs (V1' ordering)
  std::vector<int> match2;  // per original V2 id
};

AuxMatching max_matching(const std::vector<std::vector<int>>& adj, int n2) {
  const int n = static_cast<int>(adj.size());
  AuxMatching r;
  r.match1.assign(n, -1);
  r.match2.assign(n2, -1);
  std::vector<char> visited(n2, 0);
  auto try_augment = [&](auto&& self, int v) -> bool {
    for (int j : adj[v]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (r.match2[j] < 0 || self(self, r.match2[j])) {
        r.match1[v] = j;
        r.match2[j] = v;
        return true;
      }
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(try_augment, v);
  }
  return r;
}

// The union of all blocking sets: every matched vertex at its personal
// maximum, iteratively dropping vertices whose payoff ties escape the set.
// Nonempty exactly when some blocking set exists.
BlockingSet maximum_blocking_set(const BipartiteInstance& g, const Matching& m) {
  GraphView view(g);
  std::vector<int> partner = partner_array(g, m);
  std::vector<char> in_set(g.n1, 0);
  for (int i = 0; i < g.n1; ++i) {
    if (partner[i] < 0) continue;
    bool at_max = true;
    for (int j : view.adj1[i])
      if (view.w(i, j) > view.w(i, partner[i])) {
        at_max = false;
        break;
      }
    in_set[i] = at_max;
  }
  std::vector<int> rev(g.n2, -1);
  for (int i = 0; i < g.n1; ++i)
    if (partner[i] >= 0) rev[partner[i]] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < g.n1; ++i) {
      if (!in_set[i]) continue;
      for (int j : view.adj1[i]) {
        if (j == partner[i] || view.w(i, j) != view.w(i, partner[i])) continue;
        if (rev[j] < 0 || !in_set[rev[j]]) {
          in_set[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  BlockingSet b;
  for (int i = 0; i < g.n1; ++i)
    if (in_set[i]) b.members.push_back(i);
  return b;
}

}  // namespace

long blocking_set_fallback_count() { return g_blocking_fallbacks.load(); }

BlockingSet find_blocking_set(const BipartiteInstance& g, const Matching& m,
                              int i, int j, int enum_cap) {
  validate_matching(g, m);
  GraphView view(g);
  if (i < 0 || i >= g.n1 || j < 0 || j >= g.n2 || !view.has(i, j))
    throw PreconditionViolated("(i, j) is not an edge of the graph");

  std::vector<int> partner = partner_array(g, m);
  Rational payoff_i = partner[i] >= 0 ? view.w(i, partner[i]) : Rational(0);
  if (!(view.w(i, j) > payoff_i))
    throw PreconditionViolated("(i, j) does not improve vertex i");
  if (g.n1 <= enum_cap && !is_po_matching(g, m, enum_cap))
    throw PreconditionViolated("matching is not Pareto-optimal");

  // Work on the original indexing with alive masks; each round either ends
  // in case (i) of the construction or removes the current improving vertex
  // and recurses with a strictly smaller V1.
  std::vector<char> alive1(g.n1, 1), alive2(g.n2, 1);
  std::vector<int> cur_partner = partner;
  int cur_i = i, cur_j = j;

  struct Frame {
    bool was_matched;
    std::vector<char> r_prime;  // over original V1 ids
  };
  std::vector<Frame> frames;
  std::vector<char> candidate;  // final-round R'

  for (;;) {
    // Auxiliary graph: matched alive vertices keep their at-least-as-good
    // edges; the improving vertex keeps only (cur_i, cur_j).
    std::vector<int> vs;
    for (int k = 0; k < g.n1; ++k)
      if (alive1[k] && (cur_partner[k] >= 0 || k == cur_i)) vs.push_back(k);
    std::vector<std::vector<int>> adj(vs.size());
    for (size_t t = 0; t < vs.size(); ++t) {
      int k = vs[t];
      if (k == cur_i) {
        adj[t].push_back(cur_j);
        continue;
      }
      for (int l : view.adj1[k])
        if (alive2[l] && view.w(k, l) >= view.w(k, cur_partner[k]))
          adj[t].push_back(l);
    }

    AuxMatching aux = max_matching(adj, g.n2);
    int exposed = -1;
    for (size_t t = 0; t < vs.size(); ++t)
      if (aux.match1[t] < 0) {
        exposed = static_cast<int>(t);
        break;
      }
    if (exposed < 0)
      throw PreconditionViolated(
          "auxiliary graph admits a perfect matching; matching is not PO");

    // Hall violator: vertices alternating-reachable from the exposed one.
    std::vector<char> in_r(vs.size(), 0);
    std::vector<char> seen2(g.n2, 0);
    std::vector<int> stack{exposed};
    in_r[exposed] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int l : adj[t]) {
        if (seen2[l]) continue;
        seen2[l] = 1;
        int back = aux.match2[l];
        if (back >= 0 && !in_r[back]) {
          in_r[back] = 1;
          stack.push_back(back);
        }
      }
    }

    std::vector<char> r_prime(g.n1, 0);
    for (size_t t = 0; t < vs.size(); ++t)
      if (in_r[t] && vs[t] != cur_i) r_prime[vs[t]] = 1;

    // Violating tie-break: a member preferring someone else's partner
    // strictly means the violator is not yet closed; shrink and repeat.
    int vk = -1, vl = -1;
    for (int k = 0; k < g.n1 && vk < 0; ++k) {
      if (!r_prime[k]) continue;
      for (int k2 = 0; k2 < g.n1; ++k2) {
        if (!r_prime[k2]) continue;
        int l = cur_partner[k2];
        if (l == cur_partner[k] || !view.has(k, l) || !alive2[l]) continue;
        if (view.w(k, l) > view.w(k, cur_partner[k])) {
          vk = k;
          vl = l;
          break;
        }
      }
    }

    if (vk < 0) {
      candidate = r_prime;
      break;
    }

    frames.push_back({cur_partner[cur_i] >= 0, r_prime});
    alive1[cur_i] = 0;
    if (cur_partner[cur_i] >= 0) {
      alive2[cur_partner[cur_i]] = 0;
      cur_partner[cur_i] = -1;
    }
    cur_i = vk;
    cur_j = vl;
  }

  // Lift through the removals: a level whose vertex was matched intersects
  // with its own violator.
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    if (!it->was_matched) continue;
    for (int k = 0; k < g.n1; ++k) candidate[k] = candidate[k] && it->r_prime[k];
  }

  BlockingSet b;
  for (int k = 0; k < g.n1; ++k)
    if (candidate[k]) b.members.push_back(k);

  if (!validate_blocking_set(g, m, b)) {
    g_blocking_fallbacks.fetch_add(1);
    b = maximum_blocking_set(g, m);
    if (!validate_blocking_set(g, m, b))
      throw ValidationFailed("no blocking set found despite an improving edge");
  }
  return b;
}

BlockingSet union_blocking_sets(const BipartiteInstance& g, const Matching& m,
                                const BlockingSet& b1, const BlockingSet& b2) {
  if (!validate_blocking_set(g, m, b1) || !validate_blocking_set(g, m, b2))
    throw PreconditionViolated("inputs must be valid blocking sets");
  BlockingSet u;
  u.members = b1.members;
  u.members.insert(u.members.end(), b2.members.begin(), b2.members.end());
  std::sort(u.members.begin(), u.members.end());
  u.members.erase(std::unique(u.members.begin(), u.members.end()), u.members.end());
  if (!validate_blocking_set(g, m, u))
    throw ValidationFailed("union of blocking sets failed validation");
  return u;
}

Matching serial_dictatorship(const BipartiteInstance& g,
                             const std::vector<int>& order) {
  validate_graph(g);
  if (static_cast<int>(order.size()) != g.n1)
    throw DimensionError("order must be a permutation of V1");
  std::vector<char> seen(g.n1, 0);
  for (int i : order) {
    if (i < 0 || i >= g.n1 || seen[i]++)
      throw DimensionError("order must be a permutation of V1");
  }
  GraphView view(g);
  std::vector<char> taken(g.n2, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int i : order) {
    int best = -1;
    for (int j : view.adj1[i]) {
      if (taken[j]) continue;
      if (best < 0 || view.w(i, j) > view.w(i, best)) best = j;
    }
    if (best >= 0) {
      taken[best] = 1;
      pairs.emplace_back(i, best);
    }
  }
  return Matching::from_pairs(std::move(pairs));
}

void validate_allocation(const AllocationInstance& a) {
  if (a.agents < 1 || a.objects < 1)
    throw DimensionError("allocation needs agents >= 1 and objects >= 1");
  if (static_cast<int>(a.preferences.size()) != a.agents)
    throw DimensionError("one preference list per agent required");
  for (const auto& prefs : a.preferences) {
    std::set<int> seen;
    for (int o : prefs) {
      if (o < 0 || o >= a.objects) throw DimensionError("preference out of range");
      if (!seen.insert(o).second)
        throw ValidationError("preference lists must be duplicate-free");
    }
  }
  if (a.required) {
    std::set<int> seen;
    for (int o : *a.required) {
      if (o < 0 || o >= a.objects) throw DimensionError("required object out of range");
      if (!seen.insert(o).second) throw ValidationError("duplicate required object");
    }
  }
}

BipartiteInstance make_preference_graph(const AllocationInstance& a) {
  validate_allocation(a);
  BipartiteInstance g;
  g.n1 = a.agents;
  g.n2 = a.objects;
  for (int i = 0; i < a.agents; ++i) {
    const auto& prefs = a.preferences[i];
    const int len = static_cast<int>(prefs.size());
    for (int rank = 0; rank < len; ++rank) {
      // 1 + number of admissible objects ranked below.
      g.edges.push_back({i, prefs[rank], Rational(len - rank)});
    }
  }
  return g;
}

MaxParetoInstance encode_allocation(const AllocationInstance& a) {
  BipartiteInstance g = make_preference_graph(a);
  std::vector<Rational> c(g.edges.size(), Rational(0));
  if (a.required) {
    std::vector<char> in_q(a.objects, 0);
    for (int o : *a.required) in_q[o] = 1;
    for (size_t e = 0; e < g.edges.size(); ++e)
      if (in_q[g.edges[e].j]) c[e] = 1;
  }
  return encode_matching_instance(g, c);
}

MaxParetoInstance encode_allocation(const AllocationInstance& a,
                                    const std::vector<Rational>& edge_objective) {
  BipartiteInstance g = make_preference_graph(a);
  return encode_matching_instance(g, edge_objective);
}

// --------------------------- JSON I/O ---------------------------

std::string graph_to_json(const BipartiteInstance& g) {
  nlohmann::ordered_json j;
  j["n1"] = g.n1;
  j["n2"] = g.n2;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json edge = nlohmann::ordered_json::array();
    edge.push_back(e.i);
    edge.push_back(e.j);
    edge.push_back(rational_to_json(e.weight));
    edges.push_back(edge);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

BipartiteInstance graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
  for (const char* field : {"n1", "n2", "edges"})
    if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  BipartiteInstance g;
  g.n1 = j["n1"].get<int>();
  g.n2 = j["n2"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("each edge must be [i, j, weight]");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>(), json_to_rational(e[2])});
  }
  validate_graph(g);
  return g;
}

BipartiteInstance load_graph(const std::string& path) {
  return graph_from_json(read_text_file(path));
}

void save_graph(const BipartiteInstance& g, const std::string& path) {
  write_text_file(path, graph_to_json(g));
}

std::string allocation_to_json(const AllocationInstance& a) {
  nlohmann::ordered_json j;
  j["agents"] = a.agents;
  j["objects"] = a.objects;
  j["preferences"] = a.preferences;
  if (a.required) j["Q"] = *a.required;
  return j.dump(2) + "\n";
}

AllocationInstance allocation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed allocation JSON: ") + e.what());
  }
  for (const char* field : {"agents", "objects", "preferences"})
    if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  AllocationInstance a;
  a.agents = j["agents"].get<int>();
  a.objects = j["objects"].get<int>();
  a.preferences = j["preferences"].get<std::vector<std::vector<int>>>();
  if (j.contains("Q")) a.required = j["Q"].get<std::vector<int>>();
  validate_allocation(a);
  return a;
}

AllocationInstance load_allocation(const std::string& path) {
  return allocation_from_json(read_text_file(path));
}

void save_allocation(const AllocationInstance& a, const std::string& path) {
  write_text_file(path, allocation_to_json(a));
}

void save_allocation_with_welfare(const AllocationInstance& a,
                                  const Mat<Rational>& welfare,
                                  const std::string& path) {
  validate_allocation(a);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(allocation_to_json(a));
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (int i = 0; i < welfare.rows(); ++i)
    w.push_back(rational_vector_to_json(welfare.row(i)));
  j["welfare"] = w;
  write_text_file(path, j.dump(2) + "\n");
}

std::optional<Mat<Rational>> load_allocation_welfare(const std::string& path) {
  nlohmann::json j = load_json_file(path);
  if (!j.contains("welfare")) return std::nullopt;
  const auto& w = j["welfare"];
  if (!w.is_array() || w.empty()) throw ParseError("welfare must be a matrix");
  Mat<Rational> out(static_cast<int>(w.size()), static_cast<int>(w[0].size()));
  for (int i = 0; i < out.rows(); ++i) {
    if (static_cast<int>(w[i].size()) != out.cols())
      throw ParseError("welfare matrix has ragged rows");
    for (int c = 0; c < out.cols(); ++c) out(i, c) = json_to_rational(w[i][c]);
  }
  return out;
}

Matching parse_matching(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("matching pairs use the form i:j");
    try {
      pairs.emplace_back(std::stoi(item.substr(0, colon)),
                         std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("malformed matching pair: " + item);
    }
  }
  return Matching::from_pairs(std::move(pairs));
}

}  // namespace maxpareto
