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

#ifndef MAXPARETO_MATCHING_HPP
#define MAXPARETO_MATCHING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxpareto/model.hpp"
#include "maxpareto/numeric.hpp"

namespace maxpareto {

/// Weighted bipartite graph from V1 to V2, zero-based vertex ids on both
/// sides. Edge weights are payoffs to the V1 endpoint; an unmatched vertex
/// earns 0, so zero-weight edges are legal and meaningful.
struct BipartiteInstance {
  struct Edge {
    int i = 0;  // in V1
    int j = 0;  // in V2
    Rational weight;
  };
  int n1 = 0;
  int n2 = 0;
  std::vector<Edge> edges;
};

/// Throws on out-of-range endpoints, duplicate pairs, negative weights.
void validate_graph(const BipartiteInstance& g);

/// A (possibly empty) matching, stored as (V1, V2) pairs sorted by the V1
/// endpoint. Injective on both sides; every pair must be a graph edge.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  bool operator==(const Matching& o) const { return pairs == o.pairs; }
  bool matched(int i) const;
  int partner_of(int i) const;  // -1 when unmatched
  static Matching from_pairs(std::vector<std::pair<int, int>> pairs);
};

/// Throws InvalidMatching unless m is a matching over g's edges.
void validate_matching(const BipartiteInstance& g, const Matching& m);

/// Payoffs: the matched edge weight per V1 vertex, 0 otherwise.
PayoffVector payoff_vector(const BipartiteInstance& g, const Matching& m);

/// Removes R from V1 and the partners of matched R-vertices from V2,
/// re-indexing both sides densely; returns the reduced graph and the induced
/// matching. Weights are preserved.
struct ReducedGraph {
  BipartiteInstance graph;
  Matching induced;
  std::vector<int> v1_map;  // new index per old V1 vertex, -1 if removed
  std::vector<int> v2_map;
};
ReducedGraph reduced_graph(const BipartiteInstance& g, const Matching& m,
                           const std::vector<int>& r);

/// All matchings of g, the empty matching included. Throws CapExceeded when
/// more than `cap` matchings exist.
std::vector<Matching> enumerate_matchings(const BipartiteInstance& g,
                                          size_t cap = 5'000'000);

/// Exhaustive search for a matching paying every V1 vertex at least `base`,
/// someone strictly more. Pruned DFS over assignments; exact integer-free
/// of LPs. Requires n2 <= 64.
bool dominating_matching_exists(const BipartiteInstance& g,
                                const PayoffVector& base);

/// Pareto-optimality among integral matchings. Exact search for
/// n1 <= enum_cap; larger graphs delegate to the fractional check, which
/// decides the same predicate.
bool is_po_matching(const BipartiteInstance& g, const Matching& m,
                    int enum_cap = 10,
                    const NumericMode& mode = NumericMode::exact());

/// Fractional Pareto-optimality, decided by the verification LP over the
/// bipartite matching polytope (whose vertices are exactly the matchings).
bool is_fpo_matching(const BipartiteInstance& g, const Matching& m,
                     const NumericMode& mode);

/// Max-Pareto encoding of g: one variable per edge, degree constraints plus
/// nonnegativity rows, payoff map U(i, e) = w_e for e incident to i, and the
/// given edge objective (zeros when omitted). Rows are ordered: V1 degrees,
/// V2 degrees, then -x_e <= 0 per edge.
MaxParetoInstance encode_matching_instance(const BipartiteInstance& g,
                                           const std::vector<Rational>& c = {});

/// Indicator vector of m over the edge variables of the encoding.
std::vector<Rational> matching_indicator(const BipartiteInstance& g,
                                         const Matching& m);

/// A set B of matched V1 vertices such that every member already earns its
/// best possible payoff and strictly loses when matched outside M(B).
struct BlockingSet {
  std::vector<int> members;  // sorted V1 ids
};

bool validate_blocking_set(const BipartiteInstance& g, const Matching& m,
                           const BlockingSet& b);

/// All blocking sets w.r.t. m by subset enumeration (for small matched sets).
std::vector<BlockingSet> enumerate_blocking_sets(const BipartiteInstance& g,
                                                 const Matching& m);

/// Constructive blocking-set search for a PO matching with an improving edge
/// (i, j), i.e. w_ij exceeds i's current payoff: builds the auxiliary
/// tight-edge graph, extracts a Hall violator by alternating reachability
/// from an exposed vertex, and recurses on the shrunken graph when the
/// violator is not yet closed under ties. The result is re-validated before
/// return. Throws PreconditionViolated when m is not PO (checked up to
/// enum_cap) or (i, j) does not improve.
BlockingSet find_blocking_set(const BipartiteInstance& g, const Matching& m,
                              int i, int j, int enum_cap = 10);

/// Number of times find_blocking_set had to fall back to the tie-closure
/// maximum blocking set because the lifted constructive candidate failed
/// validation. Expected to stay zero; exposed as a tripwire gauge.
long blocking_set_fallback_count();

/// Union of two validated blocking sets; re-validated, and a failure throws
/// ValidationFailed (it would contradict the closure property).
BlockingSet union_blocking_sets(const BipartiteInstance& g, const Matching& m,
                                const BlockingSet& b1, const BlockingSet& b2);

/// Agents pick their best available edge in the given order (ties toward the
/// lower V2 index). A standard generator of candidate PO matchings; outputs
/// are re-verified by callers, never assumed PO.
Matching serial_dictatorship(const BipartiteInstance& g,
                             const std::vector<int>& order);

/// House-allocation style instance: strict (possibly partial) preference
/// lists; objects not listed are inadmissible. `required` is the object set
/// that a constrained PO matching must cover.
struct AllocationInstance {
  int agents = 0;
  int objects = 0;
  std::vector<std::vector<int>> preferences;
  std::optional<std::vector<int>> required;
};

void validate_allocation(const AllocationInstance& a);

/// Rank-weight graph: admissible (agent, object) pairs with weight
/// 1 + (number of admissible objects the agent likes less).
BipartiteInstance make_preference_graph(const AllocationInstance& a);

/// Max-Pareto encoding of the constrained-PO-matching question: matching
/// polytope of the rank-weight graph; objective counts matched objects of
/// `required` (all-zero objective when absent); the yes-threshold is
/// |required|.
MaxParetoInstance encode_allocation(const AllocationInstance& a);

/// Same encoding with a caller-supplied edge objective (e.g. welfare).
MaxParetoInstance encode_allocation(const AllocationInstance& a,
                                    const std::vector<Rational>& edge_objective);

// Graph and allocation JSON I/O (.bgj / .alj).
BipartiteInstance load_graph(const std::string& path);
void save_graph(const BipartiteInstance& g, const std::string& path);
std::string graph_to_json(const BipartiteInstance& g);
BipartiteInstance graph_from_json(const std::string& text);

AllocationInstance load_allocation(const std::string& path);
void save_allocation(const AllocationInstance& a, const std::string& path);
std::string allocation_to_json(const AllocationInstance& a);
AllocationInstance allocation_from_json(const std::string& text);

/// Loads the optional "welfare" matrix stored alongside an allocation file;
/// row per agent, column per object.
std::optional<Mat<Rational>> load_allocation_welfare(const std::string& path);

/// Writes an allocation file with an embedded welfare matrix.
void save_allocation_with_welfare(const AllocationInstance& a,
                                  const Mat<Rational>& welfare,
                                  const std::string& path);

/// Parses "i:j,i:j" pairs into a matching (zero-based).
Matching parse_matching(const std::string& text);

}  // namespace maxpareto

#endif  // MAXPARETO_MATCHING_HPP
