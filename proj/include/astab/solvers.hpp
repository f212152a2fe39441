#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "astab/graph.hpp"

namespace astab {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cap on |Omega| enumeration; STABILITY_BUDGET in the environment
// overrides the default of 2^20.
std::size_t stable_set_budget();

struct StableSetFamily {
  int alpha = 0;
  std::vector<VertexSet> sets;  // every maximum stable set, ascending bitmask
  VertexSet core = 0;           // intersection of all members
  int xi = 0;                   // |core|
};

int stability_number(const Graph& g);
StableSetFamily max_stable_sets(const Graph& g, std::size_t max_sets = 0);

bool is_well_covered(const Graph& g);
bool is_very_well_covered(const Graph& g);

// Visit every maximal stable set; return false from the visitor to stop.
void for_each_maximal_stable_set(const Graph& g,
                                 const std::function<bool(VertexSet)>& visit);

struct MatchingResult {
  int mu = 0;
  std::vector<Edge> matching;
  bool perfect = false;
  std::optional<std::vector<Edge>> pendant_perfect;
};

MatchingResult maximum_matching(const Graph& g);
int matching_number(const Graph& g);

// The forced greedy pairing: every pendant vertex must take its own
// edge, so a perfect matching of pendant edges exists iff those forced
// edges are pairwise non-incident and cover all vertices.
std::optional<std::vector<Edge>> pendant_perfect_matching(const Graph& g);

struct AvoidableCheck {
  bool all_avoidable = true;
  std::optional<std::pair<int, int>> failing_pair;
};

// True iff every vertex pair (including x = y) is jointly avoided by
// some maximum stable set.
AvoidableCheck core_avoidable_pairs(const Graph& g, const StableSetFamily& fam);

namespace detail {
// Stability number over a candidate subset, raw adjacency form; used by
// the edge-addition oracles to avoid graph copies.
int stability_number_masks(const VertexSet* adj, int n, VertexSet cand);
}  // namespace detail

}  // namespace astab
