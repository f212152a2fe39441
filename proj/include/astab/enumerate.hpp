#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "astab/graph.hpp"

namespace astab {

// Labeled enumeration: every edge mask on n vertices, lexicographic pair
// order (0,1),(0,2),...,(n-2,n-1) mapped to bits 0,1,...
int pair_count(int n);
std::uint64_t labeled_graph_count(int n);  // 2^C(n,2), n <= 8
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// True iff mask is the minimum over all vertex relabelings; used by the
// isomorph-reduction flag. n <= 7.
bool is_canonical_mask(int n, std::uint64_t mask);

// Trees from Pruefer sequences; index enumerates all n^(n-2) sequences.
std::uint64_t labeled_tree_count(int n);  // n >= 2
Graph tree_from_index(int n, std::uint64_t index);

// All labeled graphs on n vertices with girth >= 6 (forests included),
// as edge masks; generated by incremental edge insertion with a
// shortest-path gate.
std::vector<std::uint64_t> girth_ge6_masks(int n);

// Erdos-Renyi G(n,p), deterministic for a given seed.
std::vector<Graph> random_graphs(int n, int count, double edge_probability,
                                 std::uint64_t seed);

}  // namespace astab
