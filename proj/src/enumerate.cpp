#include "astab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace astab {

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint64_t labeled_graph_count(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("labeled enumeration limited to 2 <= n <= 8");
  return std::uint64_t{1} << pair_count(n);
}

namespace {

// bit index of pair (u,v), u < v, in lexicographic order
int pair_index(int n, int u, int v) {
  // pairs starting at u come after sum_{k<u} (n-1-k)
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if (mask & (std::uint64_t{1} << idx)) es.emplace_back(u, v);
  return Graph(n, es);
}

std::uint64_t mask_from_graph(const Graph& g) {
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges())
    mask |= std::uint64_t{1} << pair_index(g.order(), u, v);
  return mask;
}

void for_each_labeled_graph(int n,
                            const std::function<void(const Graph&)>& fn) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_mask(n, mask));
}

bool is_canonical_mask(int n, std::uint64_t mask) {
  if (n > 7) throw std::invalid_argument("canonical filter limited to n <= 7");
  // cheap prefilter: any transposition that lowers the mask disqualifies
  std::array<int, 8> ident{};
  std::iota(ident.begin(), ident.begin() + n, 0);
  auto permuted = [&](const std::array<int, 8>& p) {
    std::uint64_t out = 0;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if (mask & (std::uint64_t{1} << idx)) {
          int a = p[u], b = p[v];
          out |= std::uint64_t{1} << pair_index(n, std::min(a, b), std::max(a, b));
        }
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto p = ident;
      std::swap(p[i], p[j]);
      if (permuted(p) < mask) return false;
    }
  std::array<int, 8> perm = ident;
  while (std::next_permutation(perm.begin(), perm.begin() + n))
    if (permuted(perm) < mask) return false;
  return true;
}

std::uint64_t labeled_tree_count(int n) {
  if (n < 2) throw std::invalid_argument("trees need n >= 2");
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

Graph tree_from_index(int n, std::uint64_t index) {
  std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
  for (auto& s : seq) {
    s = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  // standard Pruefer decoding
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++deg[s];
  std::vector<Edge> es;
  std::uint64_t leaves = 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves |= vbit(v);
  for (int s : seq) {
    int leaf = first_vertex(leaves);
    leaves &= leaves - 1;
    es.push_back(make_edge(leaf, s));
    if (--deg[s] == 1) leaves |= vbit(s);
  }
  int a = first_vertex(leaves);
  leaves &= leaves - 1;
  int b = first_vertex(leaves);
  es.push_back(make_edge(a, b));
  return Graph(n, es);
}

namespace {

int bfs_distance(const std::array<VertexSet, 8>& adj, int n, int from, int to) {
  std::array<int, 8> dist{};
  dist.fill(-1);
  dist[from] = 0;
  std::array<int, 8> queue{};
  int head = 0, tail = 0;
  queue[tail++] = from;
  while (head < tail) {
    int u = queue[head++];
    if (u == to) return dist[u];
    for (VertexSet s = adj[u] & full_set(n); s;) {
      int w = first_vertex(s);
      s &= s - 1;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue[tail++] = w;
      }
    }
  }
  return -1;
}

void girth6_rec(int n, const std::vector<Edge>& pairs, std::size_t idx,
                std::array<VertexSet, 8>& adj, std::uint64_t mask,
                std::vector<std::uint64_t>& out) {
  if (idx == pairs.size()) {
    out.push_back(mask);
    return;
  }
  const auto& [u, v] = pairs[idx];
  girth6_rec(n, pairs, idx + 1, adj, mask, out);
  // adding uv closes a cycle of length dist(u,v)+1; require >= 6
  int d = bfs_distance(adj, n, u, v);
  if (d < 0 || d >= 5) {
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
    girth6_rec(n, pairs, idx + 1, adj, mask | (std::uint64_t{1} << idx), out);
    adj[u] &= ~vbit(v);
    adj[v] &= ~vbit(u);
  }
}

}  // namespace

std::vector<std::uint64_t> girth_ge6_masks(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("girth>=6 enumeration limited to 2 <= n <= 8");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::array<VertexSet, 8> adj{};
  std::vector<std::uint64_t> out;
  girth6_rec(n, pairs, 0, adj, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> random_graphs(int n, int count, double edge_probability,
                                 std::uint64_t seed) {
  if (n < 2 || n > Graph::kMaxVertices)
    throw std::invalid_argument("random graphs: order out of range");
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw std::invalid_argument("random graphs: probability out of range");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    out.emplace_back(n, es);
  }
  return out;
}

}  // namespace astab
