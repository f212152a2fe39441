#include "astab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace astab {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    int v = first_vertex(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge");
  return u < v ? Edge{u, v} : Edge{v, u};
}

EdgePair make_edge_pair(Edge a, Edge b) {
  if (a == b) throw std::invalid_argument("edge pair must be distinct");
  return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range [1,64]");
}

Graph::Graph(int n, const std::vector<Edge>& edge_list) : Graph(n) {
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += set_size(s);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] & ~full_set(u + 1);
    for (int v : set_members(higher)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Edge e = make_edge(u, v);
  if (e.second >= n_ || e.first < 0)
    throw std::invalid_argument("edge endpoint out of range");
  if (has_edge(u, v)) throw std::invalid_argument("edge already present");
  Graph out = *this;
  out.adj_[u] |= vbit(v);
  out.adj_[v] |= vbit(u);
  return out;
}

Graph Graph::with_edges(const EdgePair& pair) const {
  return with_edge(pair.e1.first, pair.e1.second)
      .with_edge(pair.e2.first, pair.e2.second);
}

// --- graph6 ------------------------------------------------------------

namespace {

constexpr char kG6Lo = 63;
constexpr char kG6Hi = 126;
constexpr std::string_view kG6Header = ">>graph6<<";

// Bit order of the adjacency upper triangle in graph6: columns
// j = 1..n-1, rows i = 0..j-1.
template <typename Fn>
void for_each_g6_pair(int n, Fn fn) {
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) fn(i, j);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kG6Header.size()) == kG6Header)
    line.remove_prefix(kG6Header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : line)
    if (c < kG6Lo || c > kG6Hi)
      throw std::invalid_argument("graph6: byte out of printable range");

  std::size_t pos = 0;
  long n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw std::invalid_argument("graph6: order beyond supported range");
    if (line.size() < 4) throw std::invalid_argument("graph6: truncated order");
    n = (long(line[1] - kG6Lo) << 12) | (long(line[2] - kG6Lo) << 6) |
        long(line[3] - kG6Lo);
    pos = 4;
  } else {
    n = line[0] - kG6Lo;
    pos = 1;
  }
  if (n < 2) throw std::invalid_argument("graph6: order below 2");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: order above 64");

  const int nbits = static_cast<int>(n * (n - 1) / 2);
  const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos != need)
    throw std::invalid_argument("graph6: wrong data length");

  std::vector<Edge> edge_list;
  int bitpos = 0;
  for_each_g6_pair(static_cast<int>(n), [&](int i, int j) {
    int byte = line[pos + bitpos / 6] - kG6Lo;
    if (byte & (1 << (5 - bitpos % 6))) edge_list.emplace_back(i, j);
    ++bitpos;
  });
  // padding bits must be zero
  for (; bitpos < static_cast<int>(need) * 6; ++bitpos) {
    int byte = line[pos + bitpos / 6] - kG6Lo;
    if (byte & (1 << (5 - bitpos % 6)))
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edge_list);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
    out.push_back(static_cast<char>((n & 63) + kG6Lo));
  }
  int acc = 0, nbits = 0;
  for_each_g6_pair(n, [&](int i, int j) {
    acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
    if (++nbits == 6) {
      out.push_back(static_cast<char>(acc + kG6Lo));
      acc = 0;
      nbits = 0;
    }
  });
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
  return out;
}

// --- edge-list text ------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = -1, m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (n < 2 || n > Graph::kMaxVertices)
    throw std::invalid_argument("edge list: order out of range [2,64]");
  if (m < 0 || m > n * (n - 1) / 2)
    throw std::invalid_argument("edge list: bad edge count");
  std::vector<Edge> edge_list;
  std::vector<VertexSet> seen(static_cast<std::size_t>(n), 0);
  for (long k = 0; k < m; ++k) {
    long u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: vertex out of range");
    if (u == v) throw std::invalid_argument("edge list: loop");
    if (u > v) throw std::invalid_argument("edge list: edges must be u < v");
    if (seen[u] & vbit(static_cast<int>(v)))
      throw std::invalid_argument("edge list: duplicate edge");
    seen[u] |= vbit(static_cast<int>(v));
    edge_list.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing data");
  return Graph(static_cast<int>(n), edge_list);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// --- structural queries ---------------------------------------------------

std::vector<Edge> complement_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u + 1 < g.order(); ++u) {
    VertexSet non = full_set(g.order()) & ~g.closed_neighborhood(u) &
                    ~full_set(u + 1);
    for (int v : set_members(non)) out.emplace_back(u, v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet members) {
  if (members == 0) throw std::invalid_argument("induced subgraph of empty set");
  if (members & ~g.vertices())
    throw std::invalid_argument("induced subgraph: vertex out of range");
  std::vector<int> map = set_members(members);
  std::vector<int> inverse(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = static_cast<int>(i);
  std::vector<Edge> edge_list;
  for (const auto& [u, v] : g.edges())
    if ((members & vbit(u)) && (members & vbit(v)))
      edge_list.emplace_back(inverse[u], inverse[v]);
  return {Graph(static_cast<int>(map.size()), edge_list), std::move(map)};
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::array<int, Graph::kMaxVertices> dist{}, parent{};
  std::array<int, Graph::kMaxVertices> queue{};
  for (int root = 0; root < n; ++root) {
    dist.fill(-1);
    parent.fill(-1);
    dist[root] = 0;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      for (int w : set_members(g.neighbors(u))) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::optional<std::array<int, 4>> find_c4(const Graph& g, bool induced) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (induced && g.has_edge(u, w)) continue;
      VertexSet common = g.neighbors(u) & g.neighbors(w);
      if (set_size(common) < 2) continue;
      auto mids = set_members(common);
      for (std::size_t a = 0; a < mids.size(); ++a)
        for (std::size_t b = a + 1; b < mids.size(); ++b) {
          if (induced && g.has_edge(mids[a], mids[b])) continue;
          return std::array<int, 4>{u, mids[a], w, mids[b]};
        }
    }
  }
  return std::nullopt;
}

PendantData pendant_data(const Graph& g) {
  PendantData out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.vertices |= vbit(v);
  for (int v : set_members(out.vertices)) {
    Edge e = make_edge(v, first_vertex(g.neighbors(v)));
    if (std::find(out.edges.begin(), out.edges.end(), e) == out.edges.end())
      out.edges.push_back(e);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool has_hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n > 12)
    throw std::invalid_argument("hamiltonian path search limited to n <= 12");
  if (n == 1) return true;
  // ends[mask] = set of vertices at which a spanning path of mask can end
  std::vector<VertexSet> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[vbit(v)] = vbit(v);
  for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
    VertexSet e = ends[mask];
    if (!e) continue;
    for (int v : set_members(e)) {
      VertexSet ext = g.neighbors(v) & ~mask;
      for (int w : set_members(ext)) ends[mask | vbit(w)] |= vbit(w);
    }
  }
  return ends[full_set(n)] != 0;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices();
  while (remaining) {
    VertexSet comp = vbit(first_vertex(remaining));
    for (;;) {
      VertexSet grown = comp;
      for (int v : set_members(comp)) grown |= g.neighbors(v);
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::array<int, Graph::kMaxVertices> color{};
  color.fill(-1);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : set_members(g.neighbors(u))) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_complete_minus_edge(const Graph& g) {
  const int n = g.order();
  return g.edge_count() == n * (n - 1) / 2 - 1;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  if (n > 8)
    throw std::invalid_argument("isomorphism search limited to n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto a_edges = a.edges();
  do {
    bool ok = true;
    for (const auto& [u, v] : a_edges) {
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// --- named graphs ----------------------------------------------------------

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  return Graph(n, es);
}

Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph complete_minus_edge_graph(int n) {
  if (n < 2) throw std::invalid_argument("K_n - e needs n >= 2");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph p3_substitution(int m) {
  if (m < 1) throw std::invalid_argument("p3_substitution needs m >= 1");
  if (m + 3 > Graph::kMaxVertices)
    throw std::invalid_argument("p3_substitution: too large");
  const int c1 = m + 1, c2 = m + 2;
  std::vector<Edge> es;
  es.emplace_back(c1, c2);
  for (int b = 1; b <= m; ++b) {
    es.emplace_back(0, b);
    es.emplace_back(b, c1);
    es.emplace_back(b, c2);
    for (int b2 = b + 1; b2 <= m; ++b2) es.emplace_back(b, b2);
  }
  return Graph(m + 3, es);
}

Graph fixture(Fixture which, bool with_dotted) {
  switch (which) {
    case Fixture::kK3PlusE:
      // triangle {1,2,3} plus pendant 0-1
      return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    case Fixture::kK4PlusE:
      // K4 on {1,2,3,4} plus pendant 0-1
      return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    case Fixture::kG1:
      // bottom path a(0)-b2(1)-b3(2)-c(3), top path b(4)-t2(5)-t3(6)-d(7),
      // verticals b2t2 b3t3, diagonal b2t3
      return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                       {1, 5}, {2, 6}, {1, 6}});
    case Fixture::kG2:
      // path p1(0)-p2(1)-p3(2)-p4(3), edge q2(4)q3(5), edges p2q2 and q2p3
      return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {2, 4}, {1, 4}});
    case Fixture::kFig2A: {
      // a_i(0) b_i(1) a_k(2) b_k(3); dotted: a_i a_k, a_i b_k
      std::vector<Edge> es{{0, 1}, {1, 2}, {1, 3}, {2, 3}};
      if (with_dotted) {
        es.emplace_back(0, 2);
        es.emplace_back(0, 3);
      }
      return Graph(4, es);
    }
    case Fixture::kFig2B: {
      // 4-cycle a_i(0)-b_i(1)-a_k(2)-b_k(3); dotted: b_i b_k, a_i a_k
      std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
      if (with_dotted) {
        es.emplace_back(1, 3);
        es.emplace_back(0, 2);
      }
      return Graph(4, es);
    }
    case Fixture::kFig2C: {
      // path a_i(0)-b_i(1)-a_k(2)-b_k(3)-a_j(4)-b_j(5); dotted: a_i a_k, b_k b_j
      std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
      if (with_dotted) {
        es.emplace_back(0, 2);
        es.emplace_back(3, 5);
      }
      return Graph(6, es);
    }
  }
  throw std::invalid_argument("unknown fixture");
}

Graph make_named(std::string_view name, int param) {
  if (name == "cycle") return cycle_graph(param);
  if (name == "path") return path_graph(param);
  if (name == "complete") return complete_graph(param);
  if (name == "complete_minus_edge") return complete_minus_edge_graph(param);
  if (name == "p3_substitution") return p3_substitution(param);
  if (name == "K3_PLUS_E") return fixture(Fixture::kK3PlusE);
  if (name == "K4_PLUS_E") return fixture(Fixture::kK4PlusE);
  if (name == "G1") return fixture(Fixture::kG1);
  if (name == "G2") return fixture(Fixture::kG2);
  if (name == "FIG2_A") return fixture(Fixture::kFig2A);
  if (name == "FIG2_B") return fixture(Fixture::kFig2B);
  if (name == "FIG2_C") return fixture(Fixture::kFig2C);
  throw std::invalid_argument("unknown named graph: " + std::string(name));
}

}  // namespace astab
