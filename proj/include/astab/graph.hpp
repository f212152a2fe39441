#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace astab {

// Vertices are 0..n-1 with n <= 64, so a vertex set is one machine word.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;  // normalized: first < second

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<int> set_members(VertexSet s);

Edge make_edge(int u, int v);

// Two distinct candidate edges, e1 < e2 lexicographically.
struct EdgePair {
  Edge e1;
  Edge e2;
  bool operator==(const EdgePair&) const = default;
};

EdgePair make_edge_pair(Edge a, Edge b);

// Immutable simple undirected graph. All mutating operations return a
// fresh value.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edge_list);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const { return (adj_[u] & vbit(v)) != 0; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const { return adj_[v] | vbit(v); }
  int degree(int v) const { return set_size(adj_[v]); }
  VertexSet vertices() const { return full_set(n_); }
  std::vector<Edge> edges() const;  // lexicographic
  const std::vector<VertexSet>& adjacency() const { return adj_; }

  Graph with_edge(int u, int v) const;
  Graph with_edges(const EdgePair& pair) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

// --- serialization ---------------------------------------------------

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g);

// --- structural queries ----------------------------------------------

std::vector<Edge> complement_edges(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // vertex_map[new id] = old id
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet members);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Four vertices carrying a 4-cycle as a subgraph (chords permitted).
// With induced=true the four vertices must induce exactly C4.
std::optional<std::array<int, 4>> find_c4(const Graph& g, bool induced = false);

struct PendantData {
  VertexSet vertices = 0;        // degree-1 vertices
  std::vector<Edge> edges;       // their unique incident edges, deduplicated
};
PendantData pendant_data(const Graph& g);

bool has_hamiltonian_path(const Graph& g);  // n <= 12

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Exactly one non-adjacent vertex pair, i.e. K_n minus one edge.
bool is_complete_minus_edge(const Graph& g);

// Labeled-graph isomorphism by permutation search; n <= 8.
bool isomorphic(const Graph& a, const Graph& b);

// --- named graphs ----------------------------------------------------

Graph cycle_graph(int n);           // n >= 3
Graph path_graph(int n);            // n >= 2
Graph complete_graph(int n);        // n >= 2
Graph complete_minus_edge_graph(int n);  // n >= 2, missing edge {0,1}

// Substitute the vertices of P3 by K1, K_m, K2: vertex 0, clique 1..m,
// clique {m+1, m+2}; every clique vertex is joined to both endpoints'
// substitutes.
Graph p3_substitution(int m);       // m >= 1

enum class Fixture {
  kK3PlusE,
  kK4PlusE,
  kG1,
  kG2,
  kFig2A,
  kFig2B,
  kFig2C,
};

// Fixture edge lists are transcribed from the source pictures; the
// Fig2 cases carry optional dotted edges behind with_dotted.
Graph fixture(Fixture which, bool with_dotted = false);

// String front-end for the constructors above; param is the size
// parameter where one applies (ignored for fixtures).
Graph make_named(std::string_view name, int param = 0);

}  // namespace astab
