#include "astab/solvers.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace astab {

std::size_t stable_set_budget() {
  static const std::size_t cached = [] {
    if (const char* env = std::getenv("STABILITY_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
  }();
  return cached;
}

namespace detail {

namespace {

// Branch-and-bound maximum stable set. Reductions: a candidate vertex
// with no candidate neighbour is always taken; one with a single
// candidate neighbour may be taken without loss.
void mis_rec(const VertexSet* adj, VertexSet cand, int size, int& best) {
  for (;;) {
    if (size + set_size(cand) <= best) return;
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    bool reduced = false;
    for (VertexSet scan = cand; scan;) {
      int v = first_vertex(scan);
      scan &= scan - 1;
      VertexSet nb = adj[v] & cand;
      if (set_size(nb) <= 1) {
        cand &= ~(nb | vbit(v));
        ++size;
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    // branch on a max-degree candidate
    int pick = -1, pick_deg = -1;
    for (VertexSet scan = cand; scan;) {
      int v = first_vertex(scan);
      scan &= scan - 1;
      int d = set_size(adj[v] & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    mis_rec(adj, cand & ~(adj[pick] | vbit(pick)), size + 1, best);
    cand &= ~vbit(pick);
  }
}

}  // namespace

int stability_number_masks(const VertexSet* adj, int n, VertexSet cand) {
  (void)n;
  int best = 0;
  mis_rec(adj, cand, 0, best);
  return best;
}

}  // namespace detail

int stability_number(const Graph& g) {
  return detail::stability_number_masks(g.adjacency().data(), g.order(),
                                        g.vertices());
}

namespace {

void enumerate_rec(const VertexSet* adj, VertexSet cand, VertexSet cur,
                   int size, int alpha, std::vector<VertexSet>& out,
                   std::size_t cap) {
  if (size + set_size(cand) < alpha) return;
  if (size == alpha) {
    if (out.size() >= cap)
      throw BudgetExceeded("maximum stable set enumeration budget exceeded");
    out.push_back(cur);
    return;
  }
  if (!cand) return;
  int v = first_vertex(cand);
  enumerate_rec(adj, cand & ~(adj[v] | vbit(v)), cur | vbit(v), size + 1,
                alpha, out, cap);
  enumerate_rec(adj, cand & ~vbit(v), cur, size, alpha, out, cap);
}

}  // namespace

StableSetFamily max_stable_sets(const Graph& g, std::size_t max_sets) {
  if (max_sets == 0) max_sets = stable_set_budget();
  StableSetFamily fam;
  fam.alpha = stability_number(g);
  enumerate_rec(g.adjacency().data(), g.vertices(), 0, 0, fam.alpha, fam.sets,
                max_sets);
  std::sort(fam.sets.begin(), fam.sets.end());
  fam.core = g.vertices();
  for (VertexSet s : fam.sets) fam.core &= s;
  fam.xi = set_size(fam.core);
  return fam;
}

namespace {

// Bron-Kerbosch with pivoting over the non-adjacency relation.
bool maximal_rec(const VertexSet* nonadj, VertexSet r, VertexSet p, VertexSet x,
                 const std::function<bool(VertexSet)>& visit) {
  if (!p && !x) return visit(r);
  int pivot = -1, best = -1;
  for (VertexSet scan = p | x; scan;) {
    int v = first_vertex(scan);
    scan &= scan - 1;
    int d = set_size(p & nonadj[v]);
    if (d > best) {
      best = d;
      pivot = v;
    }
  }
  for (VertexSet scan = p & ~nonadj[pivot]; scan;) {
    int v = first_vertex(scan);
    scan &= scan - 1;
    if (!maximal_rec(nonadj, r | vbit(v), p & nonadj[v], x & nonadj[v], visit))
      return false;
    p &= ~vbit(v);
    x |= vbit(v);
  }
  return true;
}

}  // namespace

void for_each_maximal_stable_set(const Graph& g,
                                 const std::function<bool(VertexSet)>& visit) {
  const int n = g.order();
  std::array<VertexSet, Graph::kMaxVertices> nonadj{};
  for (int v = 0; v < n; ++v)
    nonadj[v] = full_set(n) & ~g.closed_neighborhood(v);
  maximal_rec(nonadj.data(), 0, full_set(n), 0, visit);
}

bool is_well_covered(const Graph& g) {
  const int alpha = stability_number(g);
  bool ok = true;
  for_each_maximal_stable_set(g, [&](VertexSet s) {
    if (set_size(s) != alpha) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool is_very_well_covered(const Graph& g) {
  return g.order() == 2 * stability_number(g) && is_well_covered(g);
}

// --- maximum matching (Edmonds' blossom algorithm) -----------------------

namespace {

class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g) : n_(g.order()), g_(&g) {
    match_.assign(n_, -1);
    // greedy seed in vertex order for determinism and speed
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (int w : set_members(g.neighbors(v))) {
        if (match_[w] < 0) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) augment(find_path(v));
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  void mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, false);
    int v = a;
    for (;;) {
      v = base_[v];
      seen[v] = true;
      if (match_[v] < 0) break;
      v = parent_[match_[v]];
    }
    v = b;
    for (;;) {
      v = base_[v];
      if (seen[v]) return v;
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : set_members(g_->neighbors(v))) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          int cur_base = lowest_common_base(v, to);
          std::vector<char> in_blossom(n_, false);
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v >= 0) {
      int pv = parent_[v];
      int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  int n_;
  const Graph* g_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_;
};

}  // namespace

MatchingResult maximum_matching(const Graph& g) {
  BlossomSolver solver(g);
  MatchingResult out;
  const auto& mate = solver.mate();
  for (int v = 0; v < g.order(); ++v)
    if (mate[v] > v) out.matching.emplace_back(v, mate[v]);
  out.mu = static_cast<int>(out.matching.size());
  out.perfect = 2 * out.mu == g.order();
  out.pendant_perfect = pendant_perfect_matching(g);
  return out;
}

int matching_number(const Graph& g) {
  BlossomSolver solver(g);
  int covered = 0;
  for (int v : solver.mate())
    if (v >= 0) ++covered;
  return covered / 2;
}

std::optional<std::vector<Edge>> pendant_perfect_matching(const Graph& g) {
  VertexSet covered = 0;
  std::vector<Edge> matching;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1 || (covered & vbit(v))) continue;
    int w = first_vertex(g.neighbors(v));
    if (covered & vbit(w)) return std::nullopt;  // two pendant edges clash
    covered |= vbit(v) | vbit(w);
    matching.push_back(make_edge(v, w));
  }
  if (covered != g.vertices()) return std::nullopt;
  std::sort(matching.begin(), matching.end());
  return matching;
}

AvoidableCheck core_avoidable_pairs(const Graph& g,
                                    const StableSetFamily& fam) {
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x; y < g.order(); ++y) {
      bool avoided = false;
      for (VertexSet s : fam.sets) {
        if (!(s & vbit(x)) && !(s & vbit(y))) {
          avoided = true;
          break;
        }
      }
      if (!avoided) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace astab
