#include "astab/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "astab/enumerate.hpp"

namespace astab {

// --- independent oracles ---------------------------------------------------

namespace {

int naive_mis(const std::vector<VertexSet>& adj, VertexSet cand) {
  if (!cand) return 0;
  int v = first_vertex(cand);
  int with = 1 + naive_mis(adj, cand & ~(adj[v] | vbit(v)));
  int without = naive_mis(adj, cand & ~vbit(v));
  return std::max(with, without);
}

}  // namespace

int naive_stability_number(const Graph& g) {
  return naive_mis(g.adjacency(), g.vertices());
}

int bruteforce_matching_number(const Graph& g) {
  const int n = g.order();
  if (n > 20)
    throw std::invalid_argument("brute-force matching limited to n <= 20");
  std::vector<std::int8_t> dp(std::size_t{1} << n, 0);
  for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
    int v = first_vertex(mask);
    std::int8_t best = dp[mask & ~vbit(v)];
    for (int u : set_members(g.neighbors(v) & mask & ~vbit(v)))
      best = std::max<std::int8_t>(best,
                                   static_cast<std::int8_t>(
                                       1 + dp[mask & ~vbit(v) & ~vbit(u)]));
    dp[mask] = best;
  }
  return dp[g.vertices()];
}

bool bruteforce_has_c4(const Graph& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          if (i == j || i == k || i == m || j == k || j == m || k == m)
            continue;
          if (g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(k, m) &&
              g.has_edge(m, i))
            return true;
        }
  return false;
}

namespace {

void matchings_rec(const Graph& g, VertexSet processed, std::vector<Edge>& cur,
                   std::size_t& best, std::vector<std::vector<Edge>>& out) {
  VertexSet undecided = g.vertices() & ~processed;
  if (!undecided) {
    if (cur.size() > best) {
      best = cur.size();
      out.clear();
    }
    if (cur.size() == best) out.push_back(cur);
    return;
  }
  int v = first_vertex(undecided);
  matchings_rec(g, processed | vbit(v), cur, best, out);  // v stays exposed
  for (int u : set_members(g.neighbors(v) & ~processed)) {
    cur.push_back(make_edge(v, u));
    matchings_rec(g, processed | vbit(v) | vbit(u), cur, best, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Edge>> all_maximum_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  std::size_t best = 0;
  matchings_rec(g, 0, cur, best, out);
  return out;
}

bool exhaustive_cover_exists(const StableSetFamily& fam) {
  const std::size_t k = fam.sets.size();
  if (k > 22)
    throw std::invalid_argument("exhaustive cover search limited to |Omega| <= 22");
  const std::uint32_t all = (std::uint32_t{1} << k) - 1;
  auto xi_of = [&](std::uint32_t subset) {
    VertexSet core = ~VertexSet{0};
    for (std::size_t i = 0; i < k; ++i)
      if (subset & (std::uint32_t{1} << i)) core &= fam.sets[i];
    return set_size(core);
  };
  for (std::uint32_t a = 1; a <= all && all; ++a) {
    if (xi_of(a) < 2) continue;
    std::uint32_t rest = all & ~a;
    if (rest == 0) {
      // the second part may be any nonempty subfamily; a single member
      // maximizes its intersection, which then has alpha vertices
      if (fam.alpha >= 2) return true;
      continue;
    }
    if (xi_of(rest) >= 2) return true;
  }
  return false;
}

// --- sweep machinery --------------------------------------------------------

namespace {

constexpr std::size_t kViolationSample = 100;

struct CheckResult {
  bool counted = true;
  std::optional<std::string> detail;  // set -> violation
};

using Checker = std::function<CheckResult(const Graph&)>;
using Builder = std::function<Graph(std::uint64_t)>;

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 4;
}

void sweep_indices(std::uint64_t total, int threads, const Builder& build,
                   const Checker& check, VerificationOutcome& out) {
  threads = resolve_threads(threads);
  if (total < 1024) threads = 1;
  std::vector<std::uint64_t> checked(threads, 0), viol_counts(threads, 0);
  std::vector<std::vector<Violation>> viols(threads);
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&](int t) {
    try {
      for (std::uint64_t i = t; i < total; i += threads) {
        Graph g = build(i);
        CheckResult r = check(g);
        if (r.counted) ++checked[t];
        if (r.detail) {
          ++viol_counts[t];
          if (viols[t].size() < kViolationSample)
            viols[t].push_back({to_graph6(g), *r.detail});
        }
      }
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  for (int t = 0; t < threads; ++t) {
    out.checked += checked[t];
    out.violation_count += viol_counts[t];
    for (auto& v : viols[t])
      if (out.violations.size() < kViolationSample)
        out.violations.push_back(std::move(v));
  }
  std::sort(out.violations.begin(), out.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.graph6 < b.graph6 ||
                     (a.graph6 == b.graph6 && a.detail < b.detail);
            });
}

// all labeled graphs on 2..nmax vertices
void sweep_all_graphs(int nmax, int threads, const Checker& check,
                      VerificationOutcome& out) {
  for (int n = 2; n <= nmax; ++n) {
    sweep_indices(labeled_graph_count(n), threads,
                  [n](std::uint64_t mask) { return graph_from_mask(n, mask); },
                  check, out);
  }
}

void sweep_trees(int nmax, int threads, const Checker& check,
                 VerificationOutcome& out) {
  for (int n = 2; n <= nmax; ++n) {
    sweep_indices(labeled_tree_count(n), threads,
                  [n](std::uint64_t idx) { return tree_from_index(n, idx); },
                  check, out);
  }
}

std::string all_graphs_pop(int nmax) {
  return "all labeled graphs 2<=n<=" + std::to_string(nmax);
}

bool is_cycle_c7(const Graph& g) {
  if (g.order() != 7 || !is_connected(g)) return false;
  for (int v = 0; v < 7; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool crosses(const Edge& e, VertexSet side) {
  return ((side & vbit(e.first)) != 0) != ((side & vbit(e.second)) != 0);
}

std::string describe(std::string_view what) { return std::string(what); }

// --- per-suite checkers ----------------------------------------------------

CheckResult check_th2(const Graph& g) {
  auto fam = max_stable_sets(g);
  bool oracle = oracle_alpha_plus(g).stable;
  if (oracle != (fam.xi <= 1))
    return {true, describe("alpha+ oracle vs xi<=1 mismatch, xi=" +
                           std::to_string(fam.xi))};
  return {true, std::nullopt};
}

CheckResult check_prop8(const Graph& g) {
  auto fam = max_stable_sets(g);
  if (fam.xi != 0) return {false, std::nullopt};
  if (!oracle_p3_plus(g).stable)
    return {true, describe("alpha0+ graph is not p3-stable")};
  return {true, std::nullopt};
}

CheckResult check_prop10(const Graph& g) {
  if (is_complete_minus_edge(g)) return {false, std::nullopt};
  if (!oracle_p3_plus(g).stable) return {false, std::nullopt};
  if (!oracle_alpha_plus(g).stable)
    return {true, describe("p3-stable non-(K_n - e) graph is not alpha+")};
  return {true, std::nullopt};
}

CheckResult check_pp_implies_p3(const Graph& g) {
  if (!oracle_plus_plus(g).stable) return {false, std::nullopt};
  if (!oracle_p3_plus(g).stable)
    return {true, describe("++-stable graph is not p3-stable")};
  return {true, std::nullopt};
}

CheckResult check_lem3(const Graph& g) {
  auto fam = max_stable_sets(g);
  if (!core_avoidable_pairs(g, fam).all_avoidable) return {false, std::nullopt};
  if (fam.xi != 0) return {true, describe("avoidable pairs but xi > 0")};
  if (!oracle_plus_plus(g).stable)
    return {true, describe("avoidable pairs but not ++-stable")};
  return {true, std::nullopt};
}

CheckResult check_prop3(const Graph& g) {
  auto fam = max_stable_sets(g);
  bool witness = cover_criterion_p3(g, fam).has_value();
  bool oracle = oracle_p3_plus(g).stable;
  if (witness == oracle)
    return {true, describe(oracle ? "cover witness on a p3-stable graph"
                                  : "no cover witness on a p3-unstable graph")};
  return {true, std::nullopt};
}

CheckResult check_prop4(const Graph& g) {
  auto fam = max_stable_sets(g);
  bool witness = cover_criterion_plus_plus(g, fam).has_value();
  bool oracle = oracle_plus_plus(g).stable;
  if (witness == oracle)
    return {true, describe(oracle ? "cover witness on a ++-stable graph"
                                  : "no cover witness on a ++-unstable graph")};
  return {true, std::nullopt};
}

CheckResult check_cover_exhaustive(const Graph& g) {
  auto fam = max_stable_sets(g);
  bool pair_based = cover_criterion_plus_plus(g, fam).has_value();
  bool full = exhaustive_cover_exists(fam);
  if (pair_based != full)
    return {true, describe("anchor-pair cover search disagrees with exhaustive")};
  return {true, std::nullopt};
}

CheckResult check_alpha2(const Graph& g) {
  auto fam = max_stable_sets(g);
  if (fam.alpha != 2 || is_complete_minus_edge(g)) return {false, std::nullopt};
  const int n = g.order();
  bool aplus = oracle_alpha_plus(g).stable;
  bool p3 = oracle_p3_plus(g).stable;
  bool pp = oracle_plus_plus(g).stable;
  auto omega = fam.sets.size();
  if (aplus != (omega >= 2)) return {true, describe("(i): alpha+ vs |Omega|>=2")};
  if (p3 != (fam.xi == 0 || (fam.xi == 1 && omega >= 3)))
    return {true, describe("(ii): p3 vs xi/|Omega| condition")};
  if (pp != (omega >= 3)) return {true, describe("(iii): ++ vs |Omega|>=3")};
  // the substitution family degenerates to K1 u K2 at m = 0
  bool p3_sub = (n == 3 && g.edge_count() == 1) ||
                (n >= 4 && isomorphic(g, p3_substitution(n - 3)));
  if (p3 != (aplus && !p3_sub))
    return {true, describe("(iv): p3 vs alpha+ minus substitution family")};
  return {true, std::nullopt};
}

CheckResult check_prop2(const Graph& g) {
  auto fam = max_stable_sets(g);
  if (fam.alpha < 3) return {false, std::nullopt};
  bool aplus = oracle_alpha_plus(g).stable;
  bool rhs = oracle_p3_plus(g).stable || pair_hitting_condition(g, fam);
  if (aplus != rhs)
    return {true, describe("alpha+ vs p3-or-unique-pair-hitting mismatch")};
  return {true, std::nullopt};
}

CheckResult check_six(const Graph& g) {
  // quantifiers over edge pairs degenerate when the complement has a
  // single edge; those graphs (K_n - e) are outside this suite
  if (complement_edges(g).size() == 1) return {false, std::nullopt};
  auto a = six_assertions(g);
  for (int i = 1; i < 6; ++i)
    if (a[i] != a[0])
      return {true, describe("assertion (" + std::to_string(i + 1) +
                             ") differs from (i)")};
  return {true, std::nullopt};
}

CheckResult check_lem4(const Graph& g) {
  auto fam = max_stable_sets(g);
  int mu = matching_number(g);
  if (fam.alpha + mu != g.order()) return {false, std::nullopt};
  auto matchings = all_maximum_matchings(g);
  for (VertexSet s : fam.sets)
    for (const auto& m : matchings)
      for (const Edge& e : m)
        if (!crosses(e, s))
          return {true, describe("maximum matching edge outside (S, V-S)")};
  return {true, std::nullopt};
}

CheckResult check_prop12_14(const Graph& g) {
  const int n = g.order();
  int alpha = stability_number(g);
  int mu = matching_number(g);
  if (alpha + mu != n) return {false, std::nullopt};
  auto matchings = all_maximum_matchings(g);
  bool counted = false;
  for (VertexSet w = 1; w < full_set(n); w += 2) {  // 0 in W, W proper
    bool split_respecting = false;
    for (const auto& m : matchings) {
      bool cross = false;
      for (const Edge& e : m)
        if (crosses(e, w)) {
          cross = true;
          break;
        }
      if (!cross) {
        split_respecting = true;
        break;
      }
    }
    if (!split_respecting) continue;
    counted = true;
    Graph h = induced_subgraph(g, w).graph;
    Graph r = induced_subgraph(g, full_set(n) & ~w).graph;
    if (matching_number(h) + matching_number(r) != mu)
      return {true, describe("mu not additive over a split-respecting matching")};
    if (stability_number(h) + stability_number(r) != alpha)
      return {true, describe("alpha not additive over a split-respecting matching")};
    if (!is_koenig_egervary(h) || !is_koenig_egervary(r))
      return {true, describe("split part of a K-E graph is not K-E")};
  }
  return {counted, std::nullopt};
}

CheckResult check_lem1(const Graph& g) {
  if (!oracle_plus_plus(g).stable) return {false, std::nullopt};
  const int n = g.order();
  int alpha = stability_number(g);
  for (VertexSet w = 1; w < full_set(n); w += 2) {
    Graph h = induced_subgraph(g, w).graph;
    Graph r = induced_subgraph(g, full_set(n) & ~w).graph;
    if (stability_number(h) + stability_number(r) != alpha) continue;
    if (!oracle_plus_plus(h).stable || !oracle_plus_plus(r).stable)
      return {true, describe("alpha-additive subgraph of a ++-stable graph "
                             "is not ++-stable")};
  }
  return {true, std::nullopt};
}

CheckResult check_lem2(const Graph& g) {
  if (stability_number(g) != 3 || !has_hamiltonian_path(g))
    return {false, std::nullopt};
  if (oracle_plus_plus(g).stable)
    return {true, describe("order-6 traceable graph with alpha=3 is ++-stable")};
  return {true, std::nullopt};
}

CheckResult check_prop5(const Graph& g) {
  if (!is_koenig_egervary(g)) return {false, std::nullopt};
  if (is_complete_minus_edge(g) && g.order() <= 3) return {false, std::nullopt};
  if (!oracle_plus_plus(g).stable) return {false, std::nullopt};
  if (!pendant_perfect_matching(g).has_value())
    return {true, describe("++-stable K-E graph lacks a pendant perfect matching")};
  return {true, std::nullopt};
}

CheckResult check_prop6(const Graph& g) {
  if (!pendant_perfect_matching(g).has_value()) return {false, std::nullopt};
  if (!oracle_p3_plus(g).stable)
    return {true, describe("pendant-matched graph is not p3-stable")};
  return {true, std::nullopt};
}

CheckResult check_th1(const Graph& g) {
  auto fast = fast_plus_plus_pendant(g);
  if (!fast) return {false, std::nullopt};
  bool oracle = oracle_plus_plus(g).stable;
  if (oracle != !find_c4(g).has_value())
    return {true, describe("pendant-matched: ++ vs C4-freeness mismatch")};
  if (*fast != oracle)
    return {true, describe("pendant fast path disagrees with oracle")};
  return {true, std::nullopt};
}

CheckResult check_th3(const Graph& g) {
  auto fast = fast_plus_plus_ke(g);
  if (!fast) return {false, std::nullopt};
  bool oracle = oracle_plus_plus(g).stable;
  bool rhs = pendant_perfect_matching(g).has_value() && !find_c4(g).has_value();
  if (oracle != rhs)
    return {true, describe("K-E: ++ vs pendant-matching-and-C4-free mismatch")};
  if (*fast != oracle)
    return {true, describe("K-E fast path disagrees with oracle")};
  return {true, std::nullopt};
}

CheckResult check_cor1(const Graph& g) {
  auto fast = fast_plus_plus_bipartite(g);
  if (!fast) return {false, std::nullopt};
  bool oracle = oracle_plus_plus(g).stable;
  bool c4free = !find_c4(g).has_value();
  if (oracle != (c4free && is_well_covered(g)))
    return {true, describe("bipartite: ++ vs C4-free-and-well-covered mismatch")};
  if (oracle != (c4free && pendant_perfect_matching(g).has_value()))
    return {true, describe("bipartite: ++ vs C4-free-and-pendant-matched mismatch")};
  if (*fast != oracle)
    return {true, describe("bipartite fast path disagrees with oracle")};
  return {true, std::nullopt};
}

CheckResult check_alpha1_g0(const Graph& g) {
  auto verdict = alpha1_g0_characterization(g);
  if (!verdict) return {false, std::nullopt};
  if (verdict->p3_stable != oracle_p3_plus(g).stable)
    return {true, describe("G0 avoidable-pairs verdict disagrees with p3 oracle")};
  return {true, std::nullopt};
}

CheckResult check_konig(const Graph& g) {
  if (!is_bipartite(g)) return {false, std::nullopt};
  if (stability_number(g) + matching_number(g) != g.order())
    return {true, describe("bipartite graph fails alpha + mu = n")};
  return {true, std::nullopt};
}

CheckResult check_ke_decompose(const Graph& g) {
  bool ke = is_koenig_egervary(g);
  std::optional<KEDecomposition> d;
  try {
    d = ke_decompose(g);
  } catch (const std::logic_error& e) {
    return {true, describe(std::string("decomposition invariant: ") + e.what())};
  }
  if (d.has_value() != ke)
    return {true, describe("decomposition presence disagrees with K-E test")};
  if (d) {
    if (set_size(d->stable_side) != stability_number(g) ||
        static_cast<int>(d->matching.size()) != set_size(d->matched_side))
      return {true, describe("decomposition side sizes are wrong")};
  }
  return {true, std::nullopt};
}

CheckResult check_alpha_oracle(const Graph& g) {
  if (stability_number(g) != naive_stability_number(g))
    return {true, describe("branch-and-bound alpha disagrees with naive recursion")};
  return {true, std::nullopt};
}

CheckResult check_c4_oracle(const Graph& g) {
  if (find_c4(g).has_value() != bruteforce_has_c4(g))
    return {true, describe("common-neighbour C4 test disagrees with brute force")};
  return {true, std::nullopt};
}

CheckResult check_graph6_roundtrip(const Graph& g) {
  std::string s = to_graph6(g);
  if (!(parse_graph6(s) == g))
    return {true, describe("graph6 round-trip changed the graph")};
  return {true, std::nullopt};
}

CheckResult check_matching(const Graph& g) {
  if (matching_number(g) != bruteforce_matching_number(g))
    return {true, describe("blossom mu disagrees with subset-DP mu")};
  return {true, std::nullopt};
}

CheckResult check_tree(const Graph& g) {
  bool wc = is_well_covered(g);
  bool ppm = pendant_perfect_matching(g).has_value();
  bool vwc = is_very_well_covered(g);
  bool pp = oracle_plus_plus(g).stable;
  if (wc != ppm || wc != vwc || wc != pp)
    return {true, describe("tree assertions diverge: wc=" + std::to_string(wc) +
                           " ppm=" + std::to_string(ppm) + " vwc=" +
                           std::to_string(vwc) + " ++=" + std::to_string(pp))};
  return {true, std::nullopt};
}

CheckResult check_girth6_panel(const Graph& g) {
  // the panel equivalences are per-component statements; sweep connected
  // graphs, skipping C7 per the hypothesis
  if (!is_connected(g) || is_cycle_c7(g)) return {false, std::nullopt};
  Girth6Panel panel = girth6_panel(g);
  if (!panel.all_agree())
    return {true, describe("panel booleans diverge: wc=" +
                           std::to_string(panel.well_covered) + " ppm=" +
                           std::to_string(panel.pendant_perfect) + " vwc=" +
                           std::to_string(panel.very_well_covered) + " iv=" +
                           std::to_string(panel.alpha0_ke_pendants) + " v=" +
                           std::to_string(panel.ke_plus_plus))};
  return {true, std::nullopt};
}

}  // namespace

// --- suite registry ----------------------------------------------------------

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> table = {
      {"graph6_roundtrip", "graph6 encode/decode identity", 7, 8},
      {"alpha_oracle", "branch-and-bound alpha vs naive recursion", 7, 7},
      {"c4_oracle", "C4 detection vs brute force over 4-tuples", 6, 7},
      {"konig", "bipartite graphs satisfy alpha + mu = n", 7, 7},
      {"matching", "blossom mu vs brute force, labeled + random graphs", 7, 7},
      {"th2", "alpha+ stability iff xi <= 1", 6, 7},
      {"prop2", "alpha >= 3: alpha+ iff p3 or unique pair-hitting vertex", 6, 7},
      {"prop3", "p3 instability iff core-anchored cover exists", 6, 7},
      {"prop4", "++ instability iff anchored cover exists", 6, 7},
      {"cover_exhaustive", "anchored covers match exhaustive 2-covers", 5, 5},
      {"prop5", "++-stable K-E graphs have pendant perfect matchings", 6, 7},
      {"prop6", "pendant-matched graphs are p3-stable", 6, 7},
      {"prop8", "alpha0+ graphs are p3-stable", 6, 7},
      {"prop10", "p3-stable non-(K_n - e) graphs are alpha+", 6, 7},
      {"pp_implies_p3", "++ stability implies p3 stability", 6, 7},
      {"lem1", "alpha-additive subgraphs inherit ++ stability", 6, 6},
      {"lem2", "order-6 traceable graphs with alpha = 3 are not ++", 6, 6},
      {"lem3", "avoidable pairs imply alpha0+ and ++ stability", 6, 7},
      {"lem4", "K-E maximum matchings lie in (S, V-S)", 6, 6},
      {"prop12_14", "matching/stability additivity over K-E splits", 6, 6},
      {"six", "six equivalent formulations of ++ stability", 6, 6},
      {"alpha2", "alpha = 2 corollary, assertions (i)-(iv)", 6, 7},
      {"alpha1_g0", "alpha1+: p3 stability via G - N[v]", 6, 7},
      {"th1", "pendant-matched: ++ iff C4-free", 6, 7},
      {"th3", "K-E: ++ iff pendant-matched and C4-free", 6, 7},
      {"cor1", "bipartite: ++ iff C4-free and well-covered", 6, 7},
      {"ke_decompose", "K-E decomposition presence and invariants", 6, 7},
      {"cycle_parity", "C_n is ++-stable iff n is odd", 13, 15},
      {"tree", "tree corollary: four equivalent assertions", 9, 9},
      {"girth6_panel", "girth >= 6 panel of five equivalent assertions", 8, 8},
  };
  return table;
}

namespace {

const SuiteInfo& suite_info(const std::string& id) {
  for (const auto& s : suites())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown suite: " + id);
}

Checker plain_checker(const std::string& id) {
  if (id == "th2") return check_th2;
  if (id == "prop2") return check_prop2;
  if (id == "prop3") return check_prop3;
  if (id == "prop4") return check_prop4;
  if (id == "cover_exhaustive") return check_cover_exhaustive;
  if (id == "prop5") return check_prop5;
  if (id == "prop6") return check_prop6;
  if (id == "prop8") return check_prop8;
  if (id == "prop10") return check_prop10;
  if (id == "pp_implies_p3") return check_pp_implies_p3;
  if (id == "lem1") return check_lem1;
  if (id == "lem3") return check_lem3;
  if (id == "lem4") return check_lem4;
  if (id == "prop12_14") return check_prop12_14;
  if (id == "six") return check_six;
  if (id == "alpha2") return check_alpha2;
  if (id == "alpha1_g0") return check_alpha1_g0;
  if (id == "th1") return check_th1;
  if (id == "th3") return check_th3;
  if (id == "cor1") return check_cor1;
  if (id == "ke_decompose") return check_ke_decompose;
  if (id == "konig") return check_konig;
  if (id == "alpha_oracle") return check_alpha_oracle;
  if (id == "c4_oracle") return check_c4_oracle;
  if (id == "graph6_roundtrip") return check_graph6_roundtrip;
  return nullptr;
}

}  // namespace

VerificationOutcome run_suite(const std::string& id, int nmax,
                              std::uint64_t seed, int threads) {
  const SuiteInfo& info = suite_info(id);
  if (nmax == 0) nmax = info.default_nmax;
  if (nmax < 2 || nmax > info.max_nmax)
    throw std::invalid_argument("suite " + id + ": nmax out of range [2," +
                                std::to_string(info.max_nmax) + "]");
  VerificationOutcome out;
  out.theorem_id = id;

  if (Checker c = plain_checker(id)) {
    out.population = all_graphs_pop(nmax);
    sweep_all_graphs(nmax, threads, c, out);
    return out;
  }

  if (id == "lem2") {
    out.population = "all labeled graphs n=6";
    sweep_indices(labeled_graph_count(6), threads,
                  [](std::uint64_t mask) { return graph_from_mask(6, mask); },
                  check_lem2, out);
    return out;
  }

  if (id == "matching") {
    out.population = all_graphs_pop(nmax) + " + 10000 random graphs n<=16";
    sweep_all_graphs(nmax, threads, check_matching, out);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, 16);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    std::vector<Graph> sample;
    sample.reserve(10000);
    for (int k = 0; k < 10000; ++k) {
      int n = order(rng);
      double p = prob(rng);
      sample.push_back(random_graphs(n, 1, p, rng())[0]);
    }
    sweep_indices(sample.size(), threads,
                  [&sample](std::uint64_t i) { return sample[i]; },
                  check_matching, out);
    return out;
  }

  if (id == "cycle_parity") {
    out.population = "cycles C_n, 4<=n<=" + std::to_string(nmax);
    for (int n = 4; n <= nmax; ++n) {
      Graph c = cycle_graph(n);
      ++out.checked;
      if (oracle_plus_plus(c).stable != (n % 2 == 1)) {
        ++out.violation_count;
        out.violations.push_back({to_graph6(c), "++ stability vs parity"});
      }
    }
    return out;
  }

  if (id == "tree") {
    out.population = "all labeled trees 2<=n<=" + std::to_string(nmax);
    sweep_trees(nmax, threads, check_tree, out);
    return out;
  }

  if (id == "girth6_panel") {
    out.population = "connected labeled graphs of girth >= 6, except C7, 2<=n<=" +
                     std::to_string(nmax);
    for (int n = 2; n <= nmax; ++n) {
      auto masks = girth_ge6_masks(n);
      sweep_indices(masks.size(), threads,
                    [n, &masks](std::uint64_t i) {
                      return graph_from_mask(n, masks[i]);
                    },
                    check_girth6_panel, out);
    }
    return out;
  }

  throw std::invalid_argument("suite " + id + " has no runner");
}

}  // namespace astab
