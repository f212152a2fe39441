#include "astab/classifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace astab {

std::string to_string(PlusClass c) {
  switch (c) {
    case PlusClass::kAlpha0Plus: return "alpha0+";
    case PlusClass::kAlpha1Plus: return "alpha1+";
    case PlusClass::kNotPlus: return "none";
  }
  return "?";
}

namespace {

struct ScratchGraph {
  std::array<VertexSet, Graph::kMaxVertices> adj{};
  int n = 0;

  explicit ScratchGraph(const Graph& g) : n(g.order()) {
    std::copy(g.adjacency().begin(), g.adjacency().end(), adj.begin());
  }
  void add(const Edge& e) {
    adj[e.first] |= vbit(e.second);
    adj[e.second] |= vbit(e.first);
  }
  void remove(const Edge& e) {
    adj[e.first] &= ~vbit(e.second);
    adj[e.second] &= ~vbit(e.first);
  }
  int alpha() const {
    return detail::stability_number_masks(adj.data(), n, full_set(n));
  }
};

}  // namespace

AlphaPlusOracle oracle_alpha_plus(const Graph& g) {
  ScratchGraph sg(g);
  const int alpha0 = sg.alpha();
  for (const Edge& e : complement_edges(g)) {
    sg.add(e);
    int a = sg.alpha();
    sg.remove(e);
    if (a < alpha0) return {false, e};
  }
  return {true, std::nullopt};  // complete graphs are vacuously stable
}

PairOracle oracle_p3_plus(const Graph& g) {
  ScratchGraph sg(g);
  const int alpha0 = sg.alpha();
  auto non = complement_edges(g);
  for (std::size_t i = 0; i < non.size(); ++i) {
    for (std::size_t j = i + 1; j < non.size(); ++j) {
      const Edge &a = non[i], &b = non[j];
      bool share = a.first == b.first || a.first == b.second ||
                   a.second == b.first || a.second == b.second;
      if (!share) continue;
      sg.add(a);
      sg.add(b);
      int al = sg.alpha();
      sg.remove(a);
      sg.remove(b);
      if (al < alpha0) return {false, EdgePair{a, b}};
    }
  }
  return {true, std::nullopt};
}

PairOracle oracle_plus_plus(const Graph& g) {
  ScratchGraph sg(g);
  const int alpha0 = sg.alpha();
  auto non = complement_edges(g);
  if (non.size() == 1) {
    // only one candidate edge: adding "two" degenerates to one
    sg.add(non[0]);
    int al = sg.alpha();
    sg.remove(non[0]);
    if (al < alpha0) return {false, EdgePair{non[0], non[0]}};
    return {true, std::nullopt};
  }
  for (std::size_t i = 0; i < non.size(); ++i) {
    for (std::size_t j = i + 1; j < non.size(); ++j) {
      sg.add(non[i]);
      sg.add(non[j]);
      int al = sg.alpha();
      sg.remove(non[i]);
      sg.remove(non[j]);
      if (al < alpha0) return {false, EdgePair{non[i], non[j]}};
    }
  }
  return {true, std::nullopt};
}

PlusClass fast_alpha_plus(const StableSetFamily& fam) {
  if (fam.xi == 0) return PlusClass::kAlpha0Plus;
  if (fam.xi == 1) return PlusClass::kAlpha1Plus;
  return PlusClass::kNotPlus;
}

namespace {

VertexSet pair_mask(const std::pair<int, int>& p) {
  return vbit(p.first) | vbit(p.second);
}

// xi of the subfamily {S in Omega : anchor within S}; the intersection
// over an empty subfamily is the whole vertex set.
int subfamily_xi(const StableSetFamily& fam, VertexSet anchor, int n) {
  VertexSet core = full_set(n);
  for (VertexSet s : fam.sets)
    if ((s & anchor) == anchor) core &= s;
  return set_size(core);
}

bool anchors_cover(const StableSetFamily& fam, VertexSet a1, VertexSet a2) {
  for (VertexSet s : fam.sets)
    if ((s & a1) != a1 && (s & a2) != a2) return false;
  return true;
}

}  // namespace

std::optional<CoverWitness> cover_criterion_plus_plus(
    const Graph& g, const StableSetFamily& fam) {
  auto non = complement_edges(g);
  if (non.empty()) return std::nullopt;
  if (non.size() == 1) {
    // mirror the oracle's single-edge fallback
    VertexSet a = pair_mask(non[0]);
    if (!anchors_cover(fam, a, a)) return std::nullopt;
    int xi = subfamily_xi(fam, a, g.order());
    return CoverWitness{non[0], non[0], xi, xi};
  }
  for (std::size_t i = 0; i < non.size(); ++i) {
    VertexSet a1 = pair_mask(non[i]);
    for (std::size_t j = i + 1; j < non.size(); ++j) {
      VertexSet a2 = pair_mask(non[j]);
      if (!anchors_cover(fam, a1, a2)) continue;
      return CoverWitness{non[i], non[j], subfamily_xi(fam, a1, g.order()),
                          subfamily_xi(fam, a2, g.order())};
    }
  }
  return std::nullopt;
}

std::optional<CoverWitness> cover_criterion_p3(const Graph& g,
                                               const StableSetFamily& fam) {
  if (fam.xi < 1) return std::nullopt;
  for (int y : set_members(fam.core)) {
    VertexSet candidates = full_set(g.order()) & ~g.closed_neighborhood(y);
    auto cs = set_members(candidates);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        int x = cs[i], v = cs[j];
        // y lies in every member, so the cover condition reduces to
        // "every member contains x or v"
        bool covered = true;
        for (VertexSet s : fam.sets) {
          if (!(s & vbit(x)) && !(s & vbit(v))) {
            covered = false;
            break;
          }
        }
        if (!covered) continue;
        VertexSet a1 = vbit(x) | vbit(y);
        VertexSet a2 = vbit(y) | vbit(v);
        return CoverWitness{make_edge(x, y), make_edge(y, v),
                            subfamily_xi(fam, a1, g.order()),
                            subfamily_xi(fam, a2, g.order())};
      }
    }
  }
  return std::nullopt;
}

bool is_koenig_egervary(const Graph& g) {
  return stability_number(g) + matching_number(g) == g.order();
}

std::optional<KEDecomposition> ke_decompose(const Graph& g) {
  StableSetFamily fam = max_stable_sets(g);
  MatchingResult mr = maximum_matching(g);
  if (fam.alpha + mr.mu != g.order()) return std::nullopt;
  KEDecomposition out;
  out.stable_side = fam.sets.front();
  out.matched_side = g.vertices() & ~out.stable_side;
  out.matching = mr.matching;
  VertexSet covered_t = 0;
  for (const auto& [u, v] : out.matching) {
    bool u_in_s = (out.stable_side & vbit(u)) != 0;
    bool v_in_s = (out.stable_side & vbit(v)) != 0;
    if (u_in_s == v_in_s)
      throw std::logic_error("K-E decomposition: matching edge not in (S, V-S)");
    covered_t |= u_in_s ? vbit(v) : vbit(u);
  }
  if (covered_t != out.matched_side)
    throw std::logic_error("K-E decomposition: matching does not cover V-S");
  return out;
}

std::optional<bool> fast_plus_plus_ke(const Graph& g) {
  if (!is_koenig_egervary(g)) return std::nullopt;
  return pendant_perfect_matching(g).has_value() && !find_c4(g).has_value();
}

std::optional<bool> fast_plus_plus_bipartite(const Graph& g) {
  if (!is_bipartite(g)) return std::nullopt;
  // an isolated vertex makes the graph well-covered without a pendant
  // perfect matching, so the well-covered test only stands in for the
  // matching one when minimum degree is at least 1
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return std::nullopt;
  return !find_c4(g).has_value() && is_well_covered(g);
}

std::optional<bool> fast_plus_plus_pendant(const Graph& g) {
  if (!pendant_perfect_matching(g).has_value()) return std::nullopt;
  return !find_c4(g).has_value();
}

std::optional<G0Verdict> alpha1_g0_characterization(const Graph& g) {
  StableSetFamily fam = max_stable_sets(g);
  if (fam.xi != 1) return std::nullopt;
  int v = first_vertex(fam.core);
  VertexSet rest = g.vertices() & ~g.closed_neighborhood(v);
  if (rest == 0) return G0Verdict{true, true};  // no pair exists to test
  auto sub = induced_subgraph(g, rest);
  StableSetFamily fam0 = max_stable_sets(sub.graph);
  return G0Verdict{core_avoidable_pairs(sub.graph, fam0).all_avoidable, false};
}

namespace {

bool looks_like_c7(const Graph& g) {
  if (g.order() != 7 || !is_connected(g)) return false;
  for (int v = 0; v < 7; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

Girth6Panel girth6_panel(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("girth6 panel: n >= 2 required");
  auto gi = girth(g);
  if (gi.has_value() && *gi < 6)
    throw std::invalid_argument("girth6 panel: girth >= 6 required");
  if (looks_like_c7(g)) throw std::invalid_argument("girth6 panel: C7 excluded");

  StableSetFamily fam = max_stable_sets(g);
  bool ke = is_koenig_egervary(g);
  Girth6Panel panel;
  panel.well_covered = is_well_covered(g);
  panel.pendant_perfect = pendant_perfect_matching(g).has_value();
  panel.very_well_covered = panel.well_covered && g.order() == 2 * fam.alpha;
  // counted as pendant edges so that K2, whose two pendant vertices share
  // one edge, lands on the same side as the other four assertions
  panel.alpha0_ke_pendants =
      ke && fam.xi == 0 &&
      static_cast<int>(pendant_data(g).edges.size()) == fam.alpha;
  panel.ke_plus_plus = ke && oracle_plus_plus(g).stable;
  return panel;
}

StabilityReport classify_full(const Graph& g, std::size_t max_sets) {
  StableSetFamily fam = max_stable_sets(g, max_sets);
  MatchingResult mr = maximum_matching(g);

  StabilityReport rep;
  rep.alpha = fam.alpha;
  rep.mu = mr.mu;
  rep.xi = fam.xi;
  rep.ke = fam.alpha + mr.mu == g.order();

  AlphaPlusOracle ap = oracle_alpha_plus(g);
  rep.plus = fast_alpha_plus(fam);
  if (ap.stable != (rep.plus != PlusClass::kNotPlus))
    throw std::logic_error("xi characterization disagrees with alpha+ oracle");
  rep.alpha_plus_witness = ap.witness;
  rep.fast_paths.emplace_back("plus", "xi<=1");

  PairOracle p3 = oracle_p3_plus(g);
  rep.p3_plus = p3.stable;
  rep.p3_witness = p3.witness;
  if (cover_criterion_p3(g, fam).has_value() != !p3.stable)
    throw std::logic_error("cover criterion disagrees with p3 oracle");
  rep.fast_paths.emplace_back("p3_plus", "core-anchored cover");

  PairOracle pp = oracle_plus_plus(g);
  rep.plus_plus = pp.stable;
  rep.plus_plus_witness = pp.witness;
  if (cover_criterion_plus_plus(g, fam).has_value() != !pp.stable)
    throw std::logic_error("cover criterion disagrees with ++ oracle");
  rep.fast_paths.emplace_back("plus_plus", "anchored cover");

  if (auto v = fast_plus_plus_ke(g)) {
    if (*v != pp.stable)
      throw std::logic_error("K-E fast path disagrees with ++ oracle");
    rep.fast_paths.emplace_back("plus_plus", "ke:pendant-matched&&c4-free");
  }
  if (auto v = fast_plus_plus_bipartite(g)) {
    if (*v != pp.stable)
      throw std::logic_error("bipartite fast path disagrees with ++ oracle");
    rep.fast_paths.emplace_back("plus_plus", "bipartite:well-covered&&c4-free");
  }
  if (auto v = fast_plus_plus_pendant(g)) {
    if (*v != pp.stable)
      throw std::logic_error("pendant fast path disagrees with ++ oracle");
    rep.fast_paths.emplace_back("plus_plus", "pendant-matched:c4-free");
  }
  if (fam.xi == 1) {
    auto v = alpha1_g0_characterization(g);
    if (!v || v->p3_stable != p3.stable)
      throw std::logic_error("G0 characterization disagrees with p3 oracle");
    rep.g0_vacuous = v->vacuous;
    rep.fast_paths.emplace_back("p3_plus", "g0-avoidable-pairs");
  }

  if (rep.plus_plus && !rep.p3_plus)
    throw std::logic_error("++ stability must imply p3 stability");

  // replay every witness: alpha must strictly drop
  ScratchGraph sg(g);
  auto replay_drops = [&](const std::vector<Edge>& extra) {
    for (const Edge& e : extra) sg.add(e);
    int a = sg.alpha();
    for (const Edge& e : extra) sg.remove(e);
    return a < fam.alpha;
  };
  if (rep.alpha_plus_witness && !replay_drops({*rep.alpha_plus_witness}))
    throw std::logic_error("alpha+ witness does not replay");
  if (rep.p3_witness &&
      !replay_drops({rep.p3_witness->e1, rep.p3_witness->e2}))
    throw std::logic_error("p3 witness does not replay");
  if (rep.plus_plus_witness) {
    std::vector<Edge> extra{rep.plus_plus_witness->e1};
    if (rep.plus_plus_witness->e2 != rep.plus_plus_witness->e1)
      extra.push_back(rep.plus_plus_witness->e2);
    if (!replay_drops(extra))
      throw std::logic_error("++ witness does not replay");
  }
  return rep;
}

namespace {

bool families_intersect(const std::vector<VertexSet>& a,
                        const std::vector<VertexSet>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

bool families_intersect3(const std::vector<VertexSet>& a,
                         const std::vector<VertexSet>& b,
                         const std::vector<VertexSet>& c) {
  for (VertexSet s : a) {
    if (std::binary_search(b.begin(), b.end(), s) &&
        std::binary_search(c.begin(), c.end(), s))
      return true;
  }
  return false;
}

}  // namespace

std::array<bool, 6> six_assertions(const Graph& g) {
  StableSetFamily fam = max_stable_sets(g);
  auto non = complement_edges(g);
  bool aplus = oracle_alpha_plus(g).stable;

  std::vector<StableSetFamily> added;
  added.reserve(non.size());
  for (const Edge& e : non)
    added.push_back(max_stable_sets(g.with_edge(e.first, e.second)));

  std::array<bool, 6> a{};
  a[0] = oracle_plus_plus(g).stable;

  a[1] = aplus;
  a[2] = true;
  for (std::size_t i = 0; i < non.size() && (a[1] || a[2]); ++i) {
    for (std::size_t j = i + 1; j < non.size(); ++j) {
      if (a[1] && !families_intersect(added[i].sets, added[j].sets)) a[1] = false;
      if (a[2] && !families_intersect3(fam.sets, added[i].sets, added[j].sets))
        a[2] = false;
      if (!a[1] && !a[2]) break;
    }
  }

  a[3] = aplus;
  for (const auto& f : added)
    if (f.xi > 1) a[3] = false;

  a[4] = oracle_p3_plus(g).stable;
  if (a[4]) {
    for (std::size_t i = 0; i < non.size() && a[4]; ++i) {
      VertexSet m1 = vbit(non[i].first) | vbit(non[i].second);
      for (std::size_t j = i + 1; j < non.size(); ++j) {
        VertexSet m2 = vbit(non[j].first) | vbit(non[j].second);
        if (m1 & m2) continue;  // endpoints must be disjoint
        bool all_max2 = true;
        for (VertexSet s : fam.sets) {
          if ((s & m1) != m1 && (s & m2) != m2) {
            all_max2 = false;
            break;
          }
        }
        if (all_max2) {
          a[4] = false;
          break;
        }
      }
    }
  }

  a[5] = !cover_criterion_plus_plus(g, fam).has_value();
  return a;
}

bool pair_hitting_condition(const Graph& g, const StableSetFamily& fam) {
  const int n = g.order();
  int holders = 0;
  for (int x = 0; x < n; ++x) {
    bool holds = false;
    for (int y = 0; y < n && !holds; ++y) {
      if (y == x) continue;
      for (int z = y + 1; z < n && !holds; ++z) {
        if (z == x) continue;
        bool ok = true;
        for (VertexSet s : fam.sets) {
          int f1 = set_size(s & (vbit(x) | vbit(y)));
          int f2 = set_size(s & (vbit(x) | vbit(z)));
          if (f1 * f2 < 2) {
            ok = false;
            break;
          }
        }
        if (ok) holds = true;
      }
    }
    if (holds && ++holders > 1) return false;
  }
  return holders == 1;
}

}  // namespace astab
