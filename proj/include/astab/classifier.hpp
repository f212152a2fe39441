#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "astab/graph.hpp"
#include "astab/solvers.hpp"

namespace astab {

enum class PlusClass { kAlpha0Plus, kAlpha1Plus, kNotPlus };

std::string to_string(PlusClass c);

struct AlphaPlusOracle {
  bool stable = true;
  std::optional<Edge> witness;  // first complement edge whose addition drops alpha
};

struct PairOracle {
  bool stable = true;
  std::optional<EdgePair> witness;
};

// Definitional oracles: add edges, recompute alpha.
AlphaPlusOracle oracle_alpha_plus(const Graph& g);
PairOracle oracle_p3_plus(const Graph& g);     // two complement edges sharing an endpoint
PairOracle oracle_plus_plus(const Graph& g);   // any two distinct complement edges;
                                               // single-edge fallback when only one exists

// Classify by the xi characterization of one-edge stability.
PlusClass fast_alpha_plus(const StableSetFamily& fam);

// A two-part cover of Omega generated by anchor pairs: every maximum
// stable set contains omega1_anchor or omega2_anchor.
struct CoverWitness {
  std::pair<int, int> omega1_anchor;
  std::pair<int, int> omega2_anchor;
  int xi1 = 0;
  int xi2 = 0;
};

std::optional<CoverWitness> cover_criterion_plus_plus(const Graph& g,
                                                      const StableSetFamily& fam);
std::optional<CoverWitness> cover_criterion_p3(const Graph& g,
                                               const StableSetFamily& fam);

bool is_koenig_egervary(const Graph& g);

struct KEDecomposition {
  VertexSet stable_side = 0;   // a maximum stable set S
  VertexSet matched_side = 0;  // V - S, fully covered by the matching
  std::vector<Edge> matching;  // maximum matching inside (S, V - S)
};

std::optional<KEDecomposition> ke_decompose(const Graph& g);

// Conditional fast paths. Each returns a verdict only when its
// hypothesis holds, and nullopt otherwise.
std::optional<bool> fast_plus_plus_ke(const Graph& g);
std::optional<bool> fast_plus_plus_bipartite(const Graph& g);
std::optional<bool> fast_plus_plus_pendant(const Graph& g);

struct G0Verdict {
  bool p3_stable = false;
  bool vacuous = false;  // N[v] = V, no pair to test
};

// For alpha1+-stable graphs with core {v}: decide p3-stability through
// the avoidable-pairs condition on G - N[v].
std::optional<G0Verdict> alpha1_g0_characterization(const Graph& g);

struct Girth6Panel {
  bool well_covered = false;
  bool pendant_perfect = false;
  bool very_well_covered = false;
  bool alpha0_ke_pendants = false;  // K-E, xi = 0, exactly alpha pendant edges
  bool ke_plus_plus = false;
  bool all_agree() const {
    return well_covered == pendant_perfect &&
           well_covered == very_well_covered &&
           well_covered == alpha0_ke_pendants && well_covered == ke_plus_plus;
  }
};

// Requires girth >= 6, n >= 2, and the graph not being C7.
Girth6Panel girth6_panel(const Graph& g);

struct StabilityReport {
  int alpha = 0;
  int mu = 0;
  int xi = 0;
  bool ke = false;
  PlusClass plus = PlusClass::kNotPlus;
  bool p3_plus = false;
  bool plus_plus = false;
  std::optional<Edge> alpha_plus_witness;
  std::optional<EdgePair> p3_witness;
  std::optional<EdgePair> plus_plus_witness;
  // flag -> name of the characterization that was applicable and agreed
  std::vector<std::pair<std::string, std::string>> fast_paths;
  bool g0_vacuous = false;
};

StabilityReport classify_full(const Graph& g, std::size_t max_sets = 0);

// The six equivalent formulations of two-edge stability; the repeated
// family factor in (ii)/(iii) is read as Omega(G+e2).
std::array<bool, 6> six_assertions(const Graph& g);

// There exist x,y,z with |{x,y} n S| * |{x,z} n S| >= 2 for every
// maximum stable set S, and x is the unique vertex with this property.
bool pair_hitting_condition(const Graph& g, const StableSetFamily& fam);

}  // namespace astab
