#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "astab/classifier.hpp"
#include "astab/graph.hpp"
#include "astab/solvers.hpp"

namespace astab {

struct Violation {
  std::string graph6;
  std::string detail;
};

struct VerificationOutcome {
  std::string theorem_id;
  std::string population;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // capped sample, sorted by graph6
  bool ok() const { return violation_count == 0; }
};

struct SuiteInfo {
  std::string id;
  std::string description;
  int default_nmax;
  int max_nmax;
};

const std::vector<SuiteInfo>& suites();

// nmax = 0 picks the suite default; threads = 0 picks hardware concurrency.
VerificationOutcome run_suite(const std::string& id, int nmax = 0,
                              std::uint64_t seed = 1, int threads = 0);

// --- independent test oracles (kept free of the production code paths) ---

int naive_stability_number(const Graph& g);       // plain in/out recursion
int bruteforce_matching_number(const Graph& g);   // subset DP, n <= 20
bool bruteforce_has_c4(const Graph& g);           // all ordered 4-tuples
std::vector<std::vector<Edge>> all_maximum_matchings(const Graph& g);

// Exhaustive search over every two-part cover of Omega for one with
// xi(Omega_i) >= 2 on both parts.
bool exhaustive_cover_exists(const StableSetFamily& fam);

}  // namespace astab
