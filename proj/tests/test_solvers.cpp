#include "doctest.h"

#include <cstdlib>

#include "astab/enumerate.hpp"
#include "astab/solvers.hpp"
#include "astab/verify.hpp"

using namespace astab;

TEST_CASE("stability number on named graphs") {
  CHECK(stability_number(complete_graph(5)) == 1);
  CHECK(stability_number(cycle_graph(5)) == 2);
  CHECK(stability_number(cycle_graph(6)) == 3);
  CHECK(stability_number(path_graph(7)) == 4);
  CHECK(stability_number(fixture(Fixture::kG1)) == 4);
  CHECK(stability_number(fixture(Fixture::kG2)) == 3);
}

TEST_CASE("branch and bound agrees with naive recursion, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = graph_from_mask(n, mask);
      CHECK(stability_number(g) == naive_stability_number(g));
    }
  }
}

TEST_CASE("maximum stable set family of C4") {
  auto fam = max_stable_sets(cycle_graph(4));
  CHECK(fam.alpha == 2);
  REQUIRE(fam.sets.size() == 2);
  CHECK(fam.sets[0] == (vbit(0) | vbit(2)));
  CHECK(fam.sets[1] == (vbit(1) | vbit(3)));
  CHECK(fam.core == 0);
  CHECK(fam.xi == 0);
}

TEST_CASE("family of the pendant-K4 graph") {
  auto fam = max_stable_sets(fixture(Fixture::kK4PlusE));
  CHECK(fam.alpha == 2);
  CHECK(fam.sets.size() == 3);
  CHECK(fam.core == vbit(0));
  CHECK(fam.xi == 1);
}

TEST_CASE("family enumeration is exhaustive") {
  // C6 has alpha = 3 and exactly 2 maximum stable sets
  auto fam = max_stable_sets(cycle_graph(6));
  CHECK(fam.alpha == 3);
  CHECK(fam.sets.size() == 2);
  // the empty graph on 4 vertices has a single maximum stable set
  auto all = max_stable_sets(Graph(4));
  CHECK(all.alpha == 4);
  CHECK(all.sets.size() == 1);
  CHECK(all.xi == 4);
}

TEST_CASE("enumeration cap raises BudgetExceeded") {
  CHECK_THROWS_AS(max_stable_sets(cycle_graph(6), 1), BudgetExceeded);
}

TEST_CASE("well-covered recognition") {
  CHECK(is_well_covered(complete_graph(4)));
  CHECK(is_well_covered(cycle_graph(4)));
  CHECK(is_well_covered(cycle_graph(5)));
  CHECK(!is_well_covered(cycle_graph(6)));
  CHECK(!is_well_covered(path_graph(3)));
  CHECK(is_well_covered(fixture(Fixture::kG2)));

  CHECK(is_very_well_covered(cycle_graph(4)));
  CHECK(!is_very_well_covered(cycle_graph(5)));  // 5 != 2 * 2
  CHECK(is_very_well_covered(fixture(Fixture::kG2)));
}

TEST_CASE("matching number on named graphs") {
  CHECK(matching_number(path_graph(4)) == 2);
  CHECK(matching_number(cycle_graph(5)) == 2);
  CHECK(matching_number(complete_graph(6)) == 3);
  CHECK(matching_number(fixture(Fixture::kG1)) == 4);
  CHECK(matching_number(fixture(Fixture::kG2)) == 3);
  // the Petersen graph has a perfect matching
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {5, 8}, {6, 8}, {6, 9}});
  auto m = maximum_matching(petersen);
  CHECK(m.mu == 5);
  CHECK(m.perfect);
}

TEST_CASE("blossom handles odd components") {
  // two triangles joined by a bridge force an augmenting path through
  // a blossom
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK(matching_number(g) == 3);
  CHECK(matching_number(g) == bruteforce_matching_number(g));
}

TEST_CASE("blossom agrees with brute force, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = graph_from_mask(n, mask);
      CHECK(matching_number(g) == bruteforce_matching_number(g));
    }
  }
}

TEST_CASE("pendant perfect matchings") {
  auto g1 = pendant_perfect_matching(fixture(Fixture::kG1));
  REQUIRE(g1.has_value());
  std::vector<Edge> want{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  CHECK(*g1 == want);

  auto g2 = pendant_perfect_matching(fixture(Fixture::kG2));
  REQUIRE(g2.has_value());
  std::vector<Edge> want2{{0, 1}, {2, 3}, {4, 5}};
  CHECK(*g2 == want2);

  CHECK(!pendant_perfect_matching(cycle_graph(4)).has_value());
  CHECK(!pendant_perfect_matching(path_graph(3)).has_value());
  CHECK(pendant_perfect_matching(path_graph(2)).has_value());
  // star: three pendants fight over the centre
  CHECK(!pendant_perfect_matching(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).has_value());
}

TEST_CASE("avoidable pairs") {
  auto c5 = cycle_graph(5);
  CHECK(core_avoidable_pairs(c5, max_stable_sets(c5)).all_avoidable);
  auto p3 = path_graph(3);
  auto chk = core_avoidable_pairs(p3, max_stable_sets(p3));
  CHECK(!chk.all_avoidable);  // both maximum sets contain the two endpoints? no:
  // alpha(P3) = 2, only set {0,2}; the pair (0,2) is unavoidable
  REQUIRE(chk.failing_pair.has_value());
}

TEST_CASE("maximal stable set visitor covers Bron-Kerbosch output") {
  int count = 0;
  for_each_maximal_stable_set(cycle_graph(5), [&](VertexSet) {
    ++count;
    return true;
  });
  CHECK(count == 5);  // C5 has five maximal stable sets
  count = 0;
  for_each_maximal_stable_set(cycle_graph(5), [&](VertexSet) {
    ++count;
    return false;  // early stop
  });
  CHECK(count == 1);
}
