#include "doctest.h"

#include <stdexcept>

#include "astab/classifier.hpp"
#include "astab/enumerate.hpp"

using namespace astab;

TEST_CASE("one-edge stability oracles on the pendant-triangle graph") {
  Graph g = fixture(Fixture::kK3PlusE);
  CHECK(oracle_alpha_plus(g).stable);
  CHECK(fast_alpha_plus(max_stable_sets(g)) == PlusClass::kAlpha1Plus);
  auto p3 = oracle_p3_plus(g);
  CHECK(!p3.stable);
  REQUIRE(p3.witness.has_value());
  CHECK(!oracle_plus_plus(g).stable);
}

TEST_CASE("one-edge stability oracles on the pendant-K4 graph") {
  Graph g = fixture(Fixture::kK4PlusE);
  CHECK(oracle_alpha_plus(g).stable);
  CHECK(fast_alpha_plus(max_stable_sets(g)) == PlusClass::kAlpha1Plus);
  CHECK(oracle_p3_plus(g).stable);
  CHECK(oracle_plus_plus(g).stable);
}

TEST_CASE("K4 - e is not one-edge stable") {
  Graph g = complete_minus_edge_graph(4);
  auto oracle = oracle_alpha_plus(g);
  CHECK(!oracle.stable);
  REQUIRE(oracle.witness.has_value());
  CHECK(*oracle.witness == Edge{0, 1});
  CHECK(fast_alpha_plus(max_stable_sets(g)) == PlusClass::kNotPlus);
}

TEST_CASE("K5 - e has xi = 2") {
  Graph g = complete_minus_edge_graph(5);
  auto fam = max_stable_sets(g);
  CHECK(fam.alpha == 2);
  CHECK(fam.xi == 2);
  CHECK(fast_alpha_plus(fam) == PlusClass::kNotPlus);
}

TEST_CASE("C4 is alpha0+ but not two-edge stable") {
  Graph g = cycle_graph(4);
  CHECK(fast_alpha_plus(max_stable_sets(g)) == PlusClass::kAlpha0Plus);
  CHECK(oracle_p3_plus(g).stable);  // its two missing edges are disjoint
  auto pp = oracle_plus_plus(g);
  CHECK(!pp.stable);
  REQUIRE(pp.witness.has_value());
  Graph worse = g.with_edges(*pp.witness);
  CHECK(stability_number(worse) < 2);
}

TEST_CASE("the single-missing-edge convention") {
  // K_n - e has one missing edge; the two-edge oracle falls back to
  // adding it alone, so the graph is not two-edge stable
  auto pp = oracle_plus_plus(complete_minus_edge_graph(6));
  CHECK(!pp.stable);
  REQUIRE(pp.witness.has_value());
  CHECK(pp.witness->e1 == pp.witness->e2);
  // a complete graph has nothing to add and is vacuously stable
  CHECK(oracle_plus_plus(complete_graph(5)).stable);
  CHECK(oracle_p3_plus(complete_graph(5)).stable);
  CHECK(oracle_alpha_plus(complete_graph(5)).stable);
}

TEST_CASE("odd cycles are two-edge stable, even ones are not") {
  for (int n = 4; n <= 9; ++n)
    CHECK(oracle_plus_plus(cycle_graph(n)).stable == (n % 2 == 1));
}

TEST_CASE("G1: pendant matched K-E graph with a C4, not two-edge stable") {
  Graph g = fixture(Fixture::kG1);
  CHECK(pendant_perfect_matching(g).has_value());
  CHECK(find_c4(g).has_value());
  CHECK(is_koenig_egervary(g));
  auto pp = oracle_plus_plus(g);
  CHECK(!pp.stable);
  REQUIRE(pp.witness.has_value());
  Graph worse = g.with_edges(*pp.witness);
  CHECK(stability_number(worse) < stability_number(g));
  // the pair joining the two outer path ends works as a witness
  EdgePair outer = make_edge_pair(make_edge(0, 7), make_edge(3, 4));
  CHECK(stability_number(g.with_edges(outer)) < stability_number(g));
}

TEST_CASE("G2: C4-free pendant matched K-E graph, two-edge stable") {
  Graph g = fixture(Fixture::kG2);
  CHECK(is_koenig_egervary(g));
  CHECK(pendant_perfect_matching(g).has_value());
  CHECK(!find_c4(g).has_value());
  CHECK(is_well_covered(g));
  CHECK(is_very_well_covered(g));
  CHECK(oracle_plus_plus(g).stable);
  CHECK(fast_plus_plus_ke(g) == std::optional<bool>(true));
}

TEST_CASE("cover criteria match the oracles on fixtures") {
  for (auto which : {Fixture::kK3PlusE, Fixture::kK4PlusE, Fixture::kG1,
                     Fixture::kG2, Fixture::kFig2A, Fixture::kFig2B,
                     Fixture::kFig2C}) {
    Graph g = fixture(which);
    auto fam = max_stable_sets(g);
    CHECK(cover_criterion_plus_plus(g, fam).has_value() !=
          oracle_plus_plus(g).stable);
    CHECK(cover_criterion_p3(g, fam).has_value() != oracle_p3_plus(g).stable);
  }
}

TEST_CASE("Koenig-Egervary recognition and decomposition") {
  CHECK(is_koenig_egervary(path_graph(4)));
  CHECK(is_koenig_egervary(cycle_graph(6)));
  CHECK(!is_koenig_egervary(cycle_graph(5)));
  CHECK(!is_koenig_egervary(complete_graph(3)));
  CHECK(is_koenig_egervary(complete_minus_edge_graph(4)));

  auto d = ke_decompose(fixture(Fixture::kG1));
  REQUIRE(d.has_value());
  CHECK(set_size(d->stable_side) == 4);
  CHECK(d->matching.size() == 4);
  CHECK((d->stable_side & d->matched_side) == 0);
  CHECK(!ke_decompose(cycle_graph(5)).has_value());
}

TEST_CASE("fast paths stay inside their hypotheses") {
  CHECK(fast_plus_plus_ke(cycle_graph(5)) == std::nullopt);
  CHECK(fast_plus_plus_bipartite(complete_graph(3)) == std::nullopt);
  CHECK(fast_plus_plus_pendant(cycle_graph(4)) == std::nullopt);
  CHECK(fast_plus_plus_pendant(fixture(Fixture::kG1)) ==
        std::optional<bool>(false));
  CHECK(fast_plus_plus_bipartite(path_graph(4)) == std::optional<bool>(true));
  CHECK(fast_plus_plus_bipartite(cycle_graph(4)) == std::optional<bool>(false));
  // isolated vertices fall outside the bipartite shortcut
  CHECK(fast_plus_plus_bipartite(Graph(2)) == std::nullopt);
}

TEST_CASE("full classification of the substitution graph") {
  Graph g = p3_substitution(1);
  auto r = classify_full(g);
  CHECK(r.alpha == 2);
  CHECK(r.xi == 1);
  CHECK(r.plus == PlusClass::kAlpha1Plus);
  CHECK(!r.p3_plus);
  CHECK(!r.plus_plus);
  auto fam = max_stable_sets(g);
  REQUIRE(fam.sets.size() == 2);
  CHECK(fam.sets[0] == (vbit(0) | vbit(2)));
  CHECK(fam.sets[1] == (vbit(0) | vbit(3)));
}

TEST_CASE("full classification replays its own witnesses") {
  for (int n = 4; n <= 6; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    // a light stride keeps this quick while touching varied graphs
    for (std::uint64_t mask = 0; mask < total; mask += 7) {
      Graph g = graph_from_mask(n, mask);
      auto r = classify_full(g);
      CHECK(r.alpha == stability_number(g));
      CHECK((r.plus != PlusClass::kNotPlus) == oracle_alpha_plus(g).stable);
      CHECK(r.p3_plus == oracle_p3_plus(g).stable);
      CHECK(r.plus_plus == oracle_plus_plus(g).stable);
    }
  }
}

TEST_CASE("six formulations agree on small graphs away from K_n - e") {
  for (std::uint64_t mask = 0; mask < labeled_graph_count(5); ++mask) {
    Graph g = graph_from_mask(5, mask);
    if (complement_edges(g).size() == 1) continue;
    auto a = six_assertions(g);
    for (int i = 1; i < 6; ++i) CHECK(a[i] == a[0]);
  }
}

TEST_CASE("girth panel fixtures") {
  // C5 has girth 5; the panel refuses it
  CHECK_THROWS_AS(girth6_panel(cycle_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(girth6_panel(cycle_graph(7)), std::invalid_argument);
  auto star = girth6_panel(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(!star.well_covered);
  CHECK(star.all_agree());
  auto p2 = girth6_panel(path_graph(2));
  CHECK(p2.well_covered);
  CHECK(p2.all_agree());
  // C6 is girth 6 but not well-covered, and all five agree on that
  auto c6 = girth6_panel(cycle_graph(6));
  CHECK(!c6.well_covered);
  CHECK(c6.all_agree());
}

TEST_CASE("alpha1+ characterization through G - N[v]") {
  // pendant-K4: core {0}, G - N[0] = K3, nonempty, avoidable pairs hold
  auto v = alpha1_g0_characterization(fixture(Fixture::kK4PlusE));
  REQUIRE(v.has_value());
  CHECK(v->p3_stable);
  // star K1,3: alpha = 3, xi = 3, not alpha1+ -> inapplicable
  CHECK(!alpha1_g0_characterization(Graph(4, {{0, 1}, {0, 2}, {0, 3}}))
             .has_value());
}
