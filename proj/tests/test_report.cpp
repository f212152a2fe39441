#include "doctest.h"

#include "astab/report.hpp"
#include "astab/verify.hpp"

using namespace astab;

TEST_CASE("classify report serialization") {
  ReportDocument doc;
  doc.input_name = "<stdin>";
  doc.input_hash = content_hash("Dhc\n");
  Graph g = fixture(Fixture::kG1);
  doc.graphs.emplace_back(to_graph6(g), classify_full(g));
  Graph h = fixture(Fixture::kG2);
  doc.graphs.emplace_back(to_graph6(h), classify_full(h));

  nlohmann::json j = to_json(doc);
  CHECK(j["version"] == kToolVersion);
  CHECK(j["input"]["name"] == "<stdin>");
  REQUIRE(j["graphs"].size() == 2);

  const auto& r1 = j["graphs"][0];
  CHECK(r1["graph6"] == to_graph6(g));
  CHECK(r1["alpha"] == 4);
  CHECK(r1["mu"] == 4);
  CHECK(r1["ke"] == true);
  CHECK(r1["plus_plus"] == false);
  CHECK(!r1["witnesses"]["plus_plus"].is_null());

  const auto& r2 = j["graphs"][1];
  CHECK(r2["alpha"] == 3);
  CHECK(r2["plus_plus"] == true);
  CHECK(r2["witnesses"]["plus_plus"].is_null());
  CHECK(r2["fast_paths"].contains("plus_plus"));

  CHECK(j["summary"]["total"] == 2);
  CHECK(j["summary"]["plus_plus_stable"] == 1);
  CHECK(j["summary"]["koenig_egervary"] == 2);

  // a witness pair in the record must replay: adding those edges drops alpha
  auto w = r1["witnesses"]["plus_plus"];
  Edge e1 = make_edge(w[0][0], w[0][1]);
  Edge e2 = make_edge(w[1][0], w[1][1]);
  Graph worse = (e1 == e2) ? g.with_edge(e1.first, e1.second)
                           : g.with_edges(make_edge_pair(e1, e2));
  CHECK(stability_number(worse) < 4);

  // text rendering mentions every graph
  std::string text = report_text(doc);
  CHECK(text.find(to_graph6(g)) != std::string::npos);
  CHECK(text.find(to_graph6(h)) != std::string::npos);
}

TEST_CASE("serialization round-trips losslessly") {
  ReportDocument doc;
  doc.input_name = "x";
  doc.input_hash = content_hash("x");
  Graph g = cycle_graph(5);
  doc.graphs.emplace_back(to_graph6(g), classify_full(g));
  nlohmann::json j = to_json(doc);
  nlohmann::json reparsed = nlohmann::json::parse(j.dump());
  CHECK(reparsed == j);
}

TEST_CASE("verification outcome serialization") {
  auto out = run_suite("cycle_parity", 8);
  CHECK(out.ok());
  nlohmann::json j = to_json(out);
  CHECK(j["theorem_id"] == "cycle_parity");
  CHECK(j["checked"] == 5);
  CHECK(j["violation_count"] == 0);
  CHECK(j["violations"].empty());
  std::string text = outcome_text(out);
  CHECK(text.find("cycle_parity") != std::string::npos);
  CHECK(text.find("ok") != std::string::npos);
}

TEST_CASE("content hash is stable and input-sensitive") {
  CHECK(content_hash("abc") == content_hash("abc"));
  CHECK(content_hash("abc") != content_hash("abd"));
}
