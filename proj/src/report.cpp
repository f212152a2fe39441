#include "astab/report.hpp"

#include <cstdint>
#include <sstream>

namespace astab {

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

namespace {

nlohmann::json edge_json(const Edge& e) {
  return nlohmann::json::array({e.first, e.second});
}

nlohmann::json pair_json(const EdgePair& p) {
  return nlohmann::json::array({edge_json(p.e1), edge_json(p.e2)});
}

nlohmann::json graph_record(const std::string& g6, const StabilityReport& r) {
  nlohmann::json witnesses = nlohmann::json::object();
  witnesses["alpha_plus"] =
      r.alpha_plus_witness ? edge_json(*r.alpha_plus_witness)
                           : nlohmann::json();
  witnesses["p3_plus"] =
      r.p3_witness ? pair_json(*r.p3_witness) : nlohmann::json();
  witnesses["plus_plus"] =
      r.plus_plus_witness ? pair_json(*r.plus_plus_witness) : nlohmann::json();

  nlohmann::json fast = nlohmann::json::object();
  for (const auto& [flag, how] : r.fast_paths) fast[flag] = how;

  return nlohmann::json{
      {"graph6", g6},
      {"alpha", r.alpha},
      {"mu", r.mu},
      {"xi", r.xi},
      {"ke", r.ke},
      {"plus", to_string(r.plus)},
      {"p3_plus", r.p3_plus},
      {"plus_plus", r.plus_plus},
      {"witnesses", witnesses},
      {"fast_paths", fast},
  };
}

}  // namespace

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json graphs = nlohmann::json::array();
  int n_plus = 0, n_p3 = 0, n_pp = 0, n_ke = 0;
  for (const auto& [g6, r] : doc.graphs) {
    graphs.push_back(graph_record(g6, r));
    if (r.plus != PlusClass::kNotPlus) ++n_plus;
    if (r.p3_plus) ++n_p3;
    if (r.plus_plus) ++n_pp;
    if (r.ke) ++n_ke;
  }
  return nlohmann::json{
      {"version", doc.version},
      {"input", nlohmann::json{{"name", doc.input_name},
                               {"hash", doc.input_hash}}},
      {"graphs", graphs},
      {"summary",
       nlohmann::json{{"total", doc.graphs.size()},
                      {"alpha_plus_stable", n_plus},
                      {"p3_plus_stable", n_p3},
                      {"plus_plus_stable", n_pp},
                      {"koenig_egervary", n_ke}}},
  };
}

nlohmann::json to_json(const VerificationOutcome& outcome) {
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : outcome.violations)
    viols.push_back(nlohmann::json{{"graph6", v.graph6}, {"detail", v.detail}});
  return nlohmann::json{
      {"theorem_id", outcome.theorem_id},
      {"population", outcome.population},
      {"checked", outcome.checked},
      {"violation_count", outcome.violation_count},
      {"violations", viols},
  };
}

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

std::string report_text(const ReportDocument& doc) {
  std::ostringstream out;
  for (const auto& [g6, r] : doc.graphs) {
    out << g6 << "  alpha=" << r.alpha << " mu=" << r.mu << " xi=" << r.xi
        << " ke=" << (r.ke ? "yes" : "no") << " plus=" << to_string(r.plus)
        << " p3_plus=" << (r.p3_plus ? "yes" : "no")
        << " plus_plus=" << (r.plus_plus ? "yes" : "no");
    if (r.alpha_plus_witness)
      out << " alpha_drop=" << edge_text(*r.alpha_plus_witness);
    if (r.p3_witness)
      out << " p3_drop=" << edge_text(r.p3_witness->e1)
          << edge_text(r.p3_witness->e2);
    if (r.plus_plus_witness)
      out << " pp_drop=" << edge_text(r.plus_plus_witness->e1)
          << edge_text(r.plus_plus_witness->e2);
    out << '\n';
  }
  return out.str();
}

std::string outcome_text(const VerificationOutcome& outcome) {
  std::ostringstream out;
  out << outcome.theorem_id << ": " << (outcome.ok() ? "ok" : "FAILED")
      << "  checked=" << outcome.checked
      << " violations=" << outcome.violation_count << "  ["
      << outcome.population << "]\n";
  for (const auto& v : outcome.violations)
    out << "  " << v.graph6 << "  " << v.detail << '\n';
  return out.str();
}

}  // namespace astab
