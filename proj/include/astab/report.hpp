#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "astab/classifier.hpp"
#include "astab/verify.hpp"

namespace astab {

inline constexpr const char* kToolVersion = "1.0.0";

// FNV-1a over the raw input bytes, hex encoded; identifies the input in
// the report without shipping it.
std::string content_hash(std::string_view bytes);

struct ReportDocument {
  std::string version = kToolVersion;
  std::string input_name;  // file path or "<stdin>"
  std::string input_hash;
  std::vector<std::pair<std::string, StabilityReport>> graphs;  // graph6 key
};

nlohmann::json to_json(const ReportDocument& doc);
nlohmann::json to_json(const VerificationOutcome& outcome);

std::string report_text(const ReportDocument& doc);
std::string outcome_text(const VerificationOutcome& outcome);

}  // namespace astab
