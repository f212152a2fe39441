#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "astab/classifier.hpp"
#include "astab/enumerate.hpp"
#include "astab/report.hpp"
#include "astab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path, std::string& name) {
  if (path.empty() || path == "-") {
    name = "<stdin>";
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  name = path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<astab::Graph> parse_input(const std::string& text,
                                      const std::string& format) {
  std::vector<astab::Graph> graphs;
  if (format == "graph6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (line.empty()) continue;
      graphs.push_back(astab::parse_graph6(line));
    }
  } else {
    // edge list blocks separated by blank lines, each "n m" + m pairs
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&] {
      if (block.find_first_not_of(" \t\n\r") == std::string::npos) {
        block.clear();
        return;
      }
      graphs.push_back(astab::parse_edge_list(block));
      block.clear();
    };
    while (std::getline(in, line)) {
      std::string trimmed = line;
      while (!trimmed.empty() &&
             (trimmed.back() == '\r' || trimmed.back() == ' '))
        trimmed.pop_back();
      if (trimmed.empty()) {
        flush();
      } else {
        block += trimmed;
        block += '\n';
      }
    }
    flush();
  }
  return graphs;
}

int run_classify(const std::string& file, const std::string& format,
                 const std::string& output) {
  std::string name;
  std::string text;
  std::vector<astab::Graph> graphs;
  try {
    text = slurp(file, name);
    graphs = parse_input(text, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }

  if (output == "dot") {
    for (const auto& g : graphs) std::cout << astab::to_dot(g);
    return kExitOk;
  }

  astab::ReportDocument doc;
  doc.input_name = name;
  doc.input_hash = astab::content_hash(text);
  try {
    for (const auto& g : graphs)
      doc.graphs.emplace_back(astab::to_graph6(g), astab::classify_full(g));
  } catch (const astab::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  }

  if (output == "json")
    std::cout << astab::to_json(doc).dump(2) << '\n';
  else
    std::cout << astab::report_text(doc);
  return kExitOk;
}

int run_verify(std::vector<std::string> ids, int nmax, std::uint64_t seed,
               int threads, bool json) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (const auto& s : astab::suites()) ids.push_back(s.id);
  }
  bool any_violation = false;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& id : ids) {
    astab::VerificationOutcome out;
    try {
      out = astab::run_suite(id, nmax, seed, threads);
    } catch (const std::invalid_argument& e) {
      std::cerr << "input error: " << e.what() << '\n';
      return kExitInput;
    } catch (const astab::BudgetExceeded& e) {
      std::cerr << "budget exceeded: " << e.what() << '\n';
      return kExitBudget;
    }
    if (!out.ok()) any_violation = true;
    if (json)
      results.push_back(astab::to_json(out));
    else
      std::cout << astab::outcome_text(out);
  }
  if (json) std::cout << results.dump(2) << '\n';
  return any_violation ? kExitViolations : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability classification of small graphs"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "classify graphs from a file or stdin");
  std::string cl_format = "graph6", cl_output = "json", cl_file;
  classify->add_option("--format", cl_format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  classify->add_option("--output", cl_output, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  classify->add_option("file", cl_file, "input file, '-' or absent for stdin");

  // verify
  auto* verify = app.add_subcommand("verify", "run theorem suites");
  std::vector<std::string> vf_suites;
  int vf_nmax = 0, vf_threads = 0;
  std::uint64_t vf_seed = 1;
  bool vf_json = false;
  verify->add_option("--suite", vf_suites,
                     "suite ids (comma separated) or 'all'")
      ->delimiter(',');
  verify->add_option("--nmax", vf_nmax, "max order (0 = suite default)");
  verify->add_option("--seed", vf_seed, "seed for randomized populations");
  verify->add_option("--threads", vf_threads, "worker threads (0 = auto)");
  verify->add_flag("--json", vf_json, "emit JSON instead of text");
  bool vf_list = false;
  verify->add_flag("--list", vf_list, "list available suites and exit");

  // enum
  auto* enumerate = app.add_subcommand(
      "enum", "print every labeled graph on n vertices as graph6");
  int en_n = 0;
  bool en_canonical = false;
  enumerate->add_option("--n", en_n, "number of vertices")->required();
  enumerate->add_flag("--canonical", en_canonical,
                      "only canonically labeled representatives");

  // random
  auto* random = app.add_subcommand("random", "print seeded G(n,p) samples");
  int rd_n = 0, rd_count = 1;
  double rd_p = 0.5;
  std::uint64_t rd_seed = 1;
  random->add_option("--n", rd_n, "number of vertices")->required();
  random->add_option("--count", rd_count, "number of graphs");
  random->add_option("--p", rd_p, "edge probability");
  random->add_option("--seed", rd_seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return run_classify(cl_file, cl_format, cl_output);
    if (*verify) {
      if (vf_list) {
        for (const auto& s : astab::suites())
          std::cout << s.id << "  (default n<=" << s.default_nmax << ", max "
                    << s.max_nmax << ")  " << s.description << '\n';
        return kExitOk;
      }
      return run_verify(vf_suites, vf_nmax, vf_seed, vf_threads, vf_json);
    }
    if (*enumerate) {
      if (en_n < 2 || en_n > 8) {
        std::cerr << "input error: enum needs 2 <= n <= 8\n";
        return kExitInput;
      }
      if (en_canonical && en_n > 7) {
        std::cerr << "input error: --canonical needs n <= 7\n";
        return kExitInput;
      }
      const std::uint64_t total = astab::labeled_graph_count(en_n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (en_canonical && !astab::is_canonical_mask(en_n, mask)) continue;
        std::cout << astab::to_graph6(astab::graph_from_mask(en_n, mask))
                  << '\n';
      }
      return kExitOk;
    }
    if (*random) {
      for (const auto& g : astab::random_graphs(rd_n, rd_count, rd_p, rd_seed))
        std::cout << astab::to_graph6(g) << '\n';
      return kExitOk;
    }
  } catch (const astab::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
