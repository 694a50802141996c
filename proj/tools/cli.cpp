// Command-line driver over the library: space diagnostics, exhaustive
// verification of the classification results, enumeration, and poset file
// utilities.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fintop/enumerate.hpp"
#include "fintop/poset_io.hpp"
#include "fintop/verify.hpp"

namespace {

constexpr int kUsageExit = 64;
constexpr int kSchemaVersion = 1;

int default_jobs() {
  if (const char* env = std::getenv("FINTOP_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string render_text(const fintop::VerifyOutcome& outcome) {
  std::string out = "verify " + outcome.target + "\n";
  out += "max points: " + std::to_string(outcome.max_points) + "\n";
  for (const auto& [key, value] : outcome.stats) out += key + ": " + value + "\n";
  for (const auto& doc : outcome.artifacts) {
    out += "-- " + doc.name + " --\n";
    out += fintop::serialize_poset(doc);
  }
  out += std::string("result: ") +
         (outcome.exit_code == 0 ? "PASS" : outcome.exit_code == 1 ? "COUNTEREXAMPLE" : "UNKNOWN") +
         "\n";
  return out;
}

std::string render_structured(const fintop::VerifyOutcome& outcome) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  j["target"] = outcome.target;
  j["max_points"] = outcome.max_points;
  nlohmann::ordered_json stats;
  for (const auto& [key, value] : outcome.stats) stats[key] = value;
  j["stats"] = stats;
  j["artifacts"] = nlohmann::ordered_json::array();
  for (const auto& doc : outcome.artifacts) {
    nlohmann::ordered_json a;
    a["name"] = doc.name;
    a["points"] = doc.poset.size();
    a["covers"] = nlohmann::ordered_json::array();
    for (auto [lo, hi] : doc.poset.cover_pairs()) a["covers"].push_back({lo, hi});
    j["artifacts"].push_back(a);
  }
  j["result"] =
      outcome.exit_code == 0 ? "pass" : outcome.exit_code == 1 ? "counterexample" : "unknown";
  j["exit_code"] = outcome.exit_code;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite T0-spaces as posets: cores, homology, pi1 and exhaustive verification"};
  app.require_subcommand(1);

  // invariants
  std::string invariants_file;
  int invariants_budget = fintop::kDefaultTietzeBudget;
  CLI::App* invariants = app.add_subcommand("invariants", "print the invariants of a poset file");
  invariants->add_option("file", invariants_file, "poset file")->required();
  invariants->add_option("--budget", invariants_budget, "pi1 simplification step budget");

  // verify
  std::string verify_target;
  fintop::VerifyOptions verify_options;
  verify_options.jobs = default_jobs();
  std::string verify_format = "text";
  std::string verify_output;
  CLI::App* verify = app.add_subcommand("verify", "verify a classification claim exhaustively");
  verify->add_option("target", verify_target,
                     "one of: min9 classify9 sphere-min prop35 lemma31 lemma32 lemma33 "
                     "lemma34 prop22 remark23")
      ->required();
  verify->add_option("--max-points", verify_options.max_points, "enumeration bound");
  verify->add_option("--jobs", verify_options.jobs, "worker count (default: FINTOP_JOBS or cores)");
  verify->add_option("--budget", verify_options.tietze_budget, "pi1 simplification step budget");
  verify->add_option("--format", verify_format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  verify->add_option("--output", verify_output, "write the report to a file");

  // enumerate
  int enum_points = 0;
  fintop::EnumerationFilter enum_filter;
  bool enum_count_only = false;
  int enum_jobs = default_jobs();
  CLI::App* enumerate = app.add_subcommand("enumerate", "stream unlabeled posets of a given size");
  enumerate->add_option("points", enum_points, "point count")->required();
  enumerate->add_flag("--connected", enum_filter.connected_only, "connected classes only");
  enumerate->add_flag("--cores", enum_filter.cores_only, "beat-point-free classes only");
  enumerate->add_option("--min-height", enum_filter.min_height, "minimum height");
  enumerate->add_option("--max-height", enum_filter.max_height, "maximum height");
  enumerate->add_option("--max-maximal", enum_filter.max_maximal, "bound on maximal points");
  enumerate->add_option("--max-minimal", enum_filter.max_minimal, "bound on minimal points");
  enumerate->add_option("--max-mid", enum_filter.max_mid, "bound on mid points");
  enumerate->add_flag("--count-only", enum_count_only, "print only the class count");
  enumerate->add_option("--jobs", enum_jobs, "worker count");

  // export-dot
  std::string dot_file, dot_output;
  CLI::App* dot = app.add_subcommand("export-dot", "Hasse diagram of a poset file as DOT text");
  dot->add_option("file", dot_file, "poset file")->required();
  dot->add_option("--output", dot_output, "write to a file");

  // suspend
  std::string suspend_file, suspend_output;
  int suspend_times = 1;
  CLI::App* suspend = app.add_subcommand("suspend", "non-Hausdorff suspension of a poset file");
  suspend->add_option("file", suspend_file, "poset file")->required();
  suspend->add_option("-k,--times", suspend_times, "number of iterations")->check(CLI::NonNegativeNumber);
  suspend->add_option("--output", suspend_output, "write to a file");

  // opposite
  std::string opposite_file, opposite_output;
  CLI::App* opposite = app.add_subcommand("opposite", "inverse order of a poset file");
  opposite->add_option("file", opposite_file, "poset file")->required();
  opposite->add_option("--output", opposite_output, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    if (invariants->parsed()) {
      std::cout << fintop::invariants_report(fintop::load_poset_file(invariants_file),
                                             invariants_budget);
      return 0;
    }
    if (verify->parsed()) {
      auto target = fintop::parse_verify_target(verify_target);
      if (!target) {
        std::cerr << "unknown verify target: " << verify_target << "\n";
        return kUsageExit;
      }
      if (verify_options.max_points != -1 &&
          (verify_options.max_points < 1 || verify_options.max_points > fintop::kMaxEnumerationPoints)) {
        std::cerr << "max points must be in 1.." << fintop::kMaxEnumerationPoints << "\n";
        return kUsageExit;
      }
      if (verify_options.jobs < 1 || verify_options.tietze_budget < 0) {
        std::cerr << "jobs must be >= 1 and budget >= 0\n";
        return kUsageExit;
      }
      fintop::VerifyOutcome outcome = fintop::run_verify(*target, verify_options);
      write_output(verify_format == "text" ? render_text(outcome) : render_structured(outcome),
                   verify_output);
      std::cerr << "wall time: " << outcome.wall_seconds << " s\n";
      return outcome.exit_code;
    }
    if (enumerate->parsed()) {
      std::uint64_t index = 0;
      auto sink = [&](const fintop::FinitePoset& p) {
        fintop::PosetDocument doc;
        doc.name = "n" + std::to_string(enum_points) + "-" + std::to_string(++index);
        doc.poset = p;
        std::cout << fintop::serialize_poset(doc) << "\n";
      };
      std::uint64_t count = fintop::enumerate_posets(
          enum_points, enum_filter, enum_count_only ? nullptr : std::function<void(const fintop::FinitePoset&)>(sink),
          enum_jobs);
      if (enum_count_only) std::cout << count << "\n";
      else std::cerr << "classes: " << count << "\n";
      return 0;
    }
    if (dot->parsed()) {
      write_output(fintop::export_dot(fintop::load_poset_file(dot_file)), dot_output);
      return 0;
    }
    if (suspend->parsed()) {
      fintop::PosetDocument doc = fintop::load_poset_file(suspend_file);
      for (int i = 0; i < suspend_times; ++i) doc.poset = doc.poset.nh_suspension();
      write_output(fintop::serialize_poset(doc), suspend_output);
      return 0;
    }
    if (opposite->parsed()) {
      fintop::PosetDocument doc = fintop::load_poset_file(opposite_file);
      doc.poset = doc.poset.opposite();
      write_output(fintop::serialize_poset(doc), opposite_output);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;  // internal failure
  }
  return kUsageExit;
}
