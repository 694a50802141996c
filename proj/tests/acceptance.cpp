// Acceptance suite: one line per criterion, exit status is the number of
// failed criteria. Criteria that are about the command-line contract run
// the installed binary; the rest drive the library directly.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/homology.hpp"
#include "fintop/poset_io.hpp"
#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"
#include "fintop/verify.hpp"
#include "support/oracles.hpp"

using namespace fintop;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string stat_line(const std::string& report_text, const std::string& key) {
  std::istringstream in(report_text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cli() { return std::string(FINTOP_CLI_PATH); }
std::string data_dir() { return std::string(FINTOP_DATA_DIR); }

// ---- criteria ----

void criterion_1_min9() {
  auto start = std::chrono::steady_clock::now();
  CommandResult r = run_command(cli() + " verify min9 --max-points 8 --jobs 2 2>/dev/null");
  double elapsed = seconds_since(start);
  bool pass = r.exit_code == 0 &&
              stat_line(r.output, "trivial non-contractible classes") == "0" &&
              stat_line(r.output, "unknown verdicts") == "0" &&
              stat_line(r.output, "total classes") == "19449" &&
              stat_line(r.output, "classes per size") == "1 2 5 16 63 318 2045 16999";
  std::ostringstream detail;
  detail << "exit " << r.exit_code << ", " << stat_line(r.output, "total classes")
         << " classes <= 8 points, " << elapsed << " s";
  report(1, pass, "no homotopically trivial non-contractible space below 9 points", detail.str());
}

std::string criterion_2_classify9() {
  auto start = std::chrono::steady_clock::now();
  CommandResult r = run_command(cli() + " verify classify9 --jobs 1 2>/dev/null");
  double elapsed = seconds_since(start);

  PosetDocument w9_file = load_poset_file(data_dir() + "/w9.poset");
  PosetDocument w9op_file = load_poset_file(data_dir() + "/w9op.poset");
  std::vector<std::string> expected = {canonical_form(w9_file.poset).hex(),
                                       canonical_form(w9op_file.poset).hex()};
  std::sort(expected.begin(), expected.end());
  std::vector<std::string> got = {stat_line(r.output, "class 1 form"),
                                  stat_line(r.output, "class 2 form")};
  std::sort(got.begin(), got.end());

  bool pass = r.exit_code == 0 &&
              stat_line(r.output, "trivial non-contractible classes") == "2" &&
              stat_line(r.output, "unknown verdicts") == "0" &&
              stat_line(r.output, "classes per size") == "1 2 5 16 63 318 2045 16999 183231" &&
              got == expected &&
              canonical_form(w9_file.poset) != canonical_form(w9op_file.poset);
  std::ostringstream detail;
  detail << "exit " << r.exit_code << ", cores per size "
         << stat_line(r.output, "connected cores per size") << ", " << elapsed << " s";
  report(2, pass, "exactly the bundled nine-point space and its opposite at 9 points",
         detail.str());
  return r.output;
}

void criterion_3_sphere_min() {
  VerifyOptions o;
  o.max_points = 9;
  o.jobs = 2;
  VerifyOutcome outcome = run_verify(VerifyTarget::SphereMin, o);
  bool pass = outcome.pass();
  for (int size : {4, 6, 8}) {
    std::string key = "equality classes at size " + std::to_string(size);
    bool seen = false;
    for (const auto& [k, v] : outcome.stats)
      if (k == key) {
        seen = true;
        if (v != "1") pass = false;
      }
    if (!seen) pass = false;
  }
  report(3, pass, "cores hold at least 2h+2 points; equality only for the sphere models",
         "exit " + std::to_string(outcome.exit_code));
}

void criterion_4_figure_space() {
  FinitePoset p = w9();
  bool pass = p.chain_count(0) == 9 && p.chain_count(1) == 22 && p.chain_count(2) == 14 &&
              p.euler_characteristic() == 1;
  pass = pass && find_beat_point(p) == -1;
  CoreResult c = core(p);
  pass = pass && c.core.size() == 9 && c.removed.empty() && !is_contractible(p);
  pass = pass && homology(order_complex(p), true).all_trivial();
  TrivialityResult verdict = is_homotopically_trivial(p);
  pass = pass && verdict.verdict == Verdict::Trivial &&
         verdict.route == TrivialityRoute::Collapse && verdict.collapse.has_value() &&
         replay_collapse(order_complex(p), *verdict.collapse);
  PosetDocument bundled = load_poset_file(data_dir() + "/w9.poset");
  pass = pass && bundled.poset == p;
  report(4, pass, "figure space: chi = 9-22+14 = 1, no beat points, acyclic, collapse certificate",
         verdict.collapse ? std::to_string(verdict.collapse->steps.size()) + " collapse steps"
                          : "no certificate");
}

void criterion_5_splitting() {
  VerifyOptions o;
  o.max_points = 6;
  o.jobs = 2;
  VerifyOutcome outcome = run_verify(VerifyTarget::Prop22, o);
  std::string checked;
  for (const auto& [k, v] : outcome.stats)
    if (k == "antichain pairs checked") checked = v;
  report(5, outcome.pass(), "relative-homology splitting over every antichain of <= 6 points",
         checked + " pairs, exit " + std::to_string(outcome.exit_code));
}

void criterion_6_lemma_suite() {
  struct Item {
    VerifyTarget target;
    int max_points;
  };
  const std::vector<Item> items = {{VerifyTarget::Lemma31, 8},
                                   {VerifyTarget::Lemma32, 6},
                                   {VerifyTarget::Lemma33, 9},
                                   {VerifyTarget::Prop35, 9},
                                   {VerifyTarget::Remark23, 8},
                                   {VerifyTarget::Lemma34, 9}};
  bool pass = true;
  std::ostringstream detail;
  for (const Item& item : items) {
    VerifyOptions o;
    o.max_points = item.max_points;
    o.jobs = 2;
    VerifyOutcome outcome = run_verify(item.target, o);
    if (!outcome.pass()) pass = false;
    if (item.target == VerifyTarget::Lemma32) {
      for (const auto& [k, v] : outcome.stats)
        if (k == "subspaces checked" && std::stoull(v) < 1022) pass = false;
    }
    detail << verify_target_name(item.target) << "=" << outcome.exit_code << " ";
  }
  report(6, pass, "lemma suite over the enumerated ranges, zero failures", detail.str());
}

void criterion_7_cross_checks() {
  bool euler_ok = true, abelian_ok = true, boundary_ok = true;
  std::uint64_t complexes = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_posets(n, {}, [&](const FinitePoset& p) {
      OrderComplex k = order_complex(p);
      ++complexes;
      if (homology(k, false).euler_characteristic() != p.euler_characteristic()) euler_ok = false;
      if (!boundaries_compose_to_zero(k)) boundary_ok = false;
      if (p.is_connected() &&
          !(abelianization(edge_path_presentation(k, 0)) == homology(k, true).at(1)))
        abelian_ok = false;
    });
  }

  bool snf_ok = true;
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<long long>(rng() % 19) - 9;
    if (smith_normal_form(m).diagonal != testing::elementary_divisors_by_minors(m)) snf_ok = false;
  }
  bool pass = euler_ok && abelian_ok && boundary_ok && snf_ok;
  std::ostringstream detail;
  detail << complexes << " complexes <= 7 points, 1000 random matrices; euler=" << euler_ok
         << " abelianization=" << abelian_ok << " boundary=" << boundary_ok << " snf=" << snf_ok;
  report(7, pass, "Euler-Poincare, abelianization vs H1, boundary squares, SNF oracle",
         detail.str());
}

void criterion_8_determinism(const std::string& single_worker_output) {
  CommandResult many = run_command(cli() + " verify classify9 --jobs 8 2>/dev/null");
  bool pass = many.exit_code == 0 && many.output == single_worker_output;
  report(8, pass, "classify9 reports are byte-identical with 1 and 8 workers",
         pass ? "" : "outputs differ");
}

}  // namespace

int main() {
  std::cout << "acceptance suite" << std::endl;
  criterion_1_min9();
  std::string classify9_output = criterion_2_classify9();
  criterion_3_sphere_min();
  criterion_4_figure_space();
  criterion_5_splitting();
  criterion_6_lemma_suite();
  criterion_7_cross_checks();
  criterion_8_determinism(classify9_output);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
