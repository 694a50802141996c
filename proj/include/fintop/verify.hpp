#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/poset_io.hpp"

namespace fintop {

/// Claims the verify command can check by exhaustive enumeration.
enum class VerifyTarget {
  Min9,        // no homotopically trivial non-contractible class below 9 points
  Classify9,   // at 9 points exactly the bundled space and its opposite
  SphereMin,   // cores have >= 2h+2 points; equality only for sphere models
  Prop35,      // homotopically trivial and height <= 1 implies contractible
  Lemma31,     // cardinality gaps along comparabilities in cores
  Lemma32,     // trivial height-2 spaces have H2-free subspaces
  Lemma33,     // up-set/down-set intersection bound for trivial height-2 cores
  Lemma34,     // sampled contrapositive: suspension trivial => base trivial
  Prop22,      // relative-homology splitting over antichains
  Remark23,    // extremal-point facts, items 1-3
};

std::optional<VerifyTarget> parse_verify_target(std::string_view name);
std::string verify_target_name(VerifyTarget target);
std::vector<VerifyTarget> all_verify_targets();

struct VerifyOptions {
  int max_points = -1;  // -1 picks the target's default bound
  int jobs = 1;
  int tietze_budget = kDefaultTietzeBudget;
};

/// Deterministic verification report. Exit codes: 0 claim verified,
/// 1 counterexample found (artifacts hold it), 2 unknown verdicts
/// encountered. Wall time is observability only and is never part of
/// the report body.
struct VerifyOutcome {
  std::string target;
  int max_points = 0;
  int exit_code = 0;
  std::vector<std::pair<std::string, std::string>> stats;
  std::vector<PosetDocument> artifacts;
  double wall_seconds = 0.0;

  bool pass() const { return exit_code == 0; }
};

VerifyOutcome run_verify(VerifyTarget target, const VerifyOptions& options);

/// One-space diagnostic: size, height, Euler characteristic, extremal
/// points, beat points, core, reduced homology and the pi1 verdict.
std::string invariants_report(const PosetDocument& doc, int tietze_budget = kDefaultTietzeBudget);

}  // namespace fintop
