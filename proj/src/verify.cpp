#include "fintop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "fintop/homology.hpp"
#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"

namespace fintop {

namespace {

constexpr std::size_t kMaxArtifacts = 4;

const std::map<std::string, VerifyTarget, std::less<>>& target_table() {
  static const std::map<std::string, VerifyTarget, std::less<>> table = {
      {"min9", VerifyTarget::Min9},           {"classify9", VerifyTarget::Classify9},
      {"sphere-min", VerifyTarget::SphereMin}, {"prop35", VerifyTarget::Prop35},
      {"lemma31", VerifyTarget::Lemma31},      {"lemma32", VerifyTarget::Lemma32},
      {"lemma33", VerifyTarget::Lemma33},      {"lemma34", VerifyTarget::Lemma34},
      {"prop22", VerifyTarget::Prop22},        {"remark23", VerifyTarget::Remark23},
  };
  return table;
}

std::string join_counts(const std::vector<std::uint64_t>& per_size) {
  std::string out;
  for (std::size_t s = 1; s < per_size.size(); ++s) {
    if (!out.empty()) out += " ";
    out += std::to_string(per_size[s]);
  }
  return out;
}

std::string point_list(PointSet s) {
  if (s.empty()) return "none";
  std::string out;
  for (int p : s) {
    if (!out.empty()) out += " ";
    out += std::to_string(p);
  }
  return out;
}

PosetDocument make_doc(const FinitePoset& p, const std::string& name) {
  PosetDocument doc;
  doc.name = name;
  doc.poset = p;
  return doc;
}

void add_artifact(VerifyOutcome& outcome, const FinitePoset& p, const std::string& name) {
  if (outcome.artifacts.size() < kMaxArtifacts)
    outcome.artifacts.push_back(make_doc(p, name));
}

// Every verification scan is a fold over the generation tree: the serial
// prefix lands in shard 0, each parallel seed subtree in its own shard.
template <typename Shard, typename Visit>
std::vector<Shard> scan(int max_points, int jobs, int prune_height_above, Visit visit) {
  detail::WalkPlan plan = detail::plan_walk(max_points, prune_height_above);
  std::vector<Shard> shards(plan.seeds.size() + 1);
  for (const FinitePoset& p : plan.prefix) visit(p, shards[0]);
  detail::run_shards(plan, jobs,
                     [&](const FinitePoset& p, int shard) { visit(p, shards[shard + 1]); });
  return shards;
}

std::string route_text(const TrivialityResult& r) {
  switch (r.route) {
    case TrivialityRoute::Contractible: return "contractible core";
    case TrivialityRoute::Collapse:
      return "collapse certificate, " + std::to_string(r.collapse ? r.collapse->steps.size() : 0) +
             " steps";
    case TrivialityRoute::Tietze:
      return "tietze trace, " + std::to_string(r.tietze ? r.tietze->steps.size() : 0) + " steps";
    case TrivialityRoute::EmptyPresentation: return "empty presentation";
    case TrivialityRoute::Homology:
      return "H" + std::to_string(r.witness_degree) + " = " + r.witness.to_string();
    case TrivialityRoute::None: break;
  }
  return "none";
}

std::string verdict_text(const TrivialityResult& r) {
  switch (r.verdict) {
    case Verdict::Trivial: return "trivial (" + route_text(r) + ")";
    case Verdict::Nontrivial: return "nontrivial (" + route_text(r) + ")";
    case Verdict::Unknown: return "unknown (budget exhausted)";
  }
  return "unknown";
}

void finish(VerifyOutcome& outcome, std::uint64_t failures, std::uint64_t unknowns) {
  outcome.stats.emplace_back("failures", std::to_string(failures));
  outcome.stats.emplace_back("unknown verdicts", std::to_string(unknowns));
  outcome.exit_code = failures > 0 ? 1 : (unknowns > 0 ? 2 : 0);
}

VerifyOutcome classification_outcome(VerifyTarget target, const VerifyOptions& o, int default_max) {
  int max = o.max_points == -1 ? default_max : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(target);
  outcome.max_points = max;
  ClassifyReport report = classify(max, o.jobs, o.tietze_budget, true);
  outcome.stats.emplace_back("classes per size", join_counts(report.classes_per_size));
  outcome.stats.emplace_back("total classes", std::to_string(report.total_classes()));
  outcome.stats.emplace_back("connected cores per size",
                             join_counts(report.connected_cores_per_size));
  outcome.stats.emplace_back("total connected cores",
                             std::to_string(report.total_connected_cores()));
  outcome.stats.emplace_back("trivial non-contractible classes",
                             std::to_string(report.trivial_non_contractible.size()));
  for (std::size_t i = 0; i < report.trivial_non_contractible.size(); ++i) {
    const ClassifyFinding& f = report.trivial_non_contractible[i];
    std::string tag = "class " + std::to_string(i + 1);
    outcome.stats.emplace_back(tag + " points", std::to_string(f.points));
    outcome.stats.emplace_back(tag + " form", f.form.hex());
    add_artifact(outcome, f.representative, "trivial-non-contractible-" + std::to_string(i + 1));
  }

  std::uint64_t failures = 0;
  if (target == VerifyTarget::Min9) {
    failures = report.trivial_non_contractible.size();
  } else {
    std::vector<CanonicalForm> expected;
    if (max >= 9) {
      expected.push_back(canonical_form(w9()));
      expected.push_back(canonical_form(w9_opposite()));
      std::sort(expected.begin(), expected.end());
    }
    std::vector<CanonicalForm> got;
    for (const auto& f : report.trivial_non_contractible) got.push_back(f.form);
    bool match = got == expected;
    outcome.stats.emplace_back("matches bundled classification", match ? "yes" : "no");
    failures = match ? 0 : std::max(got.size(), expected.size());
  }
  finish(outcome, failures, report.unknown.size());
  for (std::size_t i = 0; i < report.unknown.size(); ++i)
    add_artifact(outcome, report.unknown[i].representative, "unknown-" + std::to_string(i + 1));
  return outcome;
}

VerifyOutcome sphere_min_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 9 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::SphereMin);
  outcome.max_points = max;

  int top_height = std::max(0, (max - 2) / 2);
  std::vector<CanonicalForm> sphere_forms(top_height + 1);
  for (int h = 0; h <= top_height; ++h) sphere_forms[h] = canonical_form(sphere_model(h));

  struct Shard {
    std::uint64_t cores = 0;
    std::vector<std::uint64_t> equality;
    std::vector<FinitePoset> bound_violations;
    std::vector<FinitePoset> sphere_mismatches;
  };
  auto shards = scan<Shard>(max, o.jobs, -1, [&](const FinitePoset& p, Shard& shard) {
    if (p.size() < 2 || find_beat_point(p) != -1) return;
    ++shard.cores;
    int h = p.height();
    if (p.size() < 2 * h + 2) {
      shard.bound_violations.push_back(p);
      return;
    }
    if (p.size() == 2 * h + 2) {
      if (shard.equality.size() <= static_cast<std::size_t>(h)) shard.equality.resize(h + 1, 0);
      ++shard.equality[h];
      if (canonical_form(p) != sphere_forms[h]) shard.sphere_mismatches.push_back(p);
    }
  });

  std::uint64_t cores = 0, failures = 0;
  std::vector<std::uint64_t> equality(top_height + 1, 0);
  for (const Shard& shard : shards) {
    cores += shard.cores;
    for (std::size_t h = 0; h < shard.equality.size(); ++h) equality[h] += shard.equality[h];
    for (const auto& p : shard.bound_violations) {
      ++failures;
      add_artifact(outcome, p, "below-bound-" + std::to_string(failures));
    }
    for (const auto& p : shard.sphere_mismatches) {
      ++failures;
      add_artifact(outcome, p, "non-sphere-equality-" + std::to_string(failures));
    }
  }
  outcome.stats.emplace_back("cores checked (two or more points)", std::to_string(cores));
  for (int h = 0; h <= top_height; ++h) {
    outcome.stats.emplace_back("equality classes at size " + std::to_string(2 * h + 2),
                               std::to_string(equality[h]));
    if (2 * h + 2 <= max && equality[h] != 1) ++failures;
  }
  finish(outcome, failures, 0);
  return outcome;
}

VerifyOutcome prop35_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 9 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Prop35);
  outcome.max_points = max;
  struct Shard {
    std::uint64_t checked = 0, trivial = 0, unknown = 0;
    std::vector<FinitePoset> bad;
  };
  auto shards = scan<Shard>(max, o.jobs, /*prune_height_above=*/1,
                            [&](const FinitePoset& p, Shard& shard) {
                              ++shard.checked;
                              TrivialityResult v = is_homotopically_trivial(p, o.tietze_budget);
                              if (v.verdict == Verdict::Unknown) ++shard.unknown;
                              if (v.verdict != Verdict::Trivial) return;
                              ++shard.trivial;
                              if (v.route != TrivialityRoute::Contractible) shard.bad.push_back(p);
                            });
  std::uint64_t checked = 0, trivial = 0, unknown = 0, failures = 0;
  for (const Shard& shard : shards) {
    checked += shard.checked;
    trivial += shard.trivial;
    unknown += shard.unknown;
    for (const auto& p : shard.bad) {
      ++failures;
      add_artifact(outcome, p, "trivial-but-not-contractible-" + std::to_string(failures));
    }
  }
  outcome.stats.emplace_back("height <= 1 classes checked", std::to_string(checked));
  outcome.stats.emplace_back("homotopically trivial among them", std::to_string(trivial));
  finish(outcome, failures, unknown);
  return outcome;
}

VerifyOutcome lemma31_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 8 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Lemma31);
  outcome.max_points = max;
  struct Shard {
    std::uint64_t cores = 0, pairs = 0;
    std::vector<FinitePoset> bad;
  };
  auto shards = scan<Shard>(max, o.jobs, -1, [&](const FinitePoset& p, Shard& shard) {
    if (find_beat_point(p) != -1) return;
    ++shard.cores;
    for (int b = 0; b < p.size(); ++b)
      for (int a : p.up_set(b)) {
        ++shard.pairs;
        bool gap = p.down_set(a).count() >= p.down_set(b).count() + 2 &&
                   p.up_set(b).count() >= p.up_set(a).count() + 2;
        if (!gap) shard.bad.push_back(p);
      }
  });
  std::uint64_t cores = 0, pairs = 0, failures = 0;
  for (const Shard& shard : shards) {
    cores += shard.cores;
    pairs += shard.pairs;
    for (const auto& p : shard.bad) {
      ++failures;
      add_artifact(outcome, p, "gap-violation-" + std::to_string(failures));
    }
  }
  outcome.stats.emplace_back("cores checked", std::to_string(cores));
  outcome.stats.emplace_back("comparable pairs checked", std::to_string(pairs));
  finish(outcome, failures, 0);
  return outcome;
}

VerifyOutcome lemma32_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 6 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Lemma32);
  outcome.max_points = max;

  std::uint64_t qualified = 0, subspaces = 0, unknown = 0, failures = 0;
  std::vector<CanonicalForm> seen;
  auto check_space = [&](const FinitePoset& p, const std::string& label) {
    if (p.height() != 2) return;
    TrivialityResult v = is_homotopically_trivial(p, o.tietze_budget);
    if (v.verdict == Verdict::Unknown) {
      ++unknown;
      return;
    }
    if (v.verdict != Verdict::Trivial) return;
    CanonicalForm form = canonical_form(p);
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) return;
    seen.push_back(form);
    ++qualified;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
      ++subspaces;
      HomologyProfile h = reduced_subspace_homology(p, PointSet(mask));
      if (!h.at(2).trivial()) {
        ++failures;
        add_artifact(outcome, p, label + "-subspace-violation-" + std::to_string(failures));
      }
    }
  };

  // The two bundled nine-point spaces always participate; enumeration
  // adds every homotopically trivial height-2 class within the bound.
  check_space(w9(), "bundled-1");
  check_space(w9_opposite(), "bundled-2");
  auto shards = scan<std::vector<FinitePoset>>(
      max, 1, -1, [](const FinitePoset& p, std::vector<FinitePoset>& shard) { shard.push_back(p); });
  for (const auto& shard : shards)
    for (const auto& p : shard) check_space(p, "enumerated");

  outcome.stats.emplace_back("trivial height-2 spaces examined", std::to_string(qualified));
  outcome.stats.emplace_back("subspaces checked", std::to_string(subspaces));
  finish(outcome, failures, unknown);
  return outcome;
}

VerifyOutcome lemma33_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 9 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Lemma33);
  outcome.max_points = max;
  ClassifyReport report = classify(max, o.jobs, o.tietze_budget, true);
  std::uint64_t spaces = 0, pairs = 0, failures = 0;
  for (const ClassifyFinding& f : report.trivial_non_contractible) {
    const FinitePoset& p = f.representative;
    if (p.height() != 2) continue;
    ++spaces;
    PointSet mids = p.mid_points();
    for (int b : mids)
      for (int b2 : mids) {
        if (b2 <= b) continue;
        if ((p.up_set(b) & p.up_set(b2)).count() < 2) continue;
        ++pairs;
        if ((p.down_set(b) & p.down_set(b2)).count() > 1) {
          ++failures;
          add_artifact(outcome, p, "intersection-violation-" + std::to_string(failures));
        }
      }
  }
  outcome.stats.emplace_back("trivial height-2 cores found", std::to_string(spaces));
  outcome.stats.emplace_back("mid pairs with shared upper covers", std::to_string(pairs));
  finish(outcome, failures, report.unknown.size());
  return outcome;
}

VerifyOutcome lemma34_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 9 : o.max_points;
  int base_max = std::max(1, max - 2);
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Lemma34);
  outcome.max_points = max;
  struct Shard {
    std::uint64_t examined = 0, antecedent = 0, unknown = 0, pi1_undecided = 0;
    std::vector<FinitePoset> bad;
  };
  auto shards = scan<Shard>(base_max, o.jobs, -1, [&](const FinitePoset& p, Shard& shard) {
    if (!p.is_connected()) return;
    ++shard.examined;
    TrivialityResult suspension = is_homotopically_trivial(p.nh_suspension(), o.tietze_budget);
    if (suspension.verdict == Verdict::Unknown) {
      ++shard.unknown;
      return;
    }
    if (suspension.verdict != Verdict::Trivial) return;
    TrivialityResult base = is_homotopically_trivial(p, o.tietze_budget);
    if (base.verdict == Verdict::Unknown) {
      ++shard.unknown;
      return;
    }
    if (base.verdict == Verdict::Trivial) {
      ++shard.antecedent;
      return;
    }
    // Base is not trivial: the hypothesis needs pi1 not non-trivial
    // perfect, which a non-zero H1 certifies.
    AbelianGroup h1 = homology(order_complex(core(p).core), true).at(1);
    if (h1.trivial()) {
      ++shard.pi1_undecided;
      return;
    }
    ++shard.antecedent;
    shard.bad.push_back(p);
  });
  std::uint64_t examined = 0, antecedent = 0, unknown = 0, undecided = 0, failures = 0;
  for (const Shard& shard : shards) {
    examined += shard.examined;
    antecedent += shard.antecedent;
    unknown += shard.unknown;
    undecided += shard.pi1_undecided;
    for (const auto& p : shard.bad) {
      ++failures;
      add_artifact(outcome, p, "suspension-counterexample-" + std::to_string(failures));
    }
  }
  outcome.stats.emplace_back("connected bases examined", std::to_string(examined));
  outcome.stats.emplace_back("antecedent instances", std::to_string(antecedent));
  outcome.stats.emplace_back("hypothesis undecided", std::to_string(undecided));
  finish(outcome, failures, unknown);
  return outcome;
}

VerifyOutcome prop22_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 6 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Prop22);
  outcome.max_points = max;
  struct Shard {
    std::uint64_t posets = 0, antichains = 0;
    std::vector<std::pair<FinitePoset, std::uint64_t>> bad;
  };
  auto shards = scan<Shard>(max, o.jobs, -1, [&](const FinitePoset& p, Shard& shard) {
    ++shard.posets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
      PointSet d(mask);
      if (!is_antichain(p, d)) continue;
      ++shard.antichains;
      if (!check_antichain_splitting(p, d)) shard.bad.emplace_back(p, mask);
    }
  });
  std::uint64_t posets = 0, antichains = 0, failures = 0;
  for (const Shard& shard : shards) {
    posets += shard.posets;
    antichains += shard.antichains;
    for (const auto& [p, mask] : shard.bad) {
      ++failures;
      outcome.stats.emplace_back("violating antichain mask " + std::to_string(failures),
                                 std::to_string(mask));
      add_artifact(outcome, p, "splitting-violation-" + std::to_string(failures));
    }
  }
  outcome.stats.emplace_back("posets checked", std::to_string(posets));
  outcome.stats.emplace_back("antichain pairs checked", std::to_string(antichains));
  finish(outcome, failures, 0);
  return outcome;
}

VerifyOutcome remark23_outcome(const VerifyOptions& o) {
  int max = o.max_points == -1 ? 8 : o.max_points;
  VerifyOutcome outcome;
  outcome.target = verify_target_name(VerifyTarget::Remark23);
  outcome.max_points = max;
  CanonicalForm two_antichain = canonical_form(antichain(2));
  struct Shard {
    std::uint64_t connected = 0, cores = 0;
    std::vector<FinitePoset> bad1, bad2, bad3;
  };
  auto shards = scan<Shard>(max, o.jobs, -1, [&](const FinitePoset& p, Shard& shard) {
    PointSet mxl = p.maximal_points();
    PointSet mnl = p.minimal_points();
    if (p.size() >= 2 && p.is_connected()) {
      ++shard.connected;
      if (!(mxl & mnl).empty()) shard.bad1.push_back(p);
    }
    if (find_beat_point(p) != -1) return;
    ++shard.cores;
    for (int a = 0; a < p.size(); ++a) {
      if (!mxl.contains(a) && (p.up_set(a) & mxl).count() < 2) shard.bad2.push_back(p);
      if (!mnl.contains(a) && (p.down_set(a) & mnl).count() < 2) shard.bad2.push_back(p);
    }
    if (mxl.count() == 2) {
      PointSet base = p.all_points() - mxl;
      CanonicalForm actual = canonical_form(p);
      CanonicalForm expected =
          base.empty() ? two_antichain
                       : canonical_form(p.subspace(base).poset.nh_suspension());
      if (actual != expected) shard.bad3.push_back(p);
    }
  });
  std::uint64_t connected = 0, cores = 0, failures = 0;
  for (const Shard& shard : shards) {
    connected += shard.connected;
    cores += shard.cores;
    for (const auto& p : shard.bad1) {
      ++failures;
      add_artifact(outcome, p, "item1-violation-" + std::to_string(failures));
    }
    for (const auto& p : shard.bad2) {
      ++failures;
      add_artifact(outcome, p, "item2-violation-" + std::to_string(failures));
    }
    for (const auto& p : shard.bad3) {
      ++failures;
      add_artifact(outcome, p, "item3-violation-" + std::to_string(failures));
    }
  }
  outcome.stats.emplace_back("connected classes checked", std::to_string(connected));
  outcome.stats.emplace_back("cores checked", std::to_string(cores));
  finish(outcome, failures, 0);
  return outcome;
}

}  // namespace

std::optional<VerifyTarget> parse_verify_target(std::string_view name) {
  auto it = target_table().find(name);
  if (it == target_table().end()) return std::nullopt;
  return it->second;
}

std::string verify_target_name(VerifyTarget target) {
  for (const auto& [name, value] : target_table())
    if (value == target) return name;
  return "?";
}

std::vector<VerifyTarget> all_verify_targets() {
  std::vector<VerifyTarget> out;
  for (const auto& [name, value] : target_table()) out.push_back(value);
  return out;
}

VerifyOutcome run_verify(VerifyTarget target, const VerifyOptions& options) {
  auto start = std::chrono::steady_clock::now();
  VerifyOutcome outcome;
  switch (target) {
    case VerifyTarget::Min9: outcome = classification_outcome(target, options, 8); break;
    case VerifyTarget::Classify9: outcome = classification_outcome(target, options, 9); break;
    case VerifyTarget::SphereMin: outcome = sphere_min_outcome(options); break;
    case VerifyTarget::Prop35: outcome = prop35_outcome(options); break;
    case VerifyTarget::Lemma31: outcome = lemma31_outcome(options); break;
    case VerifyTarget::Lemma32: outcome = lemma32_outcome(options); break;
    case VerifyTarget::Lemma33: outcome = lemma33_outcome(options); break;
    case VerifyTarget::Lemma34: outcome = lemma34_outcome(options); break;
    case VerifyTarget::Prop22: outcome = prop22_outcome(options); break;
    case VerifyTarget::Remark23: outcome = remark23_outcome(options); break;
  }
  outcome.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

std::string invariants_report(const PosetDocument& doc, int tietze_budget) {
  const FinitePoset& x = doc.poset;
  std::ostringstream out;
  out << "poset: " << doc.name << "\n";
  out << "points: " << x.size() << "\n";
  out << "height: " << x.height() << "\n";
  out << "connected: " << (x.is_connected() ? "yes" : "no") << "\n";
  out << "maximal points: " << point_list(x.maximal_points()) << "\n";
  out << "minimal points: " << point_list(x.minimal_points()) << "\n";
  out << "mid points: " << point_list(x.mid_points()) << "\n";
  out << "chain counts:";
  for (int k = 0; k <= x.height(); ++k) out << " " << x.chain_count(k);
  out << "\n";
  out << "euler characteristic: " << x.euler_characteristic() << "\n";
  PointSet beats;
  for (int p = 0; p < x.size(); ++p)
    if (is_beat_point(x, p)) beats.add(p);
  out << "beat points: " << point_list(beats) << "\n";
  CoreResult c = core(x);
  out << "core size: " << c.core.size() << "\n";
  out << "contractible: " << (c.core.size() == 1 ? "yes" : "no") << "\n";
  HomologyProfile h = homology(order_complex(x), true);
  out << "reduced homology:";
  for (int k = 0; k <= std::max(h.top_degree(), 0); ++k) out << " H~" << k << " = " << h.at(k).to_string() << ";";
  out << "\n";
  TrivialityResult verdict = is_homotopically_trivial(x, tietze_budget);
  out << "homotopically trivial: " << verdict_text(verdict) << "\n";
  out << "canonical form: " << canonical_form(x).hex() << "\n";
  return out.str();
}

}  // namespace fintop
