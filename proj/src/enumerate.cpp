#include "fintop/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"

namespace fintop {

bool EnumerationFilter::passes(const FinitePoset& x) const {
  if (connected_only && !x.is_connected()) return false;
  if (cores_only && find_beat_point(x) != -1) return false;
  if (min_height != -1 || max_height != -1) {
    int h = x.height();
    if (min_height != -1 && h < min_height) return false;
    if (max_height != -1 && h > max_height) return false;
  }
  if (max_maximal != -1 && x.maximal_points().count() > max_maximal) return false;
  if (max_minimal != -1 && x.minimal_points().count() > max_minimal) return false;
  if (max_mid != -1 && x.mid_points().count() > max_mid) return false;
  return true;
}

namespace detail {

namespace {

std::uint64_t apply_perm(std::uint64_t mask, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  while (mask) {
    int b = __builtin_ctzll(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << perm[b];
  }
  return out;
}

}  // namespace

std::vector<FinitePoset> augment(const FinitePoset& parent) {
  int n = parent.size();
  CanonicalInfo parent_info = canonicalize(parent, /*collect_automorphisms=*/true);

  // Extension objects are the down-closed subsets, one per Aut(parent)
  // orbit (min-image representatives).
  std::vector<std::uint64_t> down_sets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::uint64_t rest = mask; rest && closed;) {
      int b = __builtin_ctzll(rest);
      rest &= rest - 1;
      closed = parent.down_set(b).bits() == (parent.down_set(b).bits() & mask);
    }
    if (!closed) continue;
    bool minimal_image = true;
    for (const auto& sigma : parent_info.automorphisms)
      if (apply_perm(mask, sigma) < mask) {
        minimal_image = false;
        break;
      }
    if (minimal_image) down_sets.push_back(mask);
  }

  std::vector<FinitePoset> children;
  for (std::uint64_t mask : down_sets) {
    FinitePoset child = FinitePoset::extend_with_maximum(parent, PointSet(mask));
    // Canonical deletion: the child survives only if undoing it removes
    // a point from the same orbit the deletion rule picks.
    CanonicalInfo info = canonicalize(child, /*collect_automorphisms=*/false);
    std::vector<int> position(child.size());
    for (int pos = 0; pos < child.size(); ++pos) position[info.canonical_order[pos]] = pos;
    int target = -1;
    for (int m : child.maximal_points())
      if (target == -1 || position[m] < position[target]) target = m;
    if (info.orbit[target] == info.orbit[n]) children.push_back(std::move(child));
  }
  return children;
}

namespace {

void expand(const FinitePoset& node, int max_points, int prune_height_above,
            const std::function<void(const FinitePoset&)>& emit) {
  if (node.size() >= max_points) return;
  for (const FinitePoset& child : augment(node)) {
    if (prune_height_above != -1 && child.height() > prune_height_above) continue;
    emit(child);
    expand(child, max_points, prune_height_above, emit);
  }
}

}  // namespace

WalkPlan plan_walk(int max_points, int prune_height_above) {
  if (max_points < 1 || max_points > kMaxEnumerationPoints)
    throw std::invalid_argument("enumeration supports 1.." +
                                std::to_string(kMaxEnumerationPoints) + " points");
  WalkPlan plan;
  plan.max_points = max_points;
  plan.prune_height_above = prune_height_above;
  plan.seed_level = std::min(max_points, 7);
  FinitePoset root = antichain(1);
  plan.prefix.push_back(root);
  if (plan.seed_level == 1) {
    if (max_points > 1) plan.seeds.push_back(root);
    return plan;
  }
  auto emit = [&](const FinitePoset& p) {
    plan.prefix.push_back(p);
    if (p.size() == plan.seed_level && max_points > plan.seed_level) plan.seeds.push_back(p);
  };
  expand(root, plan.seed_level, prune_height_above, emit);
  return plan;
}

void run_shards(const WalkPlan& plan, int jobs,
                const std::function<void(const FinitePoset&, int shard)>& visit) {
  if (plan.seeds.empty()) return;
  jobs = std::max(1, jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= plan.seeds.size() || failed.load()) return;
      try {
        expand(plan.seeds[i], plan.max_points, plan.prune_height_above,
               [&](const FinitePoset& p) { visit(p, static_cast<int>(i)); });
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

namespace {

// Shared driver: deterministic per-shard buffering, folded in shard order.
std::uint64_t enumerate_filtered(int n, const EnumerationFilter& filter,
                                 const std::function<void(const FinitePoset&)>& sink, int jobs) {
  detail::WalkPlan plan = detail::plan_walk(n, filter.max_height);
  std::uint64_t count = 0;
  for (const FinitePoset& p : plan.prefix) {
    if (p.size() != n || !filter.passes(p)) continue;
    ++count;
    if (sink) sink(p);
  }
  // Per-shard buffers keep the delivery order independent of scheduling;
  // counting alone skips the buffering.
  std::vector<std::vector<FinitePoset>> buffers(sink ? plan.seeds.size() : 0);
  std::vector<std::uint64_t> tallies(plan.seeds.size(), 0);
  detail::run_shards(plan, jobs, [&](const FinitePoset& p, int shard) {
    if (p.size() != n || !filter.passes(p)) return;
    if (sink) buffers[shard].push_back(p);
    else ++tallies[shard];
  });
  if (sink) {
    for (const auto& buffer : buffers) {
      count += buffer.size();
      for (const FinitePoset& p : buffer) sink(p);
    }
  } else {
    for (std::uint64_t t : tallies) count += t;
  }
  return count;
}

}  // namespace

std::uint64_t enumerate_posets(int n, const EnumerationFilter& filter,
                               const std::function<void(const FinitePoset&)>& sink, int jobs) {
  return enumerate_filtered(n, filter, sink, jobs);
}

std::uint64_t enumerate_cores(int n, const std::function<void(const FinitePoset&)>& sink, int jobs) {
  EnumerationFilter filter;
  filter.cores_only = true;
  return enumerate_filtered(n, filter, sink, jobs);
}

std::uint64_t ClassifyReport::total_classes() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : classes_per_size) total += c;
  return total;
}

std::uint64_t ClassifyReport::total_connected_cores() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : connected_cores_per_size) total += c;
  return total;
}

namespace {

struct ClassifyShard {
  std::vector<std::uint64_t> classes;
  std::vector<std::uint64_t> cores;
  std::vector<ClassifyFinding> findings;
  std::vector<ClassifyFinding> unknown;

  explicit ClassifyShard(int max_points)
      : classes(max_points + 1, 0), cores(max_points + 1, 0) {}
};

void classify_visit(const FinitePoset& p, ClassifyShard& shard, int budget, bool shortcut) {
  ++shard.classes[p.size()];
  if (shortcut && p.size() >= 2 &&
      (p.maximal_points().count() == 1 || p.minimal_points().count() == 1))
    return;  // has a maximum or minimum: contractible, and a beat point kills core-ness
  if (find_beat_point(p) != -1 || !p.is_connected()) return;
  ++shard.cores[p.size()];
  TrivialityResult verdict = is_homotopically_trivial(p, budget);
  if (verdict.verdict == Verdict::Nontrivial) return;
  if (verdict.verdict == Verdict::Trivial && p.size() == 1) return;  // the point is contractible
  CanonicalInfo info = canonicalize(p);
  ClassifyFinding finding{info.form, poset_from_canonical_form(info.form), p.size()};
  if (verdict.verdict == Verdict::Trivial) shard.findings.push_back(std::move(finding));
  else shard.unknown.push_back(std::move(finding));
}

}  // namespace

ClassifyReport classify(int max_points, int jobs, int tietze_budget, bool extremal_shortcut) {
  detail::WalkPlan plan = detail::plan_walk(max_points);
  ClassifyReport report;
  report.max_points = max_points;
  report.tietze_budget = tietze_budget;
  report.extremal_shortcut = extremal_shortcut;

  std::vector<ClassifyShard> shards;
  shards.reserve(plan.seeds.size() + 1);
  for (std::size_t i = 0; i < plan.seeds.size() + 1; ++i) shards.emplace_back(max_points);

  for (const FinitePoset& p : plan.prefix)
    classify_visit(p, shards[0], tietze_budget, extremal_shortcut);
  detail::run_shards(plan, jobs, [&](const FinitePoset& p, int shard) {
    classify_visit(p, shards[shard + 1], tietze_budget, extremal_shortcut);
  });

  report.classes_per_size.assign(max_points + 1, 0);
  report.connected_cores_per_size.assign(max_points + 1, 0);
  for (const ClassifyShard& shard : shards) {
    for (int s = 0; s <= max_points; ++s) {
      report.classes_per_size[s] += shard.classes[s];
      report.connected_cores_per_size[s] += shard.cores[s];
    }
    report.trivial_non_contractible.insert(report.trivial_non_contractible.end(),
                                           shard.findings.begin(), shard.findings.end());
    report.unknown.insert(report.unknown.end(), shard.unknown.begin(), shard.unknown.end());
  }
  auto by_form = [](const ClassifyFinding& a, const ClassifyFinding& b) { return a.form < b.form; };
  std::sort(report.trivial_non_contractible.begin(), report.trivial_non_contractible.end(), by_form);
  std::sort(report.unknown.begin(), report.unknown.end(), by_form);
  return report;
}

}  // namespace fintop
