#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fintop/canonical.hpp"
#include "fintop/pi1.hpp"
#include "fintop/poset.hpp"

namespace fintop {

/// Class filters for enumeration. `max_height` also prunes the
/// generation tree (adding maximal points never lowers height); all
/// other fields are post-filters on the emitted classes.
struct EnumerationFilter {
  bool connected_only = false;
  bool cores_only = false;
  int min_height = -1;
  int max_height = -1;
  int max_maximal = -1;
  int max_minimal = -1;
  int max_mid = -1;

  bool passes(const FinitePoset& x) const;
};

inline constexpr int kMaxEnumerationPoints = 10;

/// Streams one representative per isomorphism class of posets on exactly
/// n points that satisfy the filter, in a deterministic order that does
/// not depend on the worker count. Returns the number emitted.
std::uint64_t enumerate_posets(int n, const EnumerationFilter& filter,
                               const std::function<void(const FinitePoset&)>& sink, int jobs = 1);

/// Beat-point-free classes on exactly n points.
std::uint64_t enumerate_cores(int n, const std::function<void(const FinitePoset&)>& sink,
                              int jobs = 1);

struct ClassifyFinding {
  CanonicalForm form;
  FinitePoset representative;  // canonically labelled
  int points = 0;
};

/// Outcome of scanning every connected core up to a size bound for
/// homotopically trivial non-contractible classes.
struct ClassifyReport {
  int max_points = 0;
  int tietze_budget = kDefaultTietzeBudget;
  bool extremal_shortcut = true;
  std::vector<std::uint64_t> classes_per_size;          // index = point count
  std::vector<std::uint64_t> connected_cores_per_size;  // discovered values
  std::vector<ClassifyFinding> trivial_non_contractible;
  std::vector<ClassifyFinding> unknown;

  std::uint64_t total_classes() const;
  std::uint64_t total_connected_cores() const;
};

/// Enumerates every class on <= max_points points and decides weak
/// contractibility for each connected core. `extremal_shortcut` skips
/// the analysis of posets with a maximum or a minimum (contractible,
/// and never cores beyond one point); reports must not depend on it.
ClassifyReport classify(int max_points, int jobs = 1, int tietze_budget = kDefaultTietzeBudget,
                        bool extremal_shortcut = true);

namespace detail {

/// Serial prefix of the generation tree: every class of size <=
/// seed_level in generation order, plus the seed-level classes again as
/// shard roots for the parallel phase.
struct WalkPlan {
  int max_points = 0;
  int prune_height_above = -1;
  int seed_level = 0;
  std::vector<FinitePoset> prefix;
  std::vector<FinitePoset> seeds;
};

WalkPlan plan_walk(int max_points, int prune_height_above = -1);

/// Runs the shard subtrees on a worker pool: visit(poset, shard) is
/// called from worker threads for every class of size > seed_level, with
/// deterministic per-shard order. Callers keep one accumulator per shard
/// and fold in shard order.
void run_shards(const WalkPlan& plan, int jobs,
                const std::function<void(const FinitePoset&, int shard)>& visit);

/// Children of a parent under canonical augmentation: one poset per
/// extension orbit, restricted to those whose canonical deletion undoes
/// the extension. Exposed for the unit tests.
std::vector<FinitePoset> augment(const FinitePoset& parent);

}  // namespace detail

}  // namespace fintop
