#pragma once

#include <optional>
#include <vector>

#include "fintop/complex.hpp"
#include "fintop/homology.hpp"
#include "fintop/poset.hpp"

namespace fintop {

inline constexpr int kDefaultTietzeBudget = 10000;

/// Finite presentation of a group. Letters are signed 1-based generator
/// indices: +(g+1) for generator g, -(g+1) for its inverse. Relators are
/// kept freely and cyclically reduced; generators may be retired by
/// Tietze moves, tracked in `alive`.
struct GroupPresentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
  std::vector<bool> alive;

  int live_generators() const;
  static std::vector<int> free_reduce(std::vector<int> word);
  static std::vector<int> cyclic_reduce(std::vector<int> word);
  static std::vector<int> invert(const std::vector<int>& word);
};

/// Edge-path group of the 2-skeleton: generators are the non-tree edges
/// of a breadth-first spanning tree from the basepoint, one relator per
/// triangle. Throws std::invalid_argument when the 1-skeleton is
/// disconnected.
GroupPresentation edge_path_presentation(const OrderComplex& k, int basepoint);

/// Exponent-sum matrix of the presentation brought to invariant factors;
/// equals H1 of the complex the presentation came from.
AbelianGroup abelianization(const GroupPresentation& p);

struct CollapseStep {
  std::vector<int> free_face;
  std::vector<int> coface;
};

/// Replayable witness that a complex collapses to one vertex.
struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  int final_vertex = -1;
};

/// Greedy elementary collapses, free faces taken in (dimension,
/// lexicographic) order. Success implies the complex is contractible.
std::optional<CollapseCertificate> try_collapse(const OrderComplex& k);

/// Audits a certificate against the complex it claims to collapse.
bool replay_collapse(const OrderComplex& k, const CollapseCertificate& cert);

struct TietzeStep {
  enum class Kind { DropEmptyRelator, EliminateGenerator, ShortenRelator };
  Kind kind;
  int relator = -1;
  int generator = -1;  // EliminateGenerator
  // ShortenRelator: replaces relator[target] using relator `relator`
  // rotated by `rotation`, inverted when `inverted`, matching `overlap`
  // letters at `position`.
  int target = -1;
  int rotation = 0;
  bool inverted = false;
  int position = 0;
  int overlap = 0;
};

/// Replayable trace from a presentation to the empty one.
struct TietzeTrace {
  GroupPresentation initial;
  std::vector<TietzeStep> steps;
};

/// Audits a trace: re-applies every step, checking its preconditions,
/// and confirms no live generator survives.
bool replay_tietze(const TietzeTrace& trace);

struct TrivialityResult;

/// Bounded Tietze simplification: drops empty relators, eliminates
/// once-occurring generators (shortest relator first) and shortens
/// relators against each other by majority overlaps. Trivial when no
/// generator survives, Unknown when the budget runs out or no move
/// applies.
TrivialityResult tietze_trivialize(const GroupPresentation& initial, int budget);

enum class Verdict { Trivial, Nontrivial, Unknown };

enum class TrivialityRoute { None, Contractible, Collapse, Tietze, EmptyPresentation, Homology };

/// Verdict plus its certificate: Nontrivial always carries a non-zero
/// homology witness, Trivial a replayable derivation.
struct TrivialityResult {
  Verdict verdict = Verdict::Unknown;
  TrivialityRoute route = TrivialityRoute::None;
  int witness_degree = -1;
  AbelianGroup witness;
  std::optional<CollapseCertificate> collapse;
  std::optional<TietzeTrace> tietze;

  bool trivial() const { return verdict == Verdict::Trivial; }
};

/// Fundamental-group triviality for a connected complex, decided by the
/// pipeline: non-zero H1 refutes; a full collapse certifies; otherwise
/// Tietze simplification within the step budget, Unknown when it runs
/// out. Unknown is a value, not an error.
TrivialityResult decide_trivial_pi1(const OrderComplex& k, int budget = kDefaultTietzeBudget);

/// Weak contractibility via acyclicity plus simple connectivity:
/// Trivial iff all reduced homology of the core vanishes and
/// decide_trivial_pi1 certifies the fundamental group; contractible
/// spaces short-circuit.
TrivialityResult is_homotopically_trivial(const FinitePoset& x, int budget = kDefaultTietzeBudget);

}  // namespace fintop
