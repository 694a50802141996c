#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

// Points of a poset are dense indices 0..n-1; n is capped at the word
// width so every up-set/down-set is a single machine word.
inline constexpr int kMaxPoints = 64;

/// Subset of the points of an ambient poset, stored as a bit mask.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet single(int i) { return PointSet(std::uint64_t{1} << i); }
  static constexpr PointSet first_n(int n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  void add(int i) { bits_ |= std::uint64_t{1} << i; }
  void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  /// Lowest member, or -1 when empty.
  int first() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  bool operator==(const PointSet&) const = default;

  bool is_subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return __builtin_ctzll(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

/// A finite T0-space: points 0..n-1 with a strict partial order stored
/// closed under transitivity, mirrored as per-point down-sets and up-sets.
class FinitePoset {
 public:
  /// Zero-point placeholder; every constructed space has 1..64 points.
  FinitePoset() = default;

  /// Builds the poset generated by Hasse-diagram pairs (i,j), each meaning
  /// i is covered by j. Stores the transitive closure. Throws
  /// std::invalid_argument on out-of-range points or when the pairs close
  /// into a cycle (the diagnostic names one offending cycle).
  static FinitePoset from_covers(int n, std::span<const std::pair<int, int>> covers);
  static FinitePoset from_covers(int n, std::initializer_list<std::pair<int, int>> covers);

  /// Adjoins one new maximal point whose strict down-set is `down`,
  /// which must be down-closed in `base`. Used by the enumeration inner
  /// loop; validated by assertion only.
  static FinitePoset extend_with_maximum(const FinitePoset& base, PointSet down);

  int size() const { return n_; }

  bool less(int a, int b) const { return below_[b].contains(a); }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  /// Strict down-set {a : a < x}.
  PointSet down_set(int x) const { return below_[x]; }
  /// Strict up-set {a : a > x}.
  PointSet up_set(int x) const { return above_[x]; }
  /// Punctured link: down_set(x) | up_set(x).
  PointSet link(int x) const { return below_[x] | above_[x]; }

  PointSet maximal_points() const;
  PointSet minimal_points() const;
  /// Points that are neither maximal nor minimal.
  PointSet mid_points() const;

  /// Longest chain cardinality minus one.
  int height() const;

  /// Number of strict chains of cardinality k+1 (the k-simplices of the
  /// order complex), by memoized path counting over the order DAG.
  std::uint64_t chain_count(int k) const;

  /// Alternating sum of chain counts over all dimensions.
  long long euler_characteristic() const;

  /// Connectivity of the comparability graph.
  bool is_connected() const;

  /// Same points, inverse order.
  FinitePoset opposite() const;

  /// Non-Hausdorff suspension: two new incomparable points above everything.
  FinitePoset nh_suspension() const;

  /// Induced order on S, point indices remapped densely (ascending).
  struct Subspace;
  Subspace subspace(PointSet s) const;

  PointSet all_points() const { return PointSet::first_n(n_); }

  /// Number of comparable pairs; equals chain_count(1).
  int relation_size() const;

  /// Pairs (i,j) of the transitive reduction, i covered by j, sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool operator==(const FinitePoset&) const = default;

  /// Checks irreflexivity, antisymmetry, transitivity and mirror
  /// consistency; throws std::logic_error naming the violated one.
  void check_invariants() const;

 private:
  int n_ = 0;
  std::vector<PointSet> below_;
  std::vector<PointSet> above_;
};

struct FinitePoset::Subspace {
  FinitePoset poset;
  std::vector<int> points;  // points[new index] = index in the ambient space
};

/// Permuted copy: point x of the input becomes perm[x] of the output.
FinitePoset permute(const FinitePoset& x, std::span<const int> perm);

}  // namespace fintop
