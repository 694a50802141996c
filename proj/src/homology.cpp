#include "fintop/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fintop {

namespace {

// Invariant-factor chain from an arbitrary multiset of torsion orders:
// split into prime powers, then recombine largest-first per prime.
std::vector<long long> normalize_torsion(std::vector<long long> entries) {
  std::map<long long, std::vector<long long>> powers;  // prime -> descending powers
  for (long long e : entries) {
    for (long long p = 2; p * p <= e; ++p) {
      if (e % p != 0) continue;
      long long q = 1;
      while (e % p == 0) {
        e /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (e > 1) powers[e].push_back(e);
  }
  std::size_t factors = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    factors = std::max(factors, qs.size());
  }
  std::vector<long long> chain(factors, 1);
  for (auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) chain[i] *= qs[i];
  std::reverse(chain.begin(), chain.end());
  return chain;
}

const AbelianGroup kZeroGroup{};

}  // namespace

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (rank == 1) out = "Z";
  else if (rank > 1) out = "Z^" + std::to_string(rank);
  for (long long t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup s;
  s.rank = a.rank + b.rank;
  std::vector<long long> entries = a.torsion;
  entries.insert(entries.end(), b.torsion.begin(), b.torsion.end());
  s.torsion = normalize_torsion(std::move(entries));
  return s;
}

const AbelianGroup& HomologyProfile::at(int degree) const {
  if (degree == -1) return degree_minus_one;
  if (degree < 0 || degree >= static_cast<int>(groups.size())) return kZeroGroup;
  return groups[degree];
}

bool HomologyProfile::all_trivial() const {
  if (!degree_minus_one.trivial()) return false;
  return std::all_of(groups.begin(), groups.end(), [](const AbelianGroup& g) { return g.trivial(); });
}

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    chi += (k % 2 == 0) ? groups[k].rank : -groups[k].rank;
  return chi;
}

std::string HomologyProfile::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (!out.empty()) out += ", ";
    out += "H" + std::to_string(k) + " = " + groups[k].to_string();
  }
  return out.empty() ? "(empty complex)" : out;
}

namespace {

// Shared rank/torsion assembly: given boundary matrices D_k for
// k = 0..top+1 (D_0 is the augmentation row or empty; D_{top+1} zero
// columns), produces the profile for degrees 0..top.
HomologyProfile assemble(const std::vector<std::size_t>& chain_ranks,
                         const std::vector<IntMatrix>& boundaries) {
  int top = static_cast<int>(chain_ranks.size()) - 1;
  std::vector<SnfResult> snf(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) snf[i] = smith_normal_form(boundaries[i]);
  HomologyProfile profile;
  profile.groups.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    std::size_t rank_in = snf[k].rank();
    std::size_t rank_out = k + 1 < static_cast<int>(snf.size()) ? snf[k + 1].rank() : 0;
    AbelianGroup g;
    g.rank = static_cast<int>(chain_ranks[k] - rank_in - rank_out);
    if (k + 1 < static_cast<int>(snf.size()))
      for (long long d : snf[k + 1].diagonal)
        if (d > 1) g.torsion.push_back(d);
    profile.groups[k] = std::move(g);
  }
  return profile;
}

}  // namespace

HomologyProfile homology(const OrderComplex& k, bool reduced) {
  if (k.empty()) {
    HomologyProfile profile;
    if (reduced) profile.degree_minus_one.rank = 1;
    return profile;
  }
  int top = k.dimension();
  std::vector<std::size_t> chain_ranks(top + 1);
  std::vector<IntMatrix> boundaries(top + 2);
  for (int d = 0; d <= top; ++d) chain_ranks[d] = k.simplex_count(d);
  if (reduced) {
    boundaries[0] = IntMatrix(1, std::vector<long long>(k.simplex_count(0), 1));
  } else {
    boundaries[0] = IntMatrix(0);
  }
  for (int d = 1; d <= top + 1; ++d) boundaries[d] = boundary_matrix(k, d);
  return assemble(chain_ranks, boundaries);
}

HomologyProfile reduced_subspace_homology(const FinitePoset& x, PointSet s) {
  if (s.empty()) {
    HomologyProfile profile;
    profile.degree_minus_one.rank = 1;
    return profile;
  }
  return homology(order_complex(x.subspace(s).poset), true);
}

HomologyProfile relative_homology_profile(const FinitePoset& x, PointSet a) {
  OrderComplex k = order_complex(x);
  int top = k.dimension();
  // Relative chain groups keep the simplices with a vertex outside A.
  std::vector<std::vector<int>> kept(top + 1);
  std::vector<std::vector<int>> kept_index(top + 1);
  for (int d = 0; d <= top; ++d) {
    kept_index[d].assign(k.simplex_count(d), -1);
    for (std::size_t i = 0; i < k.simplex_count(d); ++i) {
      bool inside = std::all_of(k.simplices[d][i].begin(), k.simplices[d][i].end(),
                                [&](int v) { return a.contains(v); });
      if (!inside) {
        kept_index[d][i] = static_cast<int>(kept[d].size());
        kept[d].push_back(static_cast<int>(i));
      }
    }
  }
  std::vector<std::size_t> chain_ranks(top + 1);
  for (int d = 0; d <= top; ++d) chain_ranks[d] = kept[d].size();
  std::vector<IntMatrix> boundaries(top + 2);
  boundaries[0] = IntMatrix(0);
  for (int d = 1; d <= top + 1; ++d) {
    IntMatrix full = boundary_matrix(k, d);
    std::size_t rows = d - 1 <= top ? kept[d - 1].size() : 0;
    std::size_t cols = d <= top ? kept[d].size() : 0;
    IntMatrix m(rows, std::vector<long long>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r)
        m[r][c] = full[kept[d - 1][r]][kept[d][c]];
    boundaries[d] = std::move(m);
  }
  return assemble(chain_ranks, boundaries);
}

AbelianGroup relative_homology(const FinitePoset& x, PointSet a, int degree) {
  return relative_homology_profile(x, a).at(degree);
}

bool is_antichain(const FinitePoset& x, PointSet d) {
  for (int p : d)
    if (!((x.link(p) & d).empty())) return false;
  return true;
}

bool check_antichain_splitting(const FinitePoset& x, PointSet d) {
  if (!d.is_subset_of(x.all_points())) throw std::invalid_argument("antichain out of range");
  if (!is_antichain(x, d)) throw std::invalid_argument("D is not an antichain");
  HomologyProfile left = relative_homology_profile(x, x.all_points() - d);
  std::vector<HomologyProfile> links;
  for (int p : d) links.push_back(reduced_subspace_homology(x, x.link(p)));
  for (int n = 0; n <= x.height() + 1; ++n) {
    AbelianGroup right;
    for (const auto& link : links) right = direct_sum(right, link.at(n - 1));
    if (!(left.at(n) == right)) return false;
  }
  return true;
}

}  // namespace fintop
