#include "fintop/complex.hpp"

#include <algorithm>

namespace fintop {

std::size_t OrderComplex::total_simplices() const {
  std::size_t total = 0;
  for (const auto& dim : simplices) total += dim.size();
  return total;
}

int OrderComplex::index_of(const std::vector<int>& simplex) const {
  int k = static_cast<int>(simplex.size()) - 1;
  if (k < 0 || k > dimension()) return -1;
  const auto& level = simplices[k];
  auto it = std::lower_bound(level.begin(), level.end(), simplex);
  if (it == level.end() || *it != simplex) return -1;
  return static_cast<int>(it - level.begin());
}

OrderComplex order_complex(const FinitePoset& x) {
  OrderComplex k;
  k.vertex_count = x.size();
  std::vector<std::vector<std::vector<int>>> by_dim;
  std::vector<int> chain;
  // Chains are grown upward from each start point, so each chain set is
  // produced exactly once.
  auto grow = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    std::size_t d = chain.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    std::vector<int> simplex = chain;
    std::sort(simplex.begin(), simplex.end());
    by_dim[d].push_back(std::move(simplex));
    for (int u : x.up_set(top)) self(self, u);
    chain.pop_back();
  };
  for (int v = 0; v < x.size(); ++v) grow(grow, v);
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  k.simplices = std::move(by_dim);
  return k;
}

IntMatrix boundary_matrix(const OrderComplex& k, int dim) {
  std::size_t rows = k.simplex_count(dim - 1);
  std::size_t cols = k.simplex_count(dim);
  IntMatrix m(rows, std::vector<long long>(cols, 0));
  if (dim <= 0) return m;
  for (std::size_t c = 0; c < cols; ++c) {
    const auto& simplex = k.simplices[dim][c];
    std::vector<int> face(simplex.size() - 1);
    for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < simplex.size(); ++i)
        if (i != omit) face[w++] = simplex[i];
      int r = k.index_of(face);
      m[static_cast<std::size_t>(r)][c] += (omit % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

bool boundaries_compose_to_zero(const OrderComplex& k) {
  for (int dim = 1; dim < k.dimension(); ++dim) {
    IntMatrix lo = boundary_matrix(k, dim);
    IntMatrix hi = boundary_matrix(k, dim + 1);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      for (std::size_t j = 0; j < (hi.empty() ? 0 : hi[0].size()); ++j) {
        long long acc = 0;
        for (std::size_t t = 0; t < hi.size(); ++t) acc += lo[i][t] * hi[t][j];
        if (acc != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace fintop
