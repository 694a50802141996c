#include "fintop/spaces.hpp"

namespace fintop {

FinitePoset antichain(int n) { return FinitePoset::from_covers(n, {}); }

FinitePoset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FinitePoset::from_covers(n, covers);
}

FinitePoset sphere_model(int k) {
  FinitePoset p = antichain(2);
  for (int i = 0; i < k; ++i) p = p.nh_suspension();
  return p;
}

FinitePoset w9() {
  return FinitePoset::from_covers(9, {{3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2},
                                      {6, 3}, {6, 4}, {7, 3}, {7, 4}, {7, 5}, {8, 4}, {8, 5}});
}

FinitePoset w9_opposite() { return w9().opposite(); }

}  // namespace fintop
