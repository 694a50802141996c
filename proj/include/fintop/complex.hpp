#pragma once

#include <vector>

#include "fintop/poset.hpp"
#include "fintop/snf.hpp"

namespace fintop {

/// Simplicial complex of the non-empty chains of a poset. Simplices are
/// sorted vertex tuples, grouped by dimension and ordered
/// lexicographically within each dimension, which fixes boundary-matrix
/// rows and columns. Every face of a stored simplex is stored.
struct OrderComplex {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> simplices;

  /// Top dimension carrying simplices; -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t simplex_count(int k) const {
    return k >= 0 && k <= dimension() ? simplices[k].size() : 0;
  }
  bool empty() const { return simplices.empty(); }
  std::size_t total_simplices() const;

  /// Column index of a sorted vertex tuple within its dimension, or -1.
  int index_of(const std::vector<int>& simplex) const;
};

/// K(X): k-simplices are the (k+1)-element chains of X.
OrderComplex order_complex(const FinitePoset& x);

/// Boundary map from k-chains to (k-1)-chains with the usual alternating
/// signs; rows follow simplices[k-1], columns simplices[k].
IntMatrix boundary_matrix(const OrderComplex& k, int dim);

/// True when every composite boundary vanishes.
bool boundaries_compose_to_zero(const OrderComplex& k);

}  // namespace fintop
