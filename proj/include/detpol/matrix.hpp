#pragma once

#include <vector>

#include "detpol/poly.hpp"

namespace detpol {

// Dense matrix of polynomials, row major. Owns its ring.
template <class K>
struct PolyMatrix {
  Rc ring;
  int rows = 0;
  int cols = 0;
  std::vector<Poly<K>> a;

  PolyMatrix() = default;
  PolyMatrix(Rc r, int nr, int nc)
      : ring(std::move(r)), rows(nr), cols(nc) {
    a.assign((size_t)(rows * cols), poly_zero<K>(ring.get()));
  }

  Poly<K>& at(int i, int j) { return a[(size_t)(i * cols + j)]; }
  const Poly<K>& at(int i, int j) const { return a[(size_t)(i * cols + j)]; }

  bool empty() const { return rows == 0 || cols == 0; }
};

// Determinant by cofactor expansion with column-mask memoization.
template <class K>
Poly<K> matrix_det(const K& k, const PolyMatrix<K>& m);

// Determinant of the square submatrix picked by row and column index lists.
template <class K>
Poly<K> matrix_minor(const K& k, const PolyMatrix<K>& m,
                     const std::vector<int>& rows,
                     const std::vector<int>& cols);

// All size-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int size);

// Rank over the fraction field of K[x], by fraction-free elimination on a
// copy. Exact and deterministic.
template <class K>
int matrix_rank(const K& k, const PolyMatrix<K>& m);

// Matrix product A * B over the polynomial ring.
template <class K>
PolyMatrix<K> matrix_mul(const K& k, const PolyMatrix<K>& a,
                         const PolyMatrix<K>& b);

// Evaluate one variable at a scalar in every entry (ring unchanged).
template <class K>
PolyMatrix<K> matrix_eval_var(const K& k, const PolyMatrix<K>& m, int var,
                              const typename K::Elem& value);

// Map every entry into `ring` through a variable-index image list.
template <class K>
PolyMatrix<K> matrix_map_vars(const K& k, const PolyMatrix<K>& m, Rc ring,
                              const std::vector<int>& image);

}  // namespace detpol
