#include "detpol/matrix.hpp"

#include <map>

namespace detpol {

namespace {

// Cofactor expansion along consumed rows; rows are used in order, so the
// remaining-column mask identifies the subproblem.
template <class K>
Poly<K> det_rec(const K& k, const PolyMatrix<K>& m,
                const std::vector<int>& rows, const std::vector<int>& cols,
                int depth, uint32_t colmask,
                std::map<uint32_t, Poly<K>>& memo) {
  const int size = (int)rows.size();
  if (depth == size) return poly_const<K>(k, m.ring.get(), k.one());
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Poly<K> acc = poly_zero<K>(m.ring.get());
  int sign = 1;
  for (int c = 0; c < size; ++c) {
    if (!(colmask & (1u << c))) continue;
    const Poly<K>& entry = m.at(rows[(size_t)depth], cols[(size_t)c]);
    if (!entry.is_zero()) {
      Poly<K> sub = det_rec(k, m, rows, cols, depth + 1,
                            colmask & ~(1u << c), memo);
      Poly<K> prod = poly_mul(k, entry, sub);
      acc = sign > 0 ? poly_add(k, acc, prod) : poly_sub(k, acc, prod);
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

template <class K>
Poly<K> matrix_minor(const K& k, const PolyMatrix<K>& m,
                     const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  require(rows.size() == cols.size(), ErrCode::LengthMismatch,
          "minor needs as many rows as columns");
  require(rows.size() <= 20, ErrCode::ResourceLimit, "minor order too large");
  for (int r : rows)
    require(r >= 0 && r < m.rows, ErrCode::RangeError, "row out of range");
  for (int c : cols)
    require(c >= 0 && c < m.cols, ErrCode::RangeError, "column out of range");
  std::map<uint32_t, Poly<K>> memo;
  uint32_t full = rows.empty() ? 0 : ((1u << rows.size()) - 1);
  return det_rec(k, m, rows, cols, 0, full, memo);
}

template <class K>
Poly<K> matrix_det(const K& k, const PolyMatrix<K>& m) {
  require(m.rows == m.cols, ErrCode::LengthMismatch,
          "determinant of a non-square matrix");
  std::vector<int> idx;
  for (int i = 0; i < m.rows; ++i) idx.push_back(i);
  return matrix_minor(k, m, idx, idx);
}

std::vector<std::vector<int>> subsets_lex(int n, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > n) return out;
  std::vector<int> cur((size_t)size);
  for (int i = 0; i < size; ++i) cur[(size_t)i] = i;
  for (;;) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[(size_t)i] == n - size + i) --i;
    if (i < 0) break;
    ++cur[(size_t)i];
    for (int j = i + 1; j < size; ++j) cur[(size_t)j] = cur[(size_t)j - 1] + 1;
  }
  return out;
}

// Bareiss fraction-free elimination; every division is exact.
template <class K>
int matrix_rank(const K& k, const PolyMatrix<K>& m) {
  PolyMatrix<K> w = m;
  std::vector<bool> col_used((size_t)w.cols, false);
  std::vector<int> pivot_col;
  Poly<K> prev = poly_const<K>(k, w.ring.get(), k.one());
  int rank = 0;
  for (; rank < w.rows; ++rank) {
    int pr = -1, pc = -1;
    for (int i = rank; i < w.rows && pr < 0; ++i)
      for (int j = 0; j < w.cols; ++j) {
        if (col_used[(size_t)j]) continue;
        if (!w.at(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    if (pr < 0) break;
    if (pr != rank)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(pr, j), w.at(rank, j));
    col_used[(size_t)pc] = true;
    for (int i = rank + 1; i < w.rows; ++i) {
      for (int j = 0; j < w.cols; ++j) {
        if (col_used[(size_t)j] && j != pc) continue;
        if (j == pc) continue;
        Poly<K> num = poly_sub(k, poly_mul(k, w.at(rank, pc), w.at(i, j)),
                               poly_mul(k, w.at(i, pc), w.at(rank, j)));
        w.at(i, j) = num.is_zero() ? num : poly_exact_div(k, num, prev);
      }
      w.at(i, pc) = poly_zero<K>(w.ring.get());
    }
    prev = w.at(rank, pc);
  }
  return rank;
}

template <class K>
PolyMatrix<K> matrix_mul(const K& k, const PolyMatrix<K>& a,
                         const PolyMatrix<K>& b) {
  require(a.cols == b.rows, ErrCode::LengthMismatch,
          "matrix product shape mismatch");
  require(a.ring.get() == b.ring.get(), ErrCode::RingMismatch,
          "matrix product across rings");
  PolyMatrix<K> out(a.ring, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      Poly<K> acc = poly_zero<K>(a.ring.get());
      for (int t = 0; t < a.cols; ++t)
        acc = poly_add(k, acc, poly_mul(k, a.at(i, t), b.at(t, j)));
      out.at(i, j) = std::move(acc);
    }
  return out;
}

template <class K>
PolyMatrix<K> matrix_eval_var(const K& k, const PolyMatrix<K>& m, int var,
                              const typename K::Elem& value) {
  PolyMatrix<K> out = m;
  for (auto& p : out.a) p = poly_eval_var(k, p, var, value);
  return out;
}

template <class K>
PolyMatrix<K> matrix_map_vars(const K& k, const PolyMatrix<K>& m, Rc ring,
                              const std::vector<int>& image) {
  PolyMatrix<K> out(ring, m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i)
    out.a[i] = poly_map_vars(k, m.a[i], ring.get(), image);
  return out;
}

#define DETPOL_INSTANTIATE_MATRIX(K)                                         \
  template Poly<K> matrix_minor<K>(const K&, const PolyMatrix<K>&,           \
                                   const std::vector<int>&,                  \
                                   const std::vector<int>&);                 \
  template Poly<K> matrix_det<K>(const K&, const PolyMatrix<K>&);            \
  template int matrix_rank<K>(const K&, const PolyMatrix<K>&);               \
  template PolyMatrix<K> matrix_mul<K>(const K&, const PolyMatrix<K>&,       \
                                       const PolyMatrix<K>&);                \
  template PolyMatrix<K> matrix_eval_var<K>(const K&, const PolyMatrix<K>&,  \
                                            int, const K::Elem&);            \
  template PolyMatrix<K> matrix_map_vars<K>(const K&, const PolyMatrix<K>&,  \
                                            Rc, const std::vector<int>&);

DETPOL_INSTANTIATE_MATRIX(RationalField)
DETPOL_INSTANTIATE_MATRIX(PrimeField)

}  // namespace detpol
