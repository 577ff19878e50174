#pragma once

// Exact linear algebra over the field Z/p: the invariance predicate
// W*alpha == 0 (mod p), rank, pivot-column selection, and the k x k
// determinants that drive seed construction.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invgen/core.hpp"

namespace invgen {

// Multiplicative inverse in Z/p via extended Euclid; a must be nonzero mod p.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_canon(a, p);
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw Error("element has no inverse mod " + std::to_string(p));
  return mod_canon(t, p);
}

// Column index set T with det(W_T) a unit mod p.
struct PivotSet {
  std::vector<std::size_t> columns;  // strictly increasing, |columns| = k

  bool contains(std::size_t c) const {
    for (std::size_t x : columns)
      if (x == c) return true;
    return false;
  }

  friend bool operator==(const PivotSet&, const PivotSet&) = default;
};

// x^alpha is invariant iff W * alpha == 0 (mod p) componentwise.
// Expects canonical entries in [0, p-1] (a normalized spec); alpha may hold
// any nonnegative exponents.
inline bool is_invariant(const ActionSpec& spec, const ExponentVector& alpha) {
  const WeightMatrix& w = spec.weights;
  if (alpha.size() != w.cols) throw DimensionMismatch("exponent vector length does not match variable count");
  const std::int64_t p = spec.p;
  for (std::size_t i = 0; i < w.rows; ++i) {
    const std::int64_t* row = w.row(i);
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < w.cols; ++j) {
      std::int64_t a = alpha[j];
      if (a >= p) a %= p;
      acc += row[j] * a;  // bounded by n*(p-1)^2, guarded in normalize
    }
    if (acc % p != 0) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::int64_t> canonical_entries(const WeightMatrix& w, std::int64_t p) {
  std::vector<std::int64_t> m(w.entries.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = mod_canon(w.entries[i], p);
  return m;
}

// Row echelon sweep; returns the pivot columns in increasing order.
inline std::vector<std::size_t> eliminate(std::vector<std::int64_t>& m, std::size_t rows, std::size_t cols, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i * cols + c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[r * cols + j]);
    }
    const std::int64_t lead = m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = m[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i * cols + j] = mod_canon(m[i * cols + j] * lead - m[r * cols + j] * f, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank_mod_p(const WeightMatrix& w, std::int64_t p) {
  if (w.rows == 0 || w.cols == 0) return 0;
  std::vector<std::int64_t> m = detail::canonical_entries(w, p);
  return detail::eliminate(m, w.rows, w.cols, p).size();
}

// First pivot column of each elimination row: the lexicographically
// smallest T with det(W_T) a unit mod p. Requires full row rank.
inline PivotSet find_pivot_columns(const WeightMatrix& w, std::int64_t p) {
  std::vector<std::int64_t> m = detail::canonical_entries(w, p);
  std::vector<std::size_t> pivots = detail::eliminate(m, w.rows, w.cols, p);
  if (pivots.size() != w.rows)
    throw RankDeficient("weight matrix has rank " + std::to_string(pivots.size()) + " < " + std::to_string(w.rows) +
                        " rows; normalize the spec first");
  return PivotSet{std::move(pivots)};
}

// Determinant mod p by elimination; no integer blowup. det of the empty
// 0 x 0 matrix is 1.
inline std::int64_t det_mod_p(const WeightMatrix& mat, std::int64_t p) {
  if (mat.rows != mat.cols) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = mat.rows;
  std::vector<std::int64_t> m = detail::canonical_entries(mat, p);
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t i = c; i < n; ++i) {
      if (m[i * n + c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[c * n + j]);
      det = mod_canon(-det, p);
    }
    const std::int64_t lead = m[c * n + c];
    det = mod_canon(det * lead, p);
    const std::int64_t lead_inv = inv_mod(lead, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::int64_t f = mod_canon(m[i * n + c] * lead_inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i * n + j] = mod_canon(m[i * n + j] - f * m[c * n + j], p);
    }
  }
  return det;
}

// k x |cols| submatrix of w on the given columns, in the given order.
inline WeightMatrix select_columns(const WeightMatrix& w, const std::vector<std::size_t>& cols) {
  WeightMatrix sub(w.rows, cols.size());
  for (std::size_t i = 0; i < w.rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = w(i, cols[j]);
  return sub;
}

}  // namespace invgen
