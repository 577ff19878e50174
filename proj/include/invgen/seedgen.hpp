#pragma once

// Seed generation: build n-k exponent vectors whose residues form a
// Z/p-basis of ker(W mod p). One seed per non-pivot column, assembled from
// signed k x k minors (Plucker coordinates) and lifted to [0, p-1]^n.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "invgen/core.hpp"
#include "invgen/modp.hpp"

namespace invgen {

struct SeedSet {
  std::vector<ExponentVector> seeds;  // n-k vectors, components in [0, p-1]
  PivotSet pivot;

  std::size_t size() const { return seeds.size(); }
};

// Kernel vector supported on T u {i}: the entry at column a, sitting at
// position j(a) inside the sorted support, is (-1)^{j(a)} det(W restricted
// to the support minus a), everything mod p. With det(W_T) a unit the
// entry at column i is nonzero, so the result never collapses to zero.
inline std::vector<std::int64_t> raw_seed(const WeightMatrix& w, const PivotSet& pivot, std::size_t i, std::int64_t p) {
  if (pivot.columns.size() != w.rows) throw DimensionMismatch("pivot set size does not match row count");
  if (i >= w.cols || pivot.contains(i))
    throw InvalidColumn("column " + std::to_string(i + 1) + " is not outside the pivot set");

  std::vector<std::size_t> support = pivot.columns;
  support.insert(std::upper_bound(support.begin(), support.end(), i), i);

  std::vector<std::int64_t> v(w.cols, 0);
  std::vector<std::size_t> minor_cols(support.size() - 1);
  for (std::size_t pos = 0; pos < support.size(); ++pos) {
    std::size_t out = 0;
    for (std::size_t q = 0; q < support.size(); ++q) {
      if (q != pos) minor_cols[out++] = support[q];
    }
    const std::int64_t minor = det_mod_p(select_columns(w, minor_cols), p);
    v[support[pos]] = mod_canon(pos % 2 == 0 ? minor : -minor, p);
  }
  return v;
}

// Seeds for an explicitly chosen pivot set (any T with unit det works; the
// choice only permutes which basis comes out).
inline SeedSet generate_seeds(const ActionSpec& spec, PivotSet pivot) {
  const WeightMatrix& w = spec.weights;
  if (pivot.columns.size() != w.rows) throw DimensionMismatch("pivot set size does not match row count");
  for (std::size_t q = 0; q < pivot.columns.size(); ++q) {
    if (pivot.columns[q] >= w.cols || (q > 0 && pivot.columns[q] <= pivot.columns[q - 1]))
      throw InvalidColumn("pivot columns must be strictly increasing and in range");
  }
  if (det_mod_p(select_columns(w, pivot.columns), spec.p) == 0)
    throw RankDeficient("pivot submatrix is singular mod p");

  SeedSet out;
  out.pivot = std::move(pivot);
  out.seeds.reserve(w.cols - w.rows);
  for (std::size_t i = 0; i < w.cols; ++i) {
    if (out.pivot.contains(i)) continue;
    ExponentVector seed = raw_seed(w, out.pivot, i, spec.p);
    if (std::all_of(seed.begin(), seed.end(), [](Exponent c) { return c == 0; }))
      throw std::logic_error("seed collapsed to zero despite a unit pivot minor");
    out.seeds.push_back(std::move(seed));
  }
  return out;
}

// Deterministic pivot rule (leftmost pivot columns), then one seed per
// remaining column in ascending order. Requires a normalized spec.
inline SeedSet generate_seeds(const ActionSpec& spec) {
  return generate_seeds(spec, find_pivot_columns(spec.weights, spec.p));
}

}  // namespace invgen
