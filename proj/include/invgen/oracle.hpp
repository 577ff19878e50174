#pragma once

// Brute-force baseline: enumerate every kernel point of the box [0, p]^n
// and keep the atoms. An atom never has a component above p (subtracting
// p*e_j would split it), so the box is exhaustive. Deliberately shares
// nothing with seed generation or growth beyond the core types and the
// invariance predicate; this is the independent verifier and the benchmark
// baseline.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "invgen/core.hpp"
#include "invgen/modp.hpp"

namespace invgen {

inline constexpr std::uint64_t default_box_cap = 100'000'000;  // box points

struct KernelBox {
  std::vector<ExponentVector> points;  // nonzero kernel points of [0, p]^n, sorted
};

inline KernelBox enumerate_kernel_box(const ActionSpec& raw, std::uint64_t cap = default_box_cap) {
  const WeightMatrix& w = raw.weights;
  if (w.rows == 0 || w.cols == 0 || w.entries.size() != w.rows * w.cols)
    throw DimensionMismatch("weight matrix must be k x n with k, n >= 1");
  if (raw.p < 2) throw NonPrimeModulus("modulus must be at least 2");
  const std::int64_t p = raw.p;
  const std::size_t n = w.cols;

  // Canonicalize locally; the oracle must not depend on normalize().
  ActionSpec spec{p, w};
  for (std::int64_t& e : spec.weights.entries) e = mod_canon(e, p);
  checked_mul(static_cast<std::int64_t>(n), checked_mul(p - 1, p - 1));

  if (!pow_within(static_cast<std::uint64_t>(p) + 1, n, cap))
    throw CapacityExceeded("(p+1)^n exceeds the enumeration cap of " + std::to_string(cap) + " points");

  KernelBox box;
  ExponentVector alpha(n, 0);
  for (;;) {
    std::size_t d = 0;
    while (d < n && alpha[d] == p) alpha[d++] = 0;
    if (d == n) break;
    ++alpha[d];
    if (is_invariant(spec, alpha)) box.points.push_back(alpha);
  }
  sort_monomials(box.points);
  return box;
}

// alpha is an atom iff no other box point divides it: a divisor inside the
// kernel exhibits a splitting, and any splitting of a box point stays in
// the box. Divisors have strictly smaller degree, so each point only scans
// the sorted prefix below its own degree bucket.
inline GeneratingSet oracle_atoms(const ActionSpec& raw, std::uint64_t cap = default_box_cap) {
  const KernelBox box = enumerate_kernel_box(raw, cap);
  const std::size_t count = box.points.size();

  std::vector<Exponent> degs(count);
  for (std::size_t i = 0; i < count; ++i) degs[i] = degree(box.points[i]);

  std::vector<ExponentVector> atoms;
  std::size_t bucket_start = 0;  // first index of the current degree bucket
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0 && degs[i] != degs[i - 1]) bucket_start = i;
    bool atom = true;
    for (std::size_t j = 0; j < bucket_start; ++j) {
      if (divides(box.points[j], box.points[i])) {
        atom = false;
        break;
      }
    }
    if (atom) atoms.push_back(box.points[i]);
  }
  return make_generating_set(std::move(atoms));
}

}  // namespace invgen
