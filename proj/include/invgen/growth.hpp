#pragma once

// Seed growth: expand the seeds into the full minimal generating set.
// Every atom of the invariant-exponent semigroup is either a pure power
// x_j^p or the canonical representative of a Z/p-combination of seeds, so
// enumerating the span, injecting pure powers, filtering by Olson's degree
// bound and reducing by divisibility yields exactly the minimal set.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "invgen/core.hpp"
#include "invgen/modp.hpp"
#include "invgen/seedgen.hpp"

namespace invgen {

inline constexpr std::size_t default_candidate_cap = std::size_t{1} << 24;

struct CandidatePool {
  std::vector<ExponentVector> candidates;   // nonzero span representatives, in coefficient-odometer order
  std::vector<ExponentVector> pure_powers;  // p*e_j for every variable j
};

// All nonzero coefficient tuples c in {0..p-1}^t applied to the seeds,
// components reduced into [0, p-1]. Seed independence makes the map
// injective, so the p^t - 1 results are distinct as produced.
inline CandidatePool enumerate_candidates(const SeedSet& seeds, const ActionSpec& spec,
                                          std::size_t cap = default_candidate_cap) {
  const std::size_t t = seeds.size();
  const std::size_t n = spec.n();
  const std::int64_t p = spec.p;

  std::uint64_t total = 0;
  if (!pow_within(static_cast<std::uint64_t>(p), t, static_cast<std::uint64_t>(cap) + 1, &total))
    throw CapacityExceeded("candidate pool would exceed the cap of " + std::to_string(cap) + " vectors");

  CandidatePool pool;
  pool.pure_powers.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector pure(n, 0);
    pure[j] = p;
    pool.pure_powers.push_back(std::move(pure));
  }
  if (t == 0) return pool;

  pool.candidates.reserve(static_cast<std::size_t>(total) - 1);
  std::vector<std::int64_t> coeff(t, 0);
  ExponentVector running(n, 0);  // sum of coeff[s] * seed[s], kept reduced in [0, p-1]
  const auto add_seed = [&](std::size_t s) {
    const ExponentVector& seed = seeds.seeds[s];
    for (std::size_t j = 0; j < n; ++j) {
      running[j] += seed[j];
      if (running[j] >= p) running[j] -= p;
    }
  };
  for (;;) {
    // odometer step with an incremental sum: resetting a digit from p-1
    // to 0 removes (p-1) copies of the seed, which is adding one mod p
    std::size_t d = 0;
    while (d < t && coeff[d] == p - 1) {
      coeff[d] = 0;
      add_seed(d);
      ++d;
    }
    if (d == t) break;
    ++coeff[d];
    add_seed(d);
    pool.candidates.push_back(running);
  }
  return pool;
}

// Olson filter + greedy divisibility reduction in (degree, x1-major) order.
// The quotient of two kernel vectors is again a kernel vector, so a kept
// divisor certifies redundancy outright; processing by ascending degree
// makes the greedy filter agree with the atom property.
inline GeneratingSet reduce_to_minimal(const CandidatePool& pool, const ActionSpec& spec) {
  const std::int64_t olson = checked_add(checked_mul(static_cast<std::int64_t>(spec.k()), spec.p - 1), 1);

  // Olson filter first, then sort what is left (candidates and pure powers
  // never collide: a candidate has no component equal to p).
  struct Item {
    const ExponentVector* v;
    Exponent deg;
  };
  std::vector<Item> work;
  work.reserve(pool.candidates.size() + pool.pure_powers.size());
  for (const ExponentVector& c : pool.candidates) {
    Exponent d = 0;
    for (const Exponent x : c) d += x;  // bounded by n*(p-1), guarded in normalize
    if (d <= olson) work.push_back({&c, d});
  }
  for (const ExponentVector& q : pool.pure_powers) work.push_back({&q, spec.p});
  std::sort(work.begin(), work.end(), [](const Item& a, const Item& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return std::lexicographical_compare(b.v->begin(), b.v->end(), a.v->begin(), a.v->end());
  });

  // Greedy atom filter in ascending degree order. A proper divisor of m is
  // itself reducible to kept atoms, so scanning the kept prefix of strictly
  // smaller degree suffices; pure powers join unreduced because a zero
  // weight column makes x_j itself a candidate and x_j^p must then lose.
  // With components at most p, monomials pack into one word with a guard
  // bit per field and the divisibility test becomes a borrow check.
  const std::size_t n = spec.n();
  const unsigned field_bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(spec.p))) + 1;
  const bool packable = n * field_bits <= 64;

  std::vector<std::uint64_t> packed;
  std::uint64_t guards = 0;
  if (packable) {
    packed.reserve(work.size());
    for (const Item& m : work) {
      std::uint64_t key = 0;
      for (const Exponent c : *m.v) key = (key << field_bits) | static_cast<std::uint64_t>(c);
      packed.push_back(key);
    }
    for (std::size_t j = 0; j < n; ++j) guards |= std::uint64_t{1} << (j * field_bits + field_bits - 1);
  }

  std::vector<Item> kept;
  std::vector<std::uint64_t> kept_packed;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Item& m = work[i];
    bool redundant = false;
    if (packable) {
      const std::uint64_t mk = packed[i] | guards;
      for (std::size_t g = 0; g < kept.size(); ++g) {
        if (kept[g].deg >= m.deg) break;  // kept is degree-ascending
        if (((mk - kept_packed[g]) & guards) == guards) {
          redundant = true;
          break;
        }
      }
    } else {
      for (const Item& g : kept) {
        if (g.deg >= m.deg) break;
        if (divides(*g.v, *m.v)) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) {
      kept.push_back(m);
      if (packable) kept_packed.push_back(packed[i]);
    }
  }

  GeneratingSet out;
  out.generators.reserve(kept.size());
  for (const Item& g : kept) out.generators.push_back(*g.v);
  return out;
}

// Full pipeline: normalize -> seeds -> span -> reduce.
inline GeneratingSet compute_generators(const ActionSpec& raw, std::size_t candidate_cap = default_candidate_cap) {
  const ActionSpec spec = normalize(raw);
  const SeedSet seeds = generate_seeds(spec);
  const CandidatePool pool = enumerate_candidates(seeds, spec, candidate_cap);
  return reduce_to_minimal(pool, spec);
}

}  // namespace invgen
