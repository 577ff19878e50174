#pragma once

// Benchmark harness: random full-rank instances, wall-clock timing of the
// elementary pipeline against the brute-force baseline, and CSV records.
// Timing wraps the pipeline only; parsing and printing stay outside. For a
// fixed seed everything except the elapsed_s column is bit-stable.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "invgen/core.hpp"
#include "invgen/growth.hpp"
#include "invgen/modp.hpp"
#include "invgen/oracle.hpp"

namespace invgen {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-cell seed derived from the base seed and the cell coordinates.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t k, std::uint64_t n, std::uint64_t p, std::uint64_t trial) {
  std::uint64_t s = base;
  for (std::uint64_t v : {k, n, p, trial}) {
    s ^= v + 0x9E3779B97F4A7C15ull;
    splitmix64(s);
  }
  return splitmix64(s);
}

namespace detail {

// Exactly uniform draw below bound via masked rejection; unlike
// uniform_int_distribution the output is identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t v = gen() & mask;
    if (v < bound) return v;
  }
}

}  // namespace detail

// Uniformly random k x n matrix over Z/p with full row rank mod p,
// reproducible from the seed (rejection sampling over all matrices).
inline ActionSpec random_full_rank_spec(std::size_t k, std::size_t n, std::int64_t p, std::uint64_t seed) {
  if (k == 0 || n == 0 || k > n) throw DimensionMismatch("need 1 <= k <= n");
  if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  std::mt19937_64 gen(seed);
  ActionSpec spec{p, WeightMatrix(k, n)};
  for (;;) {
    for (std::int64_t& e : spec.weights.entries)
      e = static_cast<std::int64_t>(detail::uniform_below(gen, static_cast<std::uint64_t>(p)));
    if (rank_mod_p(spec.weights, p) == k) return spec;
  }
}

template <typename F>
inline double time_seconds(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct BenchRecord {
  std::string strategy;  // "elementary" or "oracle"
  std::int64_t p = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<double> elapsed_s;
  std::optional<std::size_t> count;
  std::string status;  // "ok", "skipped-cap", "mismatch"
};

struct BenchSize {
  std::size_t k = 0;
  std::size_t n = 0;
};

struct BenchOptions {
  std::vector<BenchSize> sizes;
  std::vector<std::int64_t> primes;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::uint64_t box_cap = default_box_cap;
  std::size_t candidate_cap = default_candidate_cap;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;
  bool all_ok = true;  // false once any completed pair disagrees
};

// For each (size, prime, trial): draw a random full-rank instance, time
// both strategies, and cross-check their outputs. The oracle cell is
// skipped (status "skipped-cap") when (p+1)^n exceeds the box cap; trials
// run sequentially to keep the timings honest.
inline BenchOutcome run_bench(const BenchOptions& opt) {
  BenchOutcome out;
  for (const BenchSize& size : opt.sizes) {
    for (const std::int64_t p : opt.primes) {
      for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        const std::uint64_t seed = mix_seed(opt.seed, size.k, size.n, static_cast<std::uint64_t>(p), trial);
        const ActionSpec spec = random_full_rank_spec(size.k, size.n, p, seed);

        GeneratingSet elementary;
        const double elem_s = time_seconds([&] { elementary = compute_generators(spec, opt.candidate_cap); });

        BenchRecord elem{"elementary", p, size.k, size.n, trial, seed, elem_s, elementary.size(), "ok"};
        BenchRecord orac{"oracle", p, size.k, size.n, trial, seed, std::nullopt, std::nullopt, "skipped-cap"};

        if (pow_within(static_cast<std::uint64_t>(p) + 1, size.n, opt.box_cap)) {
          GeneratingSet baseline;
          const double orac_s = time_seconds([&] { baseline = oracle_atoms(spec, opt.box_cap); });
          orac.elapsed_s = orac_s;
          orac.count = baseline.size();
          if (baseline == elementary) {
            orac.status = "ok";
          } else {
            elem.status = orac.status = "mismatch";
            out.all_ok = false;
          }
        }
        out.records.push_back(std::move(elem));
        out.records.push_back(std::move(orac));
      }
    }
  }
  return out;
}

inline constexpr const char* csv_header = "strategy,p,k,n,trial,seed,elapsed_s,count,status";

inline std::string format_elapsed(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", seconds);
  return buf;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << csv_header << '\n';
  for (const BenchRecord& r : records) {
    os << r.strategy << ',' << r.p << ',' << r.k << ',' << r.n << ',' << r.trial << ',' << r.seed << ',';
    if (r.elapsed_s) os << format_elapsed(*r.elapsed_s);
    os << ',';
    if (r.count) os << *r.count;
    os << ',' << r.status << '\n';
  }
}

}  // namespace invgen
