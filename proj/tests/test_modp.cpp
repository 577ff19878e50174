#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "invgen/bench.hpp"
#include "invgen/modp.hpp"

using namespace invgen;
using testutil::ev;
using testutil::spec_of;

namespace {

// Independent rank oracle: |row span| = p^rank, by brute enumeration of
// all coefficient tuples.
std::size_t rank_by_span(const WeightMatrix& w, std::int64_t p) {
  std::set<std::vector<std::int64_t>> span;
  std::vector<std::int64_t> coeff(w.rows, 0);
  for (;;) {
    std::vector<std::int64_t> v(w.cols, 0);
    for (std::size_t i = 0; i < w.rows; ++i)
      for (std::size_t j = 0; j < w.cols; ++j) v[j] = mod_canon(v[j] + coeff[i] * w(i, j), p);
    span.insert(v);
    std::size_t d = 0;
    while (d < w.rows && coeff[d] == p - 1) coeff[d++] = 0;
    if (d == w.rows) break;
    ++coeff[d];
  }
  std::size_t r = 0;
  std::size_t power = 1;
  while (power < span.size()) {
    power *= static_cast<std::size_t>(p);
    ++r;
  }
  REQUIRE(power == span.size());
  return r;
}

}  // namespace

TEST_CASE("invariance predicate is the mod-p kernel test") {
  const ActionSpec spec = spec_of(3, {{1, 0, 1}, {0, 1, 1}});
  CHECK(is_invariant(spec, ev({1, 1, 2})));        // x*y*z^2
  CHECK_FALSE(is_invariant(spec, ev({1, 0, 0})));  // w11 = 1
  CHECK(is_invariant(spec, ev({0, 0, 0})));
  CHECK(is_invariant(spec, ev({3, 3, 3})));  // componentwise multiples of p
  CHECK_THROWS_AS(is_invariant(spec, ev({1, 1})), DimensionMismatch);
}

TEST_CASE("rank over Z/p") {
  CHECK(rank_mod_p(WeightMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}), 3) == 2);
  CHECK(rank_mod_p(WeightMatrix::from_rows({{1, 1}, {2, 2}}), 3) == 1);
  CHECK(rank_mod_p(WeightMatrix::from_rows({{0, 0}, {0, 0}}), 2) == 0);
  CHECK(rank_mod_p(WeightMatrix::from_rows({{2, 4}}), 2) == 0);  // zero mod 2
}

TEST_CASE("rank agrees with the row-span oracle on every small matrix") {
  for (const std::int64_t p : {2, 3}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t cells = k * n;
        std::uint64_t total = 1;
        for (std::size_t c = 0; c < cells; ++c) total *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < total; ++code) {
          WeightMatrix w(k, n);
          std::uint64_t rest = code;
          for (auto& e : w.entries) {
            e = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
          }
          REQUIRE(rank_mod_p(w, p) == rank_by_span(w, p));
        }
      }
    }
  }
}

TEST_CASE("pivot columns: lexicographically smallest unit minor") {
  CHECK(find_pivot_columns(WeightMatrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 1}}), 2) == PivotSet{{0, 2}});
  CHECK(find_pivot_columns(WeightMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}), 3) == PivotSet{{0, 1}});
  CHECK(find_pivot_columns(WeightMatrix::from_rows({{0, 1}}), 2) == PivotSet{{1}});
  CHECK_THROWS_AS(find_pivot_columns(WeightMatrix::from_rows({{1, 1}, {2, 2}}), 3), RankDeficient);
}

TEST_CASE("determinants mod p") {
  CHECK(det_mod_p(WeightMatrix::from_rows({{1, 1}, {0, 1}}), 3) == 1);
  CHECK(det_mod_p(WeightMatrix::from_rows({{1, 1}, {1, 1}}), 5) == 0);
  CHECK(det_mod_p(WeightMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 7) == 1);
  CHECK(det_mod_p(WeightMatrix(0, 0), 5) == 1);  // empty product
  CHECK(det_mod_p(WeightMatrix::from_rows({{2, 3}, {1, 4}}), 5) == 0);  // 8-3=5
  CHECK_THROWS_AS(det_mod_p(WeightMatrix::from_rows({{1, 2, 3}}), 5), DimensionMismatch);
}

TEST_CASE("modular inverse") {
  for (const std::int64_t p : {2, 3, 5, 29}) {
    for (std::int64_t a = 1; a < p; ++a) CHECK(mod_canon(a * inv_mod(a, p), p) == 1);
  }
  CHECK_THROWS_AS(inv_mod(0, 7), Error);
}

TEST_CASE("kernel closure, pure powers, and pivot minors on random instances") {
  std::mt19937_64 gen(42);
  const std::vector<std::int64_t> primes{2, 3, 5};  // rejection sampling below needs a dense kernel
  for (int iter = 0; iter < 100; ++iter) {
    const ActionSpec spec = testutil::sample_spec(gen, primes, 5);
    const std::size_t n = spec.n();

    // closed under addition: invariant + invariant stays invariant
    ExponentVector a(n), b(n), sum(n);
    do {
      for (auto& x : a) x = static_cast<Exponent>(gen() % static_cast<std::uint64_t>(spec.p));
    } while (!is_invariant(spec, a));
    do {
      for (auto& x : b) x = static_cast<Exponent>(gen() % static_cast<std::uint64_t>(spec.p));
    } while (!is_invariant(spec, b));
    for (std::size_t j = 0; j < n; ++j) sum[j] = a[j] + b[j];
    CHECK(is_invariant(spec, sum));

    for (std::size_t j = 0; j < n; ++j) {
      ExponentVector pure(n, 0);
      pure[j] = spec.p;
      CHECK(is_invariant(spec, pure));
    }

    const PivotSet pivot = find_pivot_columns(spec.weights, spec.p);
    CHECK(pivot.columns.size() == spec.k());
    CHECK(det_mod_p(select_columns(spec.weights, pivot.columns), spec.p) != 0);
  }
}
