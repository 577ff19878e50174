#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "invgen/bench.hpp"

using namespace invgen;

TEST_CASE("random instances are reproducible, uniform over Z/p, and full rank") {
  const ActionSpec a = random_full_rank_spec(2, 4, 7, 42);
  const ActionSpec b = random_full_rank_spec(2, 4, 7, 42);
  CHECK(a == b);
  CHECK(random_full_rank_spec(2, 4, 7, 43) != a);
  CHECK(rank_mod_p(a.weights, 7) == 2);
  for (const auto e : a.weights.entries) {
    CHECK(e >= 0);
    CHECK(e < 7);
  }
  CHECK_THROWS_AS(random_full_rank_spec(3, 2, 5, 1), DimensionMismatch);
  CHECK_THROWS_AS(random_full_rank_spec(2, 3, 6, 1), NonPrimeModulus);
}

TEST_CASE("cell seeds differ across coordinates but not across runs") {
  CHECK(mix_seed(1, 2, 3, 5, 0) == mix_seed(1, 2, 3, 5, 0));
  CHECK(mix_seed(1, 2, 3, 5, 0) != mix_seed(1, 2, 3, 5, 1));
  CHECK(mix_seed(1, 2, 3, 5, 0) != mix_seed(1, 2, 3, 7, 0));
  CHECK(mix_seed(1, 2, 3, 5, 0) != mix_seed(2, 2, 3, 5, 0));
}

TEST_CASE("bench runs both strategies and cross-checks them") {
  BenchOptions opt;
  opt.sizes = {{2, 3}};
  opt.primes = {2, 3, 5};
  opt.trials = 2;
  opt.seed = 7;

  const BenchOutcome out = run_bench(opt);
  CHECK(out.all_ok);
  REQUIRE(out.records.size() == 2 * 3 * 2);  // strategies x primes x trials

  for (std::size_t i = 0; i < out.records.size(); i += 2) {
    const BenchRecord& elem = out.records[i];
    const BenchRecord& orac = out.records[i + 1];
    CHECK(elem.strategy == "elementary");
    CHECK(orac.strategy == "oracle");
    CHECK(elem.status == "ok");
    CHECK(orac.status == "ok");
    CHECK(elem.seed == orac.seed);
    REQUIRE(elem.count.has_value());
    REQUIRE(orac.count.has_value());
    CHECK(*elem.count == *orac.count);
    CHECK(*elem.elapsed_s >= 0.0);
    CHECK(*orac.elapsed_s >= 0.0);
  }
}

TEST_CASE("oracle cells above the box cap are recorded as skipped") {
  BenchOptions opt;
  opt.sizes = {{1, 3}};
  opt.primes = {3};
  opt.box_cap = 10;  // 4^3 = 64 box points

  const BenchOutcome out = run_bench(opt);
  REQUIRE(out.records.size() == 2);
  CHECK(out.all_ok);
  CHECK(out.records[1].status == "skipped-cap");
  CHECK_FALSE(out.records[1].elapsed_s.has_value());
  CHECK_FALSE(out.records[1].count.has_value());

  std::ostringstream csv;
  write_csv(csv, out.records);
  const auto lines = testutil::split_lines(csv.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == std::string(csv_header));
  CHECK(lines[2].find(",,,skipped-cap") != std::string::npos);
}

TEST_CASE("CSV is bit-stable for a fixed seed except elapsed_s") {
  BenchOptions opt;
  opt.sizes = {{2, 3}, {1, 2}};
  opt.primes = {2, 5};
  opt.trials = 2;
  opt.seed = 99;

  const auto strip_elapsed = [](const std::vector<BenchRecord>& records) {
    std::ostringstream csv;
    std::vector<BenchRecord> scrubbed = records;
    for (BenchRecord& r : scrubbed) r.elapsed_s.reset();
    write_csv(csv, scrubbed);
    return csv.str();
  };

  CHECK(strip_elapsed(run_bench(opt).records) == strip_elapsed(run_bench(opt).records));
}

TEST_CASE("elapsed formatting") {
  CHECK(format_elapsed(0.25) == "0.250000000");
  CHECK(format_elapsed(0.0) == "0.000000000");
}
