// invgen: minimal monomial generating sets of invariant rings for diagonal
// actions of elementary abelian groups (Z/p)^k, with a brute-force
// cross-check and a benchmark harness.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 non-prime modulus,
// 4 enumeration cap exceeded, 5 cross-check mismatch, 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invgen/invgen.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invgen::ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<invgen::BenchSize> parse_sizes(const std::string& list) {
  std::vector<invgen::BenchSize> sizes;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t x = item.find('x');
    if (x == std::string::npos) throw invgen::ParseError("size \"" + item + "\" is not of the form KxN");
    try {
      const long k = std::stol(item.substr(0, x));
      const long n = std::stol(item.substr(x + 1));
      if (k < 1 || n < k) throw invgen::ParseError("size \"" + item + "\" needs 1 <= k <= n");
      sizes.push_back({static_cast<std::size_t>(k), static_cast<std::size_t>(n)});
    } catch (const invgen::ParseError&) {
      throw;
    } catch (...) {
      throw invgen::ParseError("size \"" + item + "\" is not of the form KxN");
    }
  }
  if (sizes.empty()) throw invgen::ParseError("no sizes given");
  return sizes;
}

std::vector<std::int64_t> parse_primes(const std::string& list) {
  std::vector<std::int64_t> primes;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::int64_t p = 0;
    try {
      p = std::stoll(item);
    } catch (...) {
      throw invgen::ParseError("prime list entry \"" + item + "\" is not an integer");
    }
    if (!invgen::is_prime(p)) throw invgen::NonPrimeModulus("modulus " + item + " is not prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw invgen::ParseError("no primes given");
  return primes;
}

int cmd_compute(const std::string& file, const std::string& format, bool check, std::uint64_t box_cap,
                std::size_t candidate_cap) {
  const invgen::InstanceFile inst = invgen::parse_instance(read_input(file));
  invgen::GeneratingSet gens = invgen::compute_generators(inst.spec(), candidate_cap);
#ifdef INVGEN_FAULT_INJECT
  // fault-injection build: drop one generator so --check must fail
  if (!gens.generators.empty()) gens.generators.pop_back();
#endif
  if (format == "json") {
    std::cout << invgen::render_json(gens);
  } else {
    std::cout << invgen::render_text(gens, inst.variable_names());
  }
  if (check) {
    const invgen::GeneratingSet baseline = invgen::oracle_atoms(inst.spec(), box_cap);
    if (!(baseline == gens)) {
      std::cerr << "cross-check FAILED: pipeline produced " << gens.size() << " generators, brute force " << baseline.size()
                << "\n";
      return 5;
    }
    std::cout << "VERIFIED\n";
  }
  return 0;
}

int cmd_random(std::size_t k, std::size_t n, std::int64_t p, std::uint64_t seed, const std::string& format) {
  if (k < 1 || n < 1 || k > n) throw invgen::ParseError("need 1 <= k <= n");
  const invgen::ActionSpec spec = invgen::random_full_rank_spec(k, n, p, seed);
  const invgen::InstanceFile inst{spec.p, spec.weights, {}};
  std::cout << (format == "text" ? invgen::to_text(inst) : invgen::to_json(inst));
  return 0;
}

int cmd_bench(const std::string& sizes, const std::string& primes, std::size_t trials, std::uint64_t seed,
              const std::string& csv_path, std::uint64_t box_cap, std::size_t candidate_cap) {
  invgen::BenchOptions opt;
  opt.sizes = parse_sizes(sizes);
  opt.primes = parse_primes(primes);
  opt.trials = trials;
  opt.seed = seed;
  opt.box_cap = box_cap;
  opt.candidate_cap = candidate_cap;

  const invgen::BenchOutcome outcome = invgen::run_bench(opt);
  if (csv_path.empty()) {
    invgen::write_csv(std::cout, outcome.records);
  } else {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw invgen::Error("cannot write \"" + csv_path + "\"");
    invgen::write_csv(out, outcome.records);
  }
  std::cerr << "bench: " << outcome.records.size() << " records"
            << (outcome.all_ok ? ", all cross-checks ok" : ", CROSS-CHECK MISMATCH") << "\n";
  return outcome.all_ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal monomial generators of invariant rings of diagonal (Z/p)^k actions"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute the minimal generating set for an instance file");
  std::string file;
  std::string format = "text";
  bool check = false;
  std::uint64_t box_cap = invgen::default_box_cap;
  std::size_t candidate_cap = invgen::default_candidate_cap;
  compute->add_option("file", file, "instance file (JSON or text; \"-\" for stdin)")->required();
  compute->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  compute->add_flag("--check", check, "cross-check against the brute-force baseline");
  compute->add_option("--box-cap", box_cap, "brute-force enumeration cap in box points");
  compute->add_option("--candidate-cap", candidate_cap, "candidate pool cap");

  auto* random = app.add_subcommand("random", "emit a random full-rank instance");
  std::size_t rk = 0, rn = 0;
  std::int64_t rp = 0;
  std::uint64_t rseed = 1;
  std::string rformat = "json";
  random->add_option("--k", rk, "group generators (rows)")->required();
  random->add_option("--n", rn, "variables (columns)")->required();
  random->add_option("--p", rp, "prime modulus")->required();
  random->add_option("--seed", rseed, "RNG seed");
  random->add_option("--format", rformat, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* bench = app.add_subcommand("bench", "time the pipeline against the brute-force baseline");
  std::string sizes = "2x3,2x4,2x5";
  std::string primes = "2,3,5,7,11,13";
  std::size_t trials = 1;
  std::uint64_t bseed = 1;
  std::string csv_path;
  std::uint64_t bbox_cap = invgen::default_box_cap;
  std::size_t bcand_cap = invgen::default_candidate_cap;
  bench->add_option("--sizes", sizes, "comma-separated KxN sizes");
  bench->add_option("--primes", primes, "comma-separated primes");
  bench->add_option("--trials", trials, "trials per (size, prime) cell");
  bench->add_option("--seed", bseed, "base RNG seed");
  bench->add_option("--csv", csv_path, "CSV output path (stdout when omitted)");
  bench->add_option("--box-cap", bbox_cap, "brute-force enumeration cap in box points");
  bench->add_option("--candidate-cap", bcand_cap, "candidate pool cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(compute)) return cmd_compute(file, format, check, box_cap, candidate_cap);
    if (app.got_subcommand(random)) return cmd_random(rk, rn, rp, rseed, rformat);
    if (app.got_subcommand(bench)) return cmd_bench(sizes, primes, trials, bseed, csv_path, bbox_cap, bcand_cap);
  } catch (const invgen::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invgen::NonPrimeModulus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const invgen::CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
