#pragma once

// Shared test plumbing: process spawning for CLI checks, temp files, and a
// deterministic instance sampler used by the property tests.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "invgen/bench.hpp"
#include "invgen/core.hpp"

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = ::pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::filesystem::path temp_file(const std::string& stem) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  return dir / (stem + "." + std::to_string(::getpid()) + "." + std::to_string(counter++));
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

inline invgen::ActionSpec spec_of(std::int64_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  return invgen::ActionSpec{p, invgen::WeightMatrix::from_rows(rows)};
}

inline invgen::ExponentVector ev(std::initializer_list<invgen::Exponent> xs) { return invgen::ExponentVector(xs); }

// Random full-rank instance drawn from bounded (p, k, n) ranges.
inline invgen::ActionSpec sample_spec(std::mt19937_64& gen, const std::vector<std::int64_t>& primes, std::size_t max_n,
                                      bool allow_k_equal_n = true) {
  const std::int64_t p = primes[gen() % primes.size()];
  const std::size_t n = 2 + gen() % (max_n - 1);
  const std::size_t kmax = allow_k_equal_n ? n : n - 1;
  const std::size_t k = 1 + gen() % kmax;
  return invgen::random_full_rank_spec(k, n, p, gen());
}

}  // namespace testutil
