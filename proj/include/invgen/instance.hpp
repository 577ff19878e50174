#pragma once

// Instance files and output rendering. Two interchangeable encodings:
//
//   JSON   {"p": 3, "weights": [[1,0,1],[0,1,1]], "names": ["x","y","z"]}
//   text   line 1 "p k n", then k rows of n integers, then an optional
//          trailing "names x y z" line; blank lines and #-comments skipped
//
// Either parser accepts the other's round-tripped output.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invgen/core.hpp"

namespace invgen {

inline constexpr std::size_t max_instance_cells = 10'000'000;

struct InstanceFile {
  std::int64_t p = 2;
  WeightMatrix weights;
  std::vector<std::string> names;  // empty -> x1..xn

  ActionSpec spec() const { return ActionSpec{p, weights}; }

  std::vector<std::string> variable_names() const { return names.empty() ? default_names(weights.cols) : names; }

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

namespace detail {

inline void check_instance_shape(std::size_t k, std::size_t n, const std::vector<std::string>& names) {
  if (k == 0 || n == 0) throw ParseError("instance needs k >= 1 rows and n >= 1 columns");
  if (k > max_instance_cells / n) throw ParseError("instance matrix is too large");
  if (!names.empty() && names.size() != n) throw ParseError("names list must have one entry per variable");
}

}  // namespace detail

inline InstanceFile parse_instance_json(std::string_view text) {
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ParseError("instance is not a JSON object");
  if (!doc.contains("p") || !doc["p"].is_number_integer()) throw ParseError("missing integer field \"p\"");
  if (!doc.contains("weights") || !doc["weights"].is_array() || doc["weights"].empty())
    throw ParseError("missing non-empty array field \"weights\"");

  InstanceFile inst;
  inst.p = doc["p"].get<std::int64_t>();

  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : doc["weights"]) {
    if (!row.is_array() || row.empty()) throw ParseError("weight rows must be non-empty arrays");
    std::vector<std::int64_t> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw ParseError("weight entries must be integers");
      r.push_back(cell.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw ParseError("\"names\" must be an array of strings");
    for (const auto& nm : doc["names"]) {
      if (!nm.is_string()) throw ParseError("\"names\" must be an array of strings");
      inst.names.push_back(nm.get<std::string>());
    }
  }
  try {
    inst.weights = WeightMatrix::from_rows(rows);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
  detail::check_instance_shape(inst.weights.rows, inst.weights.cols, inst.names);
  return inst;
}

inline InstanceFile parse_instance_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw ParseError("empty instance");

  const auto parse_i64 = [](const std::string& tok) {
    try {
      std::size_t used = 0;
      const std::int64_t v = std::stoll(tok, &used);
      if (used != tok.size()) throw ParseError("bad integer token \"" + tok + "\"");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("bad integer token \"" + tok + "\"");
    }
  };

  std::istringstream head(lines[0]);
  std::string pt, kt, nt, extra;
  if (!(head >> pt >> kt >> nt) || (head >> extra)) throw ParseError("header line must be \"p k n\"");
  InstanceFile inst;
  inst.p = parse_i64(pt);
  const std::int64_t k64 = parse_i64(kt);
  const std::int64_t n64 = parse_i64(nt);
  if (k64 < 1 || n64 < 1) throw ParseError("instance needs k >= 1 rows and n >= 1 columns");
  const std::size_t k = static_cast<std::size_t>(k64);
  const std::size_t n = static_cast<std::size_t>(n64);
  detail::check_instance_shape(k, n, {});

  if (lines.size() < 1 + k) throw ParseError("expected " + std::to_string(k) + " matrix rows");
  inst.weights = WeightMatrix(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    std::istringstream row(lines[1 + i]);
    std::string tok;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(row >> tok)) throw ParseError("row " + std::to_string(i + 1) + " has fewer than n entries");
      inst.weights(i, j) = parse_i64(tok);
    }
    if (row >> tok) throw ParseError("row " + std::to_string(i + 1) + " has more than n entries");
  }

  std::size_t next = 1 + k;
  if (next < lines.size()) {
    std::istringstream tail(lines[next]);
    std::string kw;
    tail >> kw;
    if (kw != "names") throw ParseError("unexpected trailing line \"" + lines[next] + "\"");
    std::string nm;
    while (tail >> nm) inst.names.push_back(nm);
    if (inst.names.size() != n) throw ParseError("names line must list one name per variable");
    ++next;
  }
  if (next != lines.size()) throw ParseError("unexpected trailing content");
  return inst;
}

inline InstanceFile parse_instance(std::string_view text) {
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw ParseError("empty instance");
  return text[start] == '{' ? parse_instance_json(text) : parse_instance_text(text);
}

inline std::string to_json(const InstanceFile& inst) {
  nlohmann::json doc;
  doc["p"] = inst.p;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.weights.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < inst.weights.cols; ++j) row.push_back(inst.weights(i, j));
    rows.push_back(std::move(row));
  }
  doc["weights"] = std::move(rows);
  if (!inst.names.empty()) doc["names"] = inst.names;
  return doc.dump() + "\n";
}

inline std::string to_text(const InstanceFile& inst) {
  std::ostringstream out;
  out << inst.p << ' ' << inst.weights.rows << ' ' << inst.weights.cols << '\n';
  for (std::size_t i = 0; i < inst.weights.rows; ++i) {
    for (std::size_t j = 0; j < inst.weights.cols; ++j) out << (j ? " " : "") << inst.weights(i, j);
    out << '\n';
  }
  if (!inst.names.empty()) {
    out << "names";
    for (const std::string& nm : inst.names) out << ' ' << nm;
    out << '\n';
  }
  return out.str();
}

// One monomial per line, in generating-set order.
inline std::string render_text(const GeneratingSet& gens, const std::vector<std::string>& names) {
  std::string out;
  for (const ExponentVector& g : gens.generators) {
    out += format_monomial(g, names);
    out += '\n';
  }
  return out;
}

inline std::string render_json(const GeneratingSet& gens) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ExponentVector& g : gens.generators) arr.push_back(g);
  return arr.dump() + "\n";
}

inline GeneratingSet parse_generating_set_json(std::string_view text) {
  const nlohmann::json arr = nlohmann::json::parse(text, nullptr, false);
  if (arr.is_discarded() || !arr.is_array()) throw ParseError("generating set is not a JSON array");
  std::vector<ExponentVector> gens;
  for (const auto& item : arr) {
    if (!item.is_array()) throw ParseError("generators must be arrays of exponents");
    ExponentVector g;
    for (const auto& cell : item) {
      if (!cell.is_number_integer()) throw ParseError("exponents must be integers");
      g.push_back(cell.get<std::int64_t>());
    }
    gens.push_back(std::move(g));
  }
  return make_generating_set(std::move(gens));
}

}  // namespace invgen
