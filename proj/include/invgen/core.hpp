#pragma once

// Core types for diagonal actions of G = (Z/p)^k on C[x_1..x_n]: the k x n
// weight matrix over Z/p (rows = group generators, columns = variables),
// exponent vectors of monomials, and minimal generating sets. The action
// g_i . x_j = mu_p^{w_ij} x_j never needs the root of unity materialized;
// everything reduces to arithmetic on W mod p.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace invgen {

// ----------------------------------------------------------------- errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeModulus : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class RankDeficient : public Error {
 public:
  using Error::Error;
};
class InvalidColumn : public Error {
 public:
  using Error::Error;
};
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};
class OverflowError : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------- checked arithmetic

// Exponent arithmetic is bounded: overflow throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflows int64");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflows int64");
  return r;
}

// base^exp, stopping as soon as the running product exceeds cap.
// Returns false (and leaves *out untouched) once the cap is passed.
inline bool pow_within(std::uint64_t base, std::size_t exp, std::uint64_t cap, std::uint64_t* out = nullptr) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base) return false;
    acc *= base;
    if (acc > cap) return false;
  }
  if (out != nullptr) *out = acc;
  return true;
}

// Canonical representative of v mod p in [0, p-1].
inline std::int64_t mod_canon(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return r;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace detail

// Deterministic Miller-Rabin; the fixed witness set decides primality
// exactly for every 64-bit input.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const std::uint64_t u = static_cast<std::uint64_t>(n);
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (u % sp == 0) return u == sp;
  }
  std::uint64_t d = u - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, u);
      if (x == u - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- matrix

// Dense row-major matrix over Z (reduced mod p where the operation says so).
struct WeightMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;  // rows * cols, row-major

  WeightMatrix() = default;
  WeightMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  static WeightMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rws) {
    if (rws.empty() || rws.front().empty()) throw DimensionMismatch("weight matrix needs at least one row and one column");
    WeightMatrix w(rws.size(), rws.front().size());
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (rws[i].size() != w.cols) throw DimensionMismatch("weight matrix rows have unequal lengths");
      std::copy(rws[i].begin(), rws[i].end(), w.entries.begin() + static_cast<std::ptrdiff_t>(i * w.cols));
    }
    return w;
  }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

  const std::int64_t* row(std::size_t i) const { return entries.data() + i * cols; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

// ------------------------------------------------------ exponent vectors

using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;

inline Exponent degree(const ExponentVector& a) {
  Exponent d = 0;
  for (Exponent c : a) d = checked_add(d, c);
  return d;
}

// g properly divides m when g <= m componentwise and g != m.
inline bool divides(const ExponentVector& g, const ExponentVector& m) {
  if (g.size() != m.size()) return false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] > m[j]) return false;
  }
  return true;
}

// Ordering used everywhere monomials are listed: ascending total degree,
// ties x1-major, so x1^p prints before x2^p and x*y*z^2 before x^2*y^2*z.
inline bool monomial_less(const ExponentVector& a, const ExponentVector& b) {
  const Exponent da = degree(a);
  const Exponent db = degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// Minimal monomial generators of the invariant ring, kept sorted and
// duplicate-free under monomial_less.
struct GeneratingSet {
  std::vector<ExponentVector> generators;

  std::size_t size() const { return generators.size(); }
  bool empty() const { return generators.empty(); }

  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;
};

// In-place monomial_less sort; degrees are computed once and the payload
// vectors move exactly once, via an index permutation. When (degree,
// components) packs into 64 bits the comparison runs on scalar keys, with
// components stored inverted so that ascending keys give the x1-major
// tie-break.
inline void sort_monomials(std::vector<ExponentVector>& v) {
  const std::size_t m = v.size();
  if (m < 2) return;
  const std::size_t n = v[0].size();

  std::vector<Exponent> degs(m);
  Exponent max_comp = 0;
  Exponent max_deg = 0;
  bool uniform = true;
  for (std::size_t i = 0; i < m; ++i) {
    uniform = uniform && v[i].size() == n;
    degs[i] = degree(v[i]);
    max_deg = std::max(max_deg, degs[i]);
    for (const Exponent c : v[i]) max_comp = std::max(max_comp, c);
  }

  const unsigned comp_bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(max_comp)));
  const unsigned deg_bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(max_deg)));
  if (uniform && n * comp_bits + deg_bits <= 64) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keys(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t key = static_cast<std::uint64_t>(degs[i]);
      for (const Exponent c : v[i]) key = (key << comp_bits) | static_cast<std::uint64_t>(max_comp - c);
      keys[i] = {key, static_cast<std::uint32_t>(i)};
    }
    std::sort(keys.begin(), keys.end());
    std::vector<ExponentVector> out(m);
    for (std::size_t r = 0; r < m; ++r) out[r] = std::move(v[keys[r].second]);
    v = std::move(out);
    return;
  }

  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return std::lexicographical_compare(v[b].begin(), v[b].end(), v[a].begin(), v[a].end());
  });
  std::vector<ExponentVector> out(m);
  for (std::size_t r = 0; r < m; ++r) out[r] = std::move(v[idx[r]]);
  v = std::move(out);
}

inline GeneratingSet make_generating_set(std::vector<ExponentVector> gens) {
  sort_monomials(gens);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GeneratingSet{std::move(gens)};
}

// ------------------------------------------------------------ action spec

// The whole action: p together with the weight matrix. k and n are the
// matrix dimensions; a normalized spec has canonical entries and full row
// rank, so k <= n.
struct ActionSpec {
  std::int64_t p = 2;
  WeightMatrix weights;

  std::size_t k() const { return weights.rows; }
  std::size_t n() const { return weights.cols; }

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

// Canonicalizes entries into [0, p-1] and drops rows that are Z/p-linear
// combinations of earlier ones. Row removal keeps ker(W mod p) and hence
// the invariant ring; an all-zero matrix legally normalizes to zero rows.
inline ActionSpec normalize(const ActionSpec& raw) {
  if (!is_prime(raw.p)) throw NonPrimeModulus("modulus " + std::to_string(raw.p) + " is not prime");
  const WeightMatrix& w = raw.weights;
  // zero rows are legal (a rank-0 action, e.g. re-normalizing a zero matrix)
  if (w.cols == 0 || w.entries.size() != w.rows * w.cols)
    throw DimensionMismatch("weight matrix must be k x n with n >= 1");
  const std::int64_t p = raw.p;

  // Reject sizes whose arithmetic could wrap, before any of it runs: seed
  // combination sums are bounded by (p-1) * (n-k) * p (taken with the
  // worst case n-k = n, since k is not known until after elimination),
  // invariance dot products and elimination cross-products by n * (p-1)^2.
  const std::int64_t n64 = static_cast<std::int64_t>(w.cols);
  checked_mul(checked_mul(p - 1, n64), p);
  checked_mul(n64, checked_mul(p - 1, p - 1));

  WeightMatrix canon(w.rows, w.cols);
  for (std::size_t i = 0; i < w.entries.size(); ++i) canon.entries[i] = mod_canon(w.entries[i], p);

  // Echelon sweep over the rows; a row reduced to zero by its predecessors
  // is dropped. Cross-multiplication elimination keeps everything in Z/p
  // without inverses.
  struct EchRow {
    std::vector<std::int64_t> v;
    std::size_t lead;
  };
  std::vector<EchRow> echelon;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < canon.rows; ++i) {
    std::vector<std::int64_t> v(canon.row(i), canon.row(i) + canon.cols);
    for (const EchRow& e : echelon) {
      const std::int64_t c = v[e.lead];
      if (c == 0) continue;
      const std::int64_t lead_val = e.v[e.lead];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod_canon(v[j] * lead_val - e.v[j] * c, p);
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (nz == v.end()) continue;
    const std::size_t lead = static_cast<std::size_t>(nz - v.begin());
    echelon.push_back(EchRow{std::move(v), lead});
    kept.push_back(i);
  }

  WeightMatrix reduced(kept.size(), canon.cols);
  for (std::size_t r = 0; r < kept.size(); ++r)
    std::copy(canon.row(kept[r]), canon.row(kept[r]) + canon.cols, reduced.entries.begin() + static_cast<std::ptrdiff_t>(r * canon.cols));

  return ActionSpec{p, std::move(reduced)};
}

// ------------------------------------------------------------- formatting

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

// Product notation, e.g. (1,1,2) over (x,y,z) -> "x*y*z^2"; the zero
// exponent vector renders as "1".
inline std::string format_monomial(const ExponentVector& alpha, const std::vector<std::string>& names) {
  if (alpha.size() != names.size()) throw DimensionMismatch("variable name list does not match exponent length");
  std::string out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[j];
    if (alpha[j] != 1) {
      out += '^';
      out += std::to_string(alpha[j]);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace invgen
