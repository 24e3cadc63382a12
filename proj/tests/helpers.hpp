#pragma once
// Reference implementations used to cross-check the library. Everything here
// is written in the most direct way possible (plain loops, explicit
// expansions, exhaustive enumeration) and shares no algorithmic machinery
// with the code under test.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ms3/f2.hpp"
#include "ms3/forms.hpp"

namespace oracle {

// nu(x,y,z) by expanding trilinearity over every set-bit triple.
inline int eval(const ms3::SymTrilinearForm& f, uint64_t x, uint64_t y, uint64_t z) {
  int rho = f.rank();
  int acc = 0;
  for (int i = 0; i < rho; ++i) {
    if (!((x >> i) & 1)) continue;
    for (int j = 0; j < rho; ++j) {
      if (!((y >> j) & 1)) continue;
      for (int k = 0; k < rho; ++k)
        if ((z >> k) & 1) acc ^= f.get(i, j, k) ? 1 : 0;
    }
  }
  return acc;
}

// The degree-1 identity checked on every vector pair, not just basis pairs.
inline bool pw_all_pairs(const ms3::SymTrilinearForm& f, uint64_t w) {
  uint64_t n = uint64_t{1} << f.rank();
  for (uint64_t x = 0; x < n; ++x)
    for (uint64_t y = 0; y < n; ++y)
      if (eval(f, w, x, y) != (eval(f, x, x, y) ^ eval(f, x, y, y))) return false;
  return true;
}

// Matrices are held as column masks: cols[c] is the image of basis vector c.
inline uint64_t apply_cols(const std::vector<uint64_t>& cols, uint64_t v) {
  uint64_t out = 0;
  for (size_t c = 0; c < cols.size(); ++c)
    if ((v >> c) & 1) out ^= cols[c];
  return out;
}

// Independence test by XOR-basis insertion keyed on the highest set bit.
inline bool invertible_cols(const std::vector<uint64_t>& cols, int n) {
  uint64_t basis[64] = {};
  int inserted = 0;
  for (int c = 0; c < n; ++c) {
    uint64_t v = cols[c];
    while (v) {
      int b = 63 - std::countl_zero(v);
      if (!basis[b]) {
        basis[b] = v;
        ++inserted;
        break;
      }
      v ^= basis[b];
    }
    if (!v) return false;
  }
  return inserted == n;
}

// Every invertible rho x rho matrix, by filtering all 2^(rho^2) bit patterns.
inline std::vector<std::vector<uint64_t>> all_invertible(int rho) {
  std::vector<std::vector<uint64_t>> out;
  uint64_t total = uint64_t{1} << (rho * rho);
  for (uint64_t bits = 0; bits < total; ++bits) {
    std::vector<uint64_t> cols(rho);
    for (int c = 0; c < rho; ++c) cols[c] = (bits >> (c * rho)) & ((uint64_t{1} << rho) - 1);
    if (invertible_cols(cols, rho)) out.push_back(std::move(cols));
  }
  return out;
}

inline std::vector<std::vector<uint64_t>> all_fixing(int rho, uint64_t w) {
  std::vector<std::vector<uint64_t>> out;
  for (auto& cols : all_invertible(rho))
    if (apply_cols(cols, w) == w) out.push_back(cols);
  return out;
}

// pullback(f, g)(i,j,k) = f(g e_i, g e_j, g e_k), computed via eval.
inline ms3::SymTrilinearForm pullback(const ms3::SymTrilinearForm& f,
                                      const std::vector<uint64_t>& cols) {
  int rho = f.rank();
  ms3::SymTrilinearForm out(rho);
  for (int i = 0; i < rho; ++i)
    for (int j = i; j < rho; ++j)
      for (int k = j; k < rho; ++k)
        if (eval(f, cols[i], cols[j], cols[k])) out.set(i, j, k, true);
  return out;
}

// Serialized-bit order used for orbit minima: the lowest differing multiset
// bit decides and 0 precedes 1.
inline bool lex_less(uint64_t a, uint64_t b) {
  uint64_t diff = a ^ b;
  if (!diff) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

struct OrbitClass {
  uint64_t rep = 0;  // lex-least packed form of the orbit
  uint64_t size = 0;
};

// Full-scan orbit partition of {packed forms satisfying the all-pairs
// identity} under the given matrix list. No BFS, no action caching: every
// group element is applied to every form.
inline std::vector<OrbitClass> orbit_partition(int rho, uint64_t w,
                                               const std::vector<std::vector<uint64_t>>& group) {
  int m = ms3::multiset_count(rho);
  uint64_t total = uint64_t{1} << m;
  std::vector<uint64_t> solutions;
  for (uint64_t bits = 0; bits < total; ++bits)
    if (pw_all_pairs(ms3::SymTrilinearForm::from_packed(rho, bits), w)) solutions.push_back(bits);

  std::vector<OrbitClass> classes;
  std::vector<char> seen(total, 0);
  for (uint64_t start : solutions) {
    if (seen[start]) continue;
    auto f = ms3::SymTrilinearForm::from_packed(rho, start);
    std::vector<uint64_t> orbit;
    for (const auto& g : group) {
      uint64_t img = pullback(f, g).packed();
      if (!seen[img]) {
        seen[img] = 1;
        orbit.push_back(img);
      }
    }
    OrbitClass cls;
    cls.rep = orbit.front();
    for (uint64_t v : orbit)
      if (lex_less(v, cls.rep)) cls.rep = v;
    cls.size = orbit.size();
    classes.push_back(cls);
  }
  return classes;
}

}  // namespace oracle

namespace testutil {

inline std::vector<uint64_t> cols_of(const ms3::F2Matrix& g) {
  std::vector<uint64_t> cols(g.cols());
  for (int c = 0; c < g.cols(); ++c) cols[c] = g.column(c).bits();
  return cols;
}

inline ms3::F2Matrix matrix_from_cols(const std::vector<uint64_t>& cols, int n) {
  ms3::F2Matrix g(n, n);
  for (int c = 0; c < n; ++c) g.set_column(c, ms3::F2Vector(n, cols[c]));
  return g;
}

// Uniform random invertible matrix by rejection on the reference test.
inline ms3::F2Matrix random_gl(int rho, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> bits(0, (uint64_t{1} << rho) - 1);
  for (;;) {
    std::vector<uint64_t> cols(rho);
    for (auto& c : cols) c = bits(rng);
    if (oracle::invertible_cols(cols, rho)) return matrix_from_cols(cols, rho);
  }
}

inline ms3::F2Vector random_vector(int rho, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> bits(0, (uint64_t{1} << rho) - 1);
  return ms3::F2Vector(rho, bits(rng));
}

}  // namespace testutil
