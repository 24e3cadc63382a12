#pragma once
// Linear algebra over GF(2) on bit-packed vectors and matrices, plus
// generating sets for GL(n,2) and for stabilizers of a fixed vector.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ms3 {

/// Vector over GF(2), dimension <= 64, packed into one word (bit i = entry i).
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(int dim, uint64_t bits = 0) : dim_(dim), bits_(bits) {
    if (dim < 0 || dim > 64) throw std::invalid_argument("F2Vector: dim out of range");
    if (dim < 64) bits_ &= (uint64_t{1} << dim) - 1;
  }
  static F2Vector unit(int dim, int i) { return F2Vector(dim, uint64_t{1} << i); }

  int dim() const { return dim_; }
  uint64_t bits() const { return bits_; }
  bool get(int i) const { return (bits_ >> i) & 1; }
  void set(int i, bool v) { bits_ = v ? (bits_ | (uint64_t{1} << i)) : (bits_ & ~(uint64_t{1} << i)); }
  bool is_zero() const { return bits_ == 0; }
  int weight() const { return std::popcount(bits_); }

  F2Vector operator+(const F2Vector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("F2Vector: dimension mismatch");
    return F2Vector(dim_, bits_ ^ o.bits_);
  }
  F2Vector& operator+=(const F2Vector& o) { return *this = *this + o; }
  bool operator==(const F2Vector&) const = default;

 private:
  int dim_ = 0;
  uint64_t bits_ = 0;
};

/// Dot product over GF(2).
inline int dot(const F2Vector& a, const F2Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  return std::popcount(a.bits() & b.bits()) & 1;
}

/// Matrix over GF(2); each row is a bit-packed word, cols <= 64.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    if (rows < 0 || cols < 0 || cols > 64) throw std::invalid_argument("F2Matrix: shape out of range");
  }
  static F2Matrix identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (data_[r] >> c) & 1; }
  void set(int r, int c, bool v) {
    data_[r] = v ? (data_[r] | (uint64_t{1} << c)) : (data_[r] & ~(uint64_t{1} << c));
  }
  uint64_t row_bits(int r) const { return data_[r]; }
  void set_row(int r, uint64_t bits) {
    data_[r] = cols_ < 64 ? bits & ((uint64_t{1} << cols_) - 1) : bits;
  }
  F2Vector row(int r) const { return F2Vector(cols_, data_[r]); }
  F2Vector column(int c) const {
    F2Vector v(rows_);
    for (int r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
  }
  void set_column(int c, const F2Vector& v) {
    for (int r = 0; r < rows_; ++r) set(r, c, v.get(r));
  }

  F2Vector mul(const F2Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("mul: dimension mismatch");
    F2Vector y(rows_);
    for (int r = 0; r < rows_; ++r) y.set(r, std::popcount(data_[r] & x.bits()) & 1);
    return y;
  }
  F2Matrix mul(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    F2Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
      uint64_t acc = 0;
      uint64_t bits = data_[r];
      while (bits) {
        int k = std::countr_zero(bits);
        bits &= bits - 1;
        acc ^= o.data_[k];
      }
      out.data_[r] = acc;
    }
    return out;
  }
  F2Matrix transpose() const {
    F2Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) out.set(c, r, true);
    return out;
  }

  bool operator==(const F2Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint64_t> data_;
};

int rank(const F2Matrix& m);

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// ordered by ascending free-column index. rank + kernel size = cols.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

std::optional<F2Matrix> inverse(const F2Matrix& m);

/// Generating set for GL(rho,2), or for the stabilizer {g : g*fixed = fixed}
/// when fixed is a nonzero vector. 1 <= rho <= 6. Closure sizes are certified
/// against direct enumeration in the tests.
std::vector<F2Matrix> group_generators(int rho, std::optional<F2Vector> fixed = std::nullopt);

/// BFS closure of a generating set of invertible matrices. Intended for small
/// groups (rho <= 4); the full group is materialized.
std::vector<F2Matrix> group_closure(std::span<const F2Matrix> gens);

/// Packs a square matrix (n <= 8) into a single word for hashing.
uint64_t matrix_key(const F2Matrix& m);

}  // namespace ms3
