#include "ms3/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ms3 {

int multiset_count(int rho) { return (rho + 2) * (rho + 1) * rho / 6; }

int multiset_index(int i, int j, int k) {
  // Sorted multiset {i<=j<=k} maps to the strict chain i < j+1 < k+2,
  // ranked in colex order.
  int b = j + 1;
  int c = k + 2;
  return i + b * (b - 1) / 2 + c * (c - 1) * (c - 2) / 6;
}

std::array<int, 3> multiset_at(int rho, int idx) {
  for (int k = 0; k < rho; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        if (multiset_index(i, j, k) == idx) return {i, j, k};
  throw std::out_of_range("multiset_at: index out of range");
}

namespace {

std::array<int, 3> sorted3(int i, int j, int k) {
  std::array<int, 3> s{i, j, k};
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

SymTrilinearForm::SymTrilinearForm(int rho) : rho_(rho) {
  if (rho < 0 || rho > 64) throw std::invalid_argument("SymTrilinearForm: rank out of range");
  bits_.assign(multiset_count(rho), 0);
}

SymTrilinearForm SymTrilinearForm::from_triples(int rho,
                                                std::initializer_list<std::array<int, 3>> triples) {
  SymTrilinearForm f(rho);
  for (const auto& t : triples) f.set(t[0] - 1, t[1] - 1, t[2] - 1, true);
  return f;
}

bool SymTrilinearForm::get(int i, int j, int k) const {
  auto s = sorted3(i, j, k);
  if (s[0] < 0 || s[2] >= rho_) throw std::out_of_range("SymTrilinearForm: index out of range");
  return bits_[multiset_index(s[0], s[1], s[2])];
}

void SymTrilinearForm::set(int i, int j, int k, bool v) {
  auto s = sorted3(i, j, k);
  if (s[0] < 0 || s[2] >= rho_) throw std::out_of_range("SymTrilinearForm: index out of range");
  bits_[multiset_index(s[0], s[1], s[2])] = v;
}

uint64_t SymTrilinearForm::packed() const {
  if (bits_.size() > 64) throw std::logic_error("SymTrilinearForm: rank too large to pack");
  uint64_t w = 0;
  for (size_t m = 0; m < bits_.size(); ++m)
    if (bits_[m]) w |= uint64_t{1} << m;
  return w;
}

SymTrilinearForm SymTrilinearForm::from_packed(int rho, uint64_t bits) {
  SymTrilinearForm f(rho);
  for (size_t m = 0; m < f.bits_.size(); ++m) f.bits_[m] = (bits >> m) & 1;
  return f;
}

std::vector<std::array<int, 3>> SymTrilinearForm::triples() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < rho_; ++i)
    for (int j = i; j < rho_; ++j)
      for (int k = j; k < rho_; ++k)
        if (bits_[multiset_index(i, j, k)]) out.push_back({i + 1, j + 1, k + 1});
  std::sort(out.begin(), out.end());
  return out;
}

int eval(const SymTrilinearForm& f, const F2Vector& x, const F2Vector& y, const F2Vector& z) {
  int rho = f.rank();
  if (x.dim() != rho || y.dim() != rho || z.dim() != rho)
    throw std::invalid_argument("eval: dimension mismatch");
  int acc = 0;
  uint64_t xb = x.bits();
  while (xb) {
    int a = std::countr_zero(xb);
    xb &= xb - 1;
    uint64_t yb = y.bits();
    while (yb) {
      int b = std::countr_zero(yb);
      yb &= yb - 1;
      uint64_t zb = z.bits();
      while (zb) {
        int c = std::countr_zero(zb);
        zb &= zb - 1;
        acc ^= f.get(a, b, c);
      }
    }
  }
  return acc;
}

std::vector<std::pair<int, int>> pw_violations(const SymTrilinearForm& f, const F2Vector& w) {
  if (w.dim() != f.rank()) throw std::invalid_argument("pw_violations: w dimension mismatch");
  std::vector<std::pair<int, int>> out;
  int rho = f.rank();
  for (int i = 0; i < rho; ++i) {
    for (int j = i; j < rho; ++j) {
      int lhs = 0;
      uint64_t wb = w.bits();
      while (wb) {
        int a = std::countr_zero(wb);
        wb &= wb - 1;
        lhs ^= f.get(a, i, j);
      }
      int rhs = f.get(i, i, j) ^ f.get(i, j, j);
      if (lhs != rhs) out.emplace_back(i, j);
    }
  }
  return out;
}

bool check_pw(const SymTrilinearForm& f, const F2Vector& w) { return pw_violations(f, w).empty(); }

F2Matrix squaring_matrix(const SymTrilinearForm& f) {
  int rho = f.rank();
  F2Matrix q(rho, rho);
  for (int j = 0; j < rho; ++j)
    for (int i = 0; i < rho; ++i)
      q.set(j, i, f.get(i, i, j));
  return q;
}

F2Vector cube_functional(const SymTrilinearForm& f) {
  int rho = f.rank();
  F2Vector c(rho);
  for (int i = 0; i < rho; ++i) c.set(i, f.get(i, i, i));
  return c;
}

F2Matrix w_pairing(const SymTrilinearForm& f, const F2Vector& w) {
  if (w.dim() != f.rank()) throw std::invalid_argument("w_pairing: dimension mismatch");
  int rho = f.rank();
  F2Matrix m(rho, rho);
  for (int i = 0; i < rho; ++i) {
    for (int j = 0; j < rho; ++j) {
      int v = 0;
      uint64_t wb = w.bits();
      while (wb) {
        int a = std::countr_zero(wb);
        wb &= wb - 1;
        v ^= f.get(a, i, j);
      }
      m.set(i, j, v);
    }
  }
  return m;
}

SymTrilinearForm pullback(const SymTrilinearForm& f, const F2Matrix& g) {
  int rho = f.rank();
  if (g.rows() != rho || g.cols() != rho) throw std::invalid_argument("pullback: shape mismatch");
  if (rank(g) != rho) throw std::invalid_argument("pullback: g is singular");
  std::vector<F2Vector> cols(rho);
  for (int c = 0; c < rho; ++c) cols[c] = g.column(c);
  SymTrilinearForm out(rho);
  for (int i = 0; i < rho; ++i)
    for (int j = i; j < rho; ++j)
      for (int k = j; k < rho; ++k)
        out.set(i, j, k, eval(f, cols[i], cols[j], cols[k]));
  return out;
}

int cup_kernel_dim(const SymTrilinearForm& f) {
  int rho = f.rank();
  int pairs = rho * (rho + 1) / 2;
  // Columns are pair multisets {i<=j}, rows the dual basis index z.
  F2Matrix m(rho, pairs);
  int col = 0;
  for (int i = 0; i < rho; ++i) {
    for (int j = i; j < rho; ++j, ++col) {
      for (int z = 0; z < rho; ++z) m.set(z, col, f.get(i, j, z));
    }
  }
  return pairs - rank(m);
}

}  // namespace ms3
