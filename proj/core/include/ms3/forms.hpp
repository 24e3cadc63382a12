#pragma once
// Symmetric trilinear forms over GF(2) with a distinguished orientation
// class w. A form nu of rank rho stores one bit per multiset {i<=j<=k} of
// basis indices and together with w describes the full ring structure: the
// degree-two space is identified with the dual of the degree-one space, and
// all products are recovered from nu.
//
// Indices in this API are 0-based; the serialized formats are 1-based.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ms3/f2.hpp"

namespace ms3 {

/// Number of multisets {i<=j<=k} from rho indices: C(rho+2,3).
int multiset_count(int rho);

/// Colex rank of the multiset {i<=j<=k}, 0-based.
int multiset_index(int i, int j, int k);

/// Inverse of multiset_index.
std::array<int, 3> multiset_at(int rho, int idx);

/// Symmetric trilinear form over GF(2), one bit per index multiset.
/// rank <= 6 keeps the bit table inside one word (packed()).
class SymTrilinearForm {
 public:
  SymTrilinearForm() = default;
  explicit SymTrilinearForm(int rho);

  /// Builds a form from 1-based sorted triples, mirroring the serialized format.
  static SymTrilinearForm from_triples(int rho, std::initializer_list<std::array<int, 3>> triples);

  int rank() const { return rho_; }
  bool get(int i, int j, int k) const;
  void set(int i, int j, int k, bool v);

  /// Bit m of the word is the value on the multiset with colex rank m.
  uint64_t packed() const;
  static SymTrilinearForm from_packed(int rho, uint64_t bits);

  /// Sorted 1-based triples carrying a nonzero value.
  std::vector<std::array<int, 3>> triples() const;

  bool operator==(const SymTrilinearForm&) const = default;

 private:
  int rho_ = 0;
  std::vector<uint8_t> bits_;
};

/// nu(x,y,z), expanded over all ordered index triples.
int eval(const SymTrilinearForm& f, const F2Vector& x, const F2Vector& y, const F2Vector& z);

/// A form with its orientation class. w = 0 describes the orientable case.
struct MsDescriptor {
  SymTrilinearForm form;
  F2Vector w;

  MsDescriptor() = default;
  MsDescriptor(SymTrilinearForm f, F2Vector w_) : form(std::move(f)), w(w_) {
    if (w.dim() != form.rank()) throw std::invalid_argument("MsDescriptor: w dimension mismatch");
  }
  int rank() const { return form.rank(); }
  bool operator==(const MsDescriptor&) const = default;
};

/// Basis pairs (i<=j) violating nu(w,ei,ej) = nu(ei,ei,ej) + nu(ei,ej,ej).
/// Both sides are additive in each slot over GF(2), so the identity holds for
/// all vectors exactly when it holds on basis pairs; the reduction itself is
/// exercised by the tests.
std::vector<std::pair<int, int>> pw_violations(const SymTrilinearForm& f, const F2Vector& w);

bool check_pw(const SymTrilinearForm& f, const F2Vector& w);
inline bool check_pw(const MsDescriptor& d) { return check_pw(d.form, d.w); }

/// Matrix of the squaring map x -> x^2 into the dual basis: Q[j][i] = nu(i,i,j).
F2Matrix squaring_matrix(const SymTrilinearForm& f);

/// Functional of triple self-products: entry i is nu(i,i,i).
F2Vector cube_functional(const SymTrilinearForm& f);

/// Matrix of the pairing (x,y) -> nu(w,x,y). Alternating whenever check_pw holds.
F2Matrix w_pairing(const SymTrilinearForm& f, const F2Vector& w);

/// Form g^*nu with (g^*nu)(x,y,z) = nu(gx,gy,gz). Right action:
/// pullback(pullback(f,g),h) = pullback(f, g*h). Throws if g is singular.
SymTrilinearForm pullback(const SymTrilinearForm& f, const F2Matrix& g);

/// Dimension of the null space of the symmetrized product map sending the
/// multiset {i<=j} to the functional z -> nu(i,j,z). Always at least
/// C(rho+1,2) - rho.
int cup_kernel_dim(const SymTrilinearForm& f);

/// Witness g with pullback(b.form, g) = a.form and g*(a.w) = b.w, if one
/// exists. Ranks must agree. Canonical-form comparison is used up to rank 4;
/// larger ranks fall back to column-by-column backtracking.
std::optional<F2Matrix> isomorphic(const MsDescriptor& a, const MsDescriptor& b);

}  // namespace ms3
