#pragma once
// Alternating integer 3-forms on H = Z^beta, their realization by chains of
// zero-framed Borromean surgeries, the graded ring they induce, and the
// classification of small-beta forms over prime fields.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ms3 {

/// Alternating trilinear form on Z^beta, stored by its values on strictly
/// increasing index triples (0-based).
struct AltForm {
  int beta = 0;
  std::map<std::array<int, 3>, long long> coeffs;

  AltForm() = default;
  explicit AltForm(int beta);

  /// Value on (ei,ej,ek) in any index order; sign tracks the permutation,
  /// repeated indices give zero.
  long long get(int i, int j, int k) const;
  /// Sets the coefficient on the sorted triple underlying (i,j,k).
  void set(int i, int j, int k, long long n);

  bool operator==(const AltForm&) const = default;
};

/// mu(x,y,z): each coefficient weighs the 3x3 minor of the triple's rows.
long long eval_alt(const AltForm& mu, std::span<const long long> x, std::span<const long long> y,
                   std::span<const long long> z);

/// Bo(n): n parallel zero-framed borromean chains on one index triple.
/// Negative n flips the orientation of one strand.
struct BoTriple {
  std::array<int, 3> indices;  // strictly increasing, 0-based
  long long n = 0;
  bool operator==(const BoTriple&) const = default;
};

struct BoPlan {
  int components = 0;
  std::vector<BoTriple> triples;  // at most one record per index triple
  bool operator==(const BoPlan&) const = default;
};

/// The form of a plan: coefficient n on each listed triple.
AltForm mu_of_boplan(const BoPlan& p);

/// One Bo(n) record per nonzero coefficient; components = beta.
BoPlan realize_integral(const AltForm& mu);

/// Ring of mu on H: degree 1 is H^* with basis r_i, degree 2 is H with basis
/// e_i, degree 3 is generated by eps3. Products: r_i r_j = sum_k mu(i,j,k) e_k,
/// r_i e_k = delta_{ik} eps3, and r_i r_j r_k = mu(i,j,k) eps3.
struct GradedRing {
  int beta = 0;
  long long modulus = 0;  // 0 means integer coefficients
  std::vector<std::vector<std::vector<long long>>> deg1x1;  // [i][j] -> H vector
  std::vector<std::vector<long long>> deg1x2;               // [i][k] -> eps3 coefficient
};

GradedRing build_ring(const AltForm& mu, long long modulus = 0);

/// Rank of the contraction x -> mu(x,-,-) over F_p.
int contraction_rank(const AltForm& mu, int p);

enum class StandardFormLabel { zero, single_block, double_block };

/// Classifies mu over F_p up to basis change for beta <= 5, p in {3,5}:
/// zero, one block e123, or two blocks e123 + e145. Decided by the
/// contraction rank (0, 3 or 5); certified against full orbit enumeration
/// over F_3 in the tests.
StandardFormLabel standard_class_small_beta(const AltForm& mu, int p);

}  // namespace ms3
