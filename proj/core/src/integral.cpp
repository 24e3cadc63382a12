#include "ms3/integral.hpp"

#include <algorithm>
#include <stdexcept>

namespace ms3 {

AltForm::AltForm(int beta_) : beta(beta_) {
  if (beta_ < 0) throw std::invalid_argument("AltForm: negative beta");
}

namespace {

// Sorts (i,j,k) and reports the permutation sign; 0 for repeated indices.
int sort_sign(std::array<int, 3>& t) {
  int sign = 1;
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[1] > t[2]) { std::swap(t[1], t[2]); sign = -sign; }
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

}  // namespace

long long AltForm::get(int i, int j, int k) const {
  std::array<int, 3> t{i, j, k};
  int sign = sort_sign(t);
  if (sign == 0) return 0;
  auto it = coeffs.find(t);
  return it == coeffs.end() ? 0 : sign * it->second;
}

void AltForm::set(int i, int j, int k, long long n) {
  std::array<int, 3> t{i, j, k};
  int sign = sort_sign(t);
  if (sign == 0) throw std::invalid_argument("AltForm::set: repeated index");
  if (t[2] >= beta) throw std::out_of_range("AltForm::set: index out of range");
  if (n == 0) {
    coeffs.erase(t);
  } else {
    coeffs[t] = sign * n;
  }
}

long long eval_alt(const AltForm& mu, std::span<const long long> x, std::span<const long long> y,
                   std::span<const long long> z) {
  if (static_cast<int>(x.size()) != mu.beta || static_cast<int>(y.size()) != mu.beta ||
      static_cast<int>(z.size()) != mu.beta)
    throw std::invalid_argument("eval_alt: dimension mismatch");
  long long acc = 0;
  for (const auto& [t, c] : mu.coeffs) {
    auto [i, j, k] = t;
    long long det = x[i] * (y[j] * z[k] - y[k] * z[j]) - y[i] * (x[j] * z[k] - x[k] * z[j]) +
                    z[i] * (x[j] * y[k] - x[k] * y[j]);
    acc += c * det;
  }
  return acc;
}

AltForm mu_of_boplan(const BoPlan& p) {
  AltForm mu(p.components);
  std::map<std::array<int, 3>, int> seen;
  for (const auto& bt : p.triples) {
    if (!(bt.indices[0] < bt.indices[1] && bt.indices[1] < bt.indices[2]))
      throw std::invalid_argument("mu_of_boplan: triple indices must be strictly increasing");
    if (bt.indices[2] >= p.components)
      throw std::out_of_range("mu_of_boplan: index out of range");
    if (seen[bt.indices]++)
      throw std::invalid_argument("mu_of_boplan: repeated triple");
    if (bt.n != 0) mu.coeffs[bt.indices] = bt.n;
  }
  return mu;
}

BoPlan realize_integral(const AltForm& mu) {
  BoPlan p;
  p.components = mu.beta;
  for (const auto& [t, n] : mu.coeffs) p.triples.push_back({t, n});
  return p;
}

GradedRing build_ring(const AltForm& mu, long long modulus) {
  if (modulus < 0) throw std::invalid_argument("build_ring: negative modulus");
  auto reduce = [&](long long v) {
    if (modulus == 0) return v;
    long long r = v % modulus;
    return r < 0 ? r + modulus : r;
  };
  GradedRing ring;
  ring.beta = mu.beta;
  ring.modulus = modulus;
  ring.deg1x1.assign(mu.beta, std::vector<std::vector<long long>>(
                                  mu.beta, std::vector<long long>(mu.beta, 0)));
  ring.deg1x2.assign(mu.beta, std::vector<long long>(mu.beta, 0));
  for (int i = 0; i < mu.beta; ++i) {
    for (int j = 0; j < mu.beta; ++j) {
      for (int k = 0; k < mu.beta; ++k) ring.deg1x1[i][j][k] = reduce(mu.get(i, j, k));
    }
    ring.deg1x2[i][i] = reduce(1);
  }
  return ring;
}

namespace {

int mod_rank(std::vector<std::vector<int>> m, int p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] % p != 0) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    // Normalize the pivot to 1 via the inverse mod p.
    int pivot = ((m[r][c] % p) + p) % p;
    int inv = 1;
    for (int t = 1; t < p; ++t) {
      if (pivot * t % p == 1) { inv = t; break; }
    }
    for (int cc = 0; cc < cols; ++cc) m[r][cc] = ((m[r][cc] * inv) % p + p) % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      int factor = m[i][c] % p;
      for (int cc = 0; cc < cols; ++cc) m[i][cc] = ((m[i][cc] - factor * m[r][cc]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

int contraction_rank(const AltForm& mu, int p) {
  if (p < 2) throw std::invalid_argument("contraction_rank: p must be a prime");
  int beta = mu.beta;
  // Rows are pairs (j<k), columns the contracted index.
  std::vector<std::vector<int>> m;
  for (int j = 0; j < beta; ++j) {
    for (int k = j + 1; k < beta; ++k) {
      std::vector<int> row(beta);
      for (int i = 0; i < beta; ++i) row[i] = static_cast<int>(((mu.get(i, j, k) % p) + p) % p);
      m.push_back(std::move(row));
    }
  }
  return mod_rank(std::move(m), p);
}

StandardFormLabel standard_class_small_beta(const AltForm& mu, int p) {
  if (p != 3 && p != 5) throw std::invalid_argument("standard_class_small_beta: p must be 3 or 5");
  if (mu.beta > 5) throw std::invalid_argument("standard_class_small_beta: beta out of range");
  switch (contraction_rank(mu, p)) {
    case 0: return StandardFormLabel::zero;
    case 3: return StandardFormLabel::single_block;
    case 5: return StandardFormLabel::double_block;
    default: throw std::logic_error("standard_class_small_beta: unexpected contraction rank");
  }
}

}  // namespace ms3
