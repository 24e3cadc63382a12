#include "ms3/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace ms3 {

namespace {

F2Matrix columns_to_matrix(int rho, const std::vector<F2Vector>& cols) {
  F2Matrix g(rho, rho);
  for (int c = 0; c < rho; ++c) g.set_column(c, cols[c]);
  return g;
}

}  // namespace

OrientableNormalization normalize_orientable(const SymTrilinearForm& f) {
  int rho = f.rank();
  F2Vector zero(rho);
  if (!check_pw(f, zero)) throw std::domain_error("normalize_orientable: Postnikov-Wu violated");

  auto B = [&](const F2Vector& x, const F2Vector& y) { return eval(f, x, x, y); };

  std::vector<F2Vector> remaining;
  for (int i = 0; i < rho; ++i) remaining.push_back(F2Vector::unit(rho, i));

  // Peel vectors with B(v,v) = 1, orthogonalizing the rest against each.
  std::vector<F2Vector> diag;
  for (;;) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](const F2Vector& v) { return B(v, v) == 1; });
    if (it == remaining.end()) break;
    F2Vector v = *it;
    remaining.erase(it);
    for (F2Vector& u : remaining)
      if (B(u, v)) u += v;
    diag.push_back(v);
  }

  // The pairing is now alternating on the span of the remainder.
  std::vector<std::pair<F2Vector, F2Vector>> pairs;
  for (;;) {
    size_t pi = remaining.size(), pj = remaining.size();
    for (size_t i = 0; i < remaining.size() && pi == remaining.size(); ++i)
      for (size_t j = i + 1; j < remaining.size(); ++j)
        if (B(remaining[i], remaining[j])) { pi = i; pj = j; break; }
    if (pi == remaining.size()) break;
    F2Vector a = remaining[pi], b = remaining[pj];
    remaining.erase(remaining.begin() + pj);
    remaining.erase(remaining.begin() + pi);
    for (F2Vector& u : remaining) {
      F2Vector adj(rho);
      if (B(u, b)) adj += a;
      if (B(u, a)) adj += b;
      u += adj;
    }
    pairs.emplace_back(a, b);
  }

  // A diagonal vector next to a hyperbolic pair spans three pairwise
  // orthogonal cube vectors (d+a, d+b, d+a+b); exhausting this rewrite leaves
  // a pure diagonal or pure hyperbolic shape.
  while (!diag.empty() && !pairs.empty()) {
    F2Vector d = diag.back();
    diag.pop_back();
    auto [a, b] = pairs.front();
    pairs.erase(pairs.begin());
    diag.push_back(d + a);
    diag.push_back(d + b);
    diag.push_back(d + a + b);
  }

  std::vector<F2Vector> cols;
  for (const F2Vector& v : diag) cols.push_back(v);
  for (const auto& [a, b] : pairs) {
    cols.push_back(a);
    cols.push_back(b);
  }
  for (const F2Vector& v : remaining) cols.push_back(v);

  OrientableNormalization out;
  out.change = columns_to_matrix(rho, cols);
  out.report = {static_cast<int>(diag.size()), static_cast<int>(pairs.size()),
                static_cast<int>(remaining.size())};
  return out;
}

NonorientableNormalization normalize_nonorientable(const SymTrilinearForm& f, const F2Vector& w) {
  int rho = f.rank();
  if (w.dim() != rho) throw std::invalid_argument("normalize_nonorientable: dimension mismatch");
  if (w.is_zero()) throw std::invalid_argument("normalize_nonorientable: w must be nonzero");
  if (!check_pw(f, w)) throw std::domain_error("normalize_nonorientable: Postnikov-Wu violated");

  auto W = [&](const F2Vector& x, const F2Vector& y) {
    F2Vector wx(rho, w.bits());
    return eval(f, wx, x, y);
  };

  // Complete w to a basis with unit vectors; everything below works with
  // vectors expressed in the original coordinates.
  std::vector<F2Vector> remaining;
  {
    F2Matrix span(1, rho);
    span.set_row(0, w.bits());
    int r = 1;
    for (int i = 0; i < rho; ++i) {
      F2Matrix trial(r + 1, rho);
      for (int t = 0; t < r; ++t)
        trial.set_row(t, t == 0 ? w.bits() : remaining[t - 1].bits());
      trial.set_row(r, uint64_t{1} << i);
      if (rank(trial) > r) {
        remaining.push_back(F2Vector::unit(rho, i));
        ++r;
      }
    }
  }

  std::vector<std::pair<F2Vector, F2Vector>> pairs;
  bool w_square_nonzero = false;

  // If W(w,-) is nonzero the first pair is (w, partner).
  {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](const F2Vector& u) { return W(w, u) == 1; });
    if (it != remaining.end()) {
      w_square_nonzero = true;
      F2Vector partner = *it;
      remaining.erase(it);
      for (F2Vector& u : remaining) {
        F2Vector adj(rho);
        if (W(u, partner)) adj += w;
        if (W(u, w)) adj += partner;
        u += adj;
      }
      pairs.emplace_back(w, partner);
    }
  }

  for (;;) {
    size_t pi = remaining.size(), pj = remaining.size();
    for (size_t i = 0; i < remaining.size() && pi == remaining.size(); ++i)
      for (size_t j = i + 1; j < remaining.size(); ++j)
        if (W(remaining[i], remaining[j])) { pi = i; pj = j; break; }
    if (pi == remaining.size()) break;
    F2Vector a = remaining[pi], b = remaining[pj];
    remaining.erase(remaining.begin() + pj);
    remaining.erase(remaining.begin() + pi);
    for (F2Vector& u : remaining) {
      F2Vector adj(rho);
      if (W(u, b)) adj += a;
      if (W(u, a)) adj += b;
      u += adj;
    }
    pairs.emplace_back(a, b);
  }

  std::vector<F2Vector> cols;
  std::vector<std::pair<int, int>> index_pairs;
  if (w_square_nonzero) {
    cols.push_back(w);
    cols.push_back(pairs[0].second);
    index_pairs.emplace_back(0, 1);
    for (size_t p = 1; p < pairs.size(); ++p) {
      index_pairs.emplace_back(static_cast<int>(cols.size()), static_cast<int>(cols.size()) + 1);
      cols.push_back(pairs[p].first);
      cols.push_back(pairs[p].second);
    }
  } else {
    cols.push_back(w);
    for (const auto& [a, b] : pairs) {
      index_pairs.emplace_back(static_cast<int>(cols.size()), static_cast<int>(cols.size()) + 1);
      cols.push_back(a);
      cols.push_back(b);
    }
  }
  for (const F2Vector& v : remaining) cols.push_back(v);

  NonorientableNormalization out;
  out.change = columns_to_matrix(rho, cols);
  out.report.sigma = 2 * static_cast<int>(pairs.size());
  out.report.w_square_nonzero = w_square_nonzero;
  out.report.pairs = std::move(index_pairs);
  return out;
}

}  // namespace ms3
