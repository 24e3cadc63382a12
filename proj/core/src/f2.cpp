#include "ms3/f2.hpp"

#include <deque>
#include <unordered_set>

namespace ms3 {

namespace {

// Row echelon form in place; returns pivot column per eliminated row.
// Pivots are chosen lowest-column-first, scanning rows top down, so the
// result is deterministic for a given input.
std::vector<int> echelon(std::vector<uint64_t>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if ((rows[i] >> c) & 1) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const F2Matrix& m) {
  std::vector<uint64_t> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows[r] = m.row_bits(r);
  return static_cast<int>(echelon(rows, m.cols()).size());
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
  std::vector<uint64_t> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows[r] = m.row_bits(r);
  std::vector<int> pivots = echelon(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<F2Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    F2Vector v(m.cols());
    v.set(f, true);
    for (size_t r = 0; r < pivots.size(); ++r) {
      if ((rows[r] >> f) & 1) v.set(pivots[r], true);
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<F2Matrix> inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  // Augmented elimination on [m | I].
  std::vector<uint64_t> left(n), right(n);
  for (int r = 0; r < n; ++r) {
    left[r] = m.row_bits(r);
    right[r] = uint64_t{1} << r;
  }
  int row = 0;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = row; i < n; ++i) {
      if ((left[i] >> c) & 1) { sel = i; break; }
    }
    if (sel < 0) return std::nullopt;
    std::swap(left[row], left[sel]);
    std::swap(right[row], right[sel]);
    for (int i = 0; i < n; ++i) {
      if (i != row && ((left[i] >> c) & 1)) {
        left[i] ^= left[row];
        right[i] ^= right[row];
      }
    }
    ++row;
  }
  F2Matrix inv(n, n);
  for (int r = 0; r < n; ++r) inv.set_row(r, right[r]);
  return inv;
}

std::vector<F2Matrix> group_generators(int rho, std::optional<F2Vector> fixed) {
  if (rho < 1 || rho > 6) throw std::invalid_argument("group_generators: rho out of range");
  if (fixed && fixed->dim() != rho)
    throw std::invalid_argument("group_generators: fixed vector has wrong dimension");
  if (fixed && fixed->is_zero())
    throw std::invalid_argument("group_generators: fixed vector must be nonzero");

  if (!fixed) {
    if (rho == 1) return {F2Matrix::identity(1)};
    // Cyclic permutation and one transvection generate GL(rho,2).
    F2Matrix cycle(rho, rho);
    for (int i = 0; i < rho; ++i) cycle.set((i + 1) % rho, i, true);
    F2Matrix transvection = F2Matrix::identity(rho);
    transvection.set(0, 1, true);
    return {cycle, transvection};
  }

  // Stabilizer of e1 is the block group [[1,b],[0,D]]; generators are the
  // row transvections I + E_{1j} together with GL(rho-1,2) embedded in the
  // lower-right block. An arbitrary nonzero fixed vector is handled by
  // conjugating with any h mapping e1 to it.
  std::vector<F2Matrix> stab;
  for (int j = 1; j < rho; ++j) {
    F2Matrix t = F2Matrix::identity(rho);
    t.set(0, j, true);
    stab.push_back(t);
  }
  if (rho >= 2) {
    for (const F2Matrix& g : group_generators(rho - 1)) {
      F2Matrix emb = F2Matrix::identity(rho);
      for (int r = 0; r < rho - 1; ++r)
        for (int c = 0; c < rho - 1; ++c)
          emb.set(r + 1, c + 1, g.get(r, c));
      stab.push_back(emb);
    }
  }
  if (stab.empty()) stab.push_back(F2Matrix::identity(rho));

  if (*fixed == F2Vector::unit(rho, 0)) return stab;

  // Complete fixed to a basis, greedily extending with unit vectors.
  F2Matrix h(rho, rho);
  h.set_column(0, *fixed);
  std::vector<uint64_t> span_rows = {fixed->bits()};
  int filled = 1;
  for (int i = 0; i < rho && filled < rho; ++i) {
    std::vector<uint64_t> trial = span_rows;
    trial.push_back(uint64_t{1} << i);
    if (static_cast<int>(echelon(trial, rho).size()) > filled) {
      h.set_column(filled, F2Vector::unit(rho, i));
      span_rows.push_back(uint64_t{1} << i);
      ++filled;
    }
  }
  F2Matrix h_inv = *inverse(h);
  std::vector<F2Matrix> out;
  out.reserve(stab.size());
  for (const F2Matrix& g : stab) out.push_back(h.mul(g).mul(h_inv));
  return out;
}

std::vector<F2Matrix> group_closure(std::span<const F2Matrix> gens) {
  if (gens.empty()) throw std::invalid_argument("group_closure: empty generating set");
  int n = gens[0].rows();
  std::vector<F2Matrix> elements;
  std::unordered_set<uint64_t> seen;
  std::deque<F2Matrix> queue;

  F2Matrix id = F2Matrix::identity(n);
  seen.insert(matrix_key(id));
  elements.push_back(id);
  queue.push_back(id);

  while (!queue.empty()) {
    F2Matrix cur = queue.front();
    queue.pop_front();
    for (const F2Matrix& g : gens) {
      F2Matrix next = cur.mul(g);
      if (seen.insert(matrix_key(next)).second) {
        elements.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return elements;
}

uint64_t matrix_key(const F2Matrix& m) {
  if (m.rows() > 8 || m.cols() > 8) throw std::invalid_argument("matrix_key: matrix too large");
  uint64_t key = 0;
  for (int r = 0; r < m.rows(); ++r) key |= m.row_bits(r) << (8 * r);
  return key;
}

}  // namespace ms3
