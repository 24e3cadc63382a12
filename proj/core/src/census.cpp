#include "ms3/census.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ms3 {

uint64_t PwSpace::packed_at(uint64_t index) const {
  uint64_t p = 0;
  for (size_t b = 0; b < basis.size(); ++b)
    if ((index >> b) & 1) p ^= basis[b];
  return p;
}

SymTrilinearForm PwSpace::form_at(uint64_t index) const {
  return SymTrilinearForm::from_packed(rho, packed_at(index));
}

uint64_t PwSpace::coord_of(uint64_t packed) const {
  uint64_t c = 0;
  for (size_t b = 0; b < free_positions.size(); ++b)
    if ((packed >> free_positions[b]) & 1) c |= uint64_t{1} << b;
  return c;
}

PwSpace enumerate_pw(int rho, const F2Vector& w) {
  if (rho < 0 || rho > 5) throw std::invalid_argument("enumerate_pw: rho out of range");
  if (w.dim() != rho) throw std::invalid_argument("enumerate_pw: w dimension mismatch");

  int M = multiset_count(rho);
  // One linear constraint per basis pair (i<=j):
  //   sum_a w_a f{a,i,j} + f{i,i,j} + f{i,j,j} = 0.
  F2Matrix constraints(rho * (rho + 1) / 2, M);
  int row = 0;
  for (int i = 0; i < rho; ++i) {
    for (int j = i; j < rho; ++j, ++row) {
      uint64_t bits = 0;
      for (int a = 0; a < rho; ++a) {
        if (!w.get(a)) continue;
        std::array<int, 3> s{a, i, j};
        std::sort(s.begin(), s.end());
        bits ^= uint64_t{1} << multiset_index(s[0], s[1], s[2]);
      }
      bits ^= uint64_t{1} << multiset_index(i, i, j);
      bits ^= uint64_t{1} << multiset_index(i, j, j);
      constraints.set_row(row, bits);
    }
  }

  PwSpace space;
  space.rho = rho;
  space.w = w;
  for (const F2Vector& v : kernel_basis(constraints)) space.basis.push_back(v.bits());
  // kernel_basis puts a lone 1 in each basis vector's own free column; those
  // columns are the coordinates.
  {
    std::vector<uint64_t> rows = space.basis;
    for (size_t b = 0; b < space.basis.size(); ++b) {
      uint64_t others = 0;
      for (size_t o = 0; o < space.basis.size(); ++o)
        if (o != b) others |= space.basis[o];
      uint64_t own = space.basis[b] & ~others;
      space.free_positions.push_back(std::countr_zero(own));
    }
  }
  return space;
}

F2Matrix form_action_matrix(const F2Matrix& g, int rho) {
  if (g.rows() != rho || g.cols() != rho)
    throw std::invalid_argument("form_action_matrix: shape mismatch");
  int M = multiset_count(rho);
  F2Matrix A(M, M);
  std::vector<F2Vector> cols(rho);
  for (int c = 0; c < rho; ++c) cols[c] = g.column(c);
  for (int m = 0; m < M; ++m) {
    auto [i, j, k] = multiset_at(rho, m);
    uint64_t bits = 0;
    uint64_t xb = cols[i].bits();
    while (xb) {
      int a = std::countr_zero(xb);
      xb &= xb - 1;
      uint64_t yb = cols[j].bits();
      while (yb) {
        int b = std::countr_zero(yb);
        yb &= yb - 1;
        uint64_t zb = cols[k].bits();
        while (zb) {
          int c = std::countr_zero(zb);
          zb &= zb - 1;
          std::array<int, 3> s{a, b, c};
          std::sort(s.begin(), s.end());
          bits ^= uint64_t{1} << multiset_index(s[0], s[1], s[2]);
        }
      }
    }
    A.set_row(m, bits);
  }
  return A;
}

bool form_lex_less(uint64_t a, uint64_t b) {
  uint64_t d = a ^ b;
  if (d == 0) return false;
  // First differing multiset index decides; the form holding 0 there is smaller.
  return (a >> std::countr_zero(d)) % 2 == 0;
}

namespace {

uint64_t apply_action(const F2Matrix& A, uint64_t packed) {
  uint64_t out = 0;
  for (int r = 0; r < A.rows(); ++r)
    if (std::popcount(A.row_bits(r) & packed) & 1) out |= uint64_t{1} << r;
  return out;
}

// Any invertible matrix whose first column is v.
F2Matrix complete_to_basis(const F2Vector& v) {
  int rho = v.dim();
  F2Matrix h(rho, rho);
  h.set_column(0, v);
  int filled = 1;
  for (int i = 0; i < rho && filled < rho; ++i) {
    F2Matrix trial(filled + 1, rho);
    for (int t = 0; t < filled; ++t) trial.set_row(t, h.column(t).bits());
    trial.set_row(filled, uint64_t{1} << i);
    if (rank(trial) > filled) {
      h.set_column(filled, F2Vector::unit(rho, i));
      ++filled;
    }
  }
  return h;
}

struct OrbitScan {
  uint64_t min_packed;
  uint64_t size;
  // Group element h with pullback(start_form, h) = form holding min_packed.
  F2Matrix min_witness;
};

// BFS over the orbit of one packed form under the given action matrices,
// tracking a witness per visited form when requested.
OrbitScan orbit_scan(uint64_t start, const std::vector<F2Matrix>& gens,
                     const std::vector<F2Matrix>& actions, bool witnesses, int rho) {
  std::unordered_map<uint64_t, F2Matrix> wit;
  std::unordered_set<uint64_t> seen;
  std::deque<uint64_t> queue;
  seen.insert(start);
  queue.push_back(start);
  if (witnesses) wit.emplace(start, F2Matrix::identity(rho));

  uint64_t best = start;
  uint64_t count = 0;
  while (!queue.empty()) {
    uint64_t cur = queue.front();
    queue.pop_front();
    ++count;
    if (form_lex_less(cur, best)) best = cur;
    for (size_t gi = 0; gi < actions.size(); ++gi) {
      uint64_t next = apply_action(actions[gi], cur);
      if (seen.insert(next).second) {
        if (witnesses) wit.emplace(next, wit.at(cur).mul(gens[gi]));
        queue.push_back(next);
      }
    }
  }
  OrbitScan out{best, count, F2Matrix()};
  if (witnesses) out.min_witness = wit.at(best);
  return out;
}

std::vector<F2Matrix> class_generators(int rho, bool w_nonzero) {
  if (rho == 0) return {};
  return w_nonzero ? group_generators(rho, F2Vector::unit(rho, 0)) : group_generators(rho);
}

// Reduces d to an isomorphic descriptor whose w is the class representative
// (zero stays zero, nonzero becomes e1). Returns the conjugating matrix g0
// with reduced.form = pullback(d.form, g0).
std::pair<MsDescriptor, F2Matrix> reduce_w(const MsDescriptor& d) {
  int rho = d.rank();
  if (d.w.is_zero() || d.w == F2Vector::unit(rho, 0))
    return {d, F2Matrix::identity(rho)};
  F2Matrix g0 = complete_to_basis(d.w);
  return {MsDescriptor(pullback(d.form, g0), F2Vector::unit(rho, 0)), g0};
}

}  // namespace

MsDescriptor canonical(const MsDescriptor& d) {
  int rho = d.rank();
  if (rho > 4) throw std::invalid_argument("canonical: rho out of range");
  if (!check_pw(d)) throw std::domain_error("canonical: Postnikov-Wu violated");
  if (rho == 0) return d;

  auto [reduced, g0] = reduce_w(d);
  std::vector<F2Matrix> gens = class_generators(rho, !reduced.w.is_zero());
  std::vector<F2Matrix> actions;
  actions.reserve(gens.size());
  for (const F2Matrix& g : gens) actions.push_back(form_action_matrix(g, rho));
  OrbitScan scan = orbit_scan(reduced.form.packed(), gens, actions, false, rho);
  return MsDescriptor(SymTrilinearForm::from_packed(rho, scan.min_packed), reduced.w);
}

std::optional<F2Matrix> isomorphic(const MsDescriptor& a, const MsDescriptor& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("isomorphic: ranks differ");
  int rho = a.rank();
  if (a.w.is_zero() != b.w.is_zero()) return std::nullopt;
  if (rho == 0) return F2Matrix::identity(0);

  auto [ra, ga] = reduce_w(a);
  auto [rb, gb] = reduce_w(b);
  bool w_nonzero = !ra.w.is_zero();

  if (rho <= 4) {
    std::vector<F2Matrix> gens = class_generators(rho, w_nonzero);
    std::vector<F2Matrix> actions;
    actions.reserve(gens.size());
    for (const F2Matrix& g : gens) actions.push_back(form_action_matrix(g, rho));
    OrbitScan sa = orbit_scan(ra.form.packed(), gens, actions, true, rho);
    OrbitScan sb = orbit_scan(rb.form.packed(), gens, actions, true, rho);
    if (sa.min_packed != sb.min_packed) return std::nullopt;
    // pullback(a.form, ga*ha) = pullback(b.form, gb*hb) at the shared minimum.
    F2Matrix ha_inv = *inverse(sa.min_witness);
    F2Matrix ga_inv = *inverse(ga);
    return gb.mul(sb.min_witness).mul(ha_inv).mul(ga_inv);
  }

  // Column-by-column backtracking: choose images of basis vectors, pruning on
  // every multiset whose support lies in the chosen prefix.
  std::vector<F2Vector> cols(rho, F2Vector(rho));
  std::vector<uint64_t> span_rows;
  uint64_t limit = uint64_t{1} << rho;

  auto independent = [&](const F2Vector& v) {
    F2Matrix m(static_cast<int>(span_rows.size()) + 1, rho);
    for (size_t r = 0; r < span_rows.size(); ++r) m.set_row(static_cast<int>(r), span_rows[r]);
    m.set_row(static_cast<int>(span_rows.size()), v.bits());
    return rank(m) == static_cast<int>(span_rows.size()) + 1;
  };

  std::optional<F2Matrix> found;
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == rho) {
      F2Matrix g(rho, rho);
      for (int c = 0; c < rho; ++c) g.set_column(c, cols[c]);
      found = g;
      return true;
    }
    uint64_t first = 1;
    uint64_t last = limit;
    if (w_nonzero && depth == 0) {
      first = 1;
      last = 2;  // image of e1 is forced to e1
    }
    for (uint64_t bits = first; bits < last; ++bits) {
      F2Vector v(rho, bits);
      if (!independent(v)) continue;
      cols[depth] = v;
      bool ok = true;
      for (int i = 0; i <= depth && ok; ++i)
        for (int j = i; j <= depth && ok; ++j)
          for (int k = j; k <= depth && ok; ++k) {
            if (k < depth) continue;  // already checked at an earlier depth
            if (ra.form.get(i, j, k) != eval(rb.form, cols[i], cols[j], cols[k])) ok = false;
          }
      if (!ok) continue;
      span_rows.push_back(bits);
      if (self(self, depth + 1)) return true;
      span_rows.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  // pullback(rb.form, found) = ra.form with found fixing e1 when needed.
  return gb.mul(*found).mul(*inverse(ga));
}

Census census(int rho, WClass w_class, int threads) {
  if (rho < 1 || rho > 4) throw std::invalid_argument("census: rho out of range");
  if (threads < 1) throw std::invalid_argument("census: thread count must be positive");

  bool w_nonzero = w_class == WClass::nonzero;
  F2Vector w(rho);
  if (w_nonzero) w.set(0, true);

  PwSpace space = enumerate_pw(rho, w);
  std::vector<F2Matrix> gens = class_generators(rho, w_nonzero);
  std::vector<F2Matrix> actions;
  actions.reserve(gens.size());
  for (const F2Matrix& g : gens) actions.push_back(form_action_matrix(g, rho));

  uint64_t total = space.size();
  size_t ng = gens.size();

  // The heavy part, sharded: every form's neighbors under each generator,
  // recorded as coordinates into the space.
  std::vector<uint32_t> edges(total * ng);
  auto fill = [&](uint64_t lo, uint64_t hi) {
    for (uint64_t idx = lo; idx < hi; ++idx) {
      uint64_t packed = space.packed_at(idx);
      for (size_t g = 0; g < ng; ++g)
        edges[idx * ng + g] = static_cast<uint32_t>(space.coord_of(apply_action(actions[g], packed)));
    }
  };
  if (threads == 1 || total < 1024) {
    fill(0, total);
  } else {
    std::vector<std::thread> pool;
    uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      uint64_t lo = t * chunk;
      uint64_t hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  Census out;
  out.rho = rho;
  out.w_class = w_class;
  out.space_size = total;

  std::vector<bool> visited(total, false);
  std::vector<uint64_t> stack;
  for (uint64_t seed = 0; seed < total; ++seed) {
    if (visited[seed]) continue;
    uint64_t size = 0;
    uint64_t best = space.packed_at(seed);
    visited[seed] = true;
    stack.push_back(seed);
    while (!stack.empty()) {
      uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      uint64_t packed = space.packed_at(cur);
      if (form_lex_less(packed, best)) best = packed;
      for (size_t g = 0; g < ng; ++g) {
        uint32_t next = edges[cur * ng + g];
        if (!visited[next]) {
          visited[next] = true;
          stack.push_back(next);
        }
      }
    }
    CensusClass cls;
    cls.representative = MsDescriptor(SymTrilinearForm::from_packed(rho, best), w);
    cls.orbit_size = size;
    cls.sq_rank = rank(squaring_matrix(cls.representative.form));
    cls.cup_kernel = cup_kernel_dim(cls.representative.form);
    cls.sigma = rank(w_pairing(cls.representative.form, w));
    out.classes.push_back(std::move(cls));
  }

  std::sort(out.classes.begin(), out.classes.end(), [](const CensusClass& x, const CensusClass& y) {
    return form_lex_less(x.representative.form.packed(), y.representative.form.packed());
  });
  return out;
}

}  // namespace ms3
