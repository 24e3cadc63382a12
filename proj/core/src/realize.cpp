#include "ms3/realize.hpp"

#include <set>
#include <stdexcept>

namespace ms3 {

namespace {

// Shared tail: framings from cubes, clasps from symmetric pair products,
// borromean corrections for residual triples. Components are basis indices
// shifted by `shift`; kb strands and the rp2 strand are excluded from
// framings by the caller via `cube_done`.
void emit_common(const SymTrilinearForm& f, int first_basis, int shift, LinkPlan& plan,
                 const std::vector<bool>& cube_done, const std::vector<bool>& kb_pair) {
  int rho = f.rank();
  for (int x = first_basis; x < rho; ++x) {
    if (!cube_done[x] && f.get(x, x, x)) plan.framings[x + shift - 1] = 2;
  }
  auto pair_id = [&](int x, int y) { return x * rho + y; };
  for (int x = first_basis; x < rho; ++x) {
    for (int y = x + 1; y < rho; ++y) {
      if (kb_pair[pair_id(x, y)]) continue;
      if (f.get(x, x, y)) plan.clasps.emplace_back(x + shift, y + shift);
    }
  }
  std::set<std::pair<int, int>> clasp_set;
  for (const auto& [i, j] : plan.clasps) clasp_set.insert({i, j});
  for (int x = first_basis; x < rho; ++x) {
    for (int y = x + 1; y < rho; ++y) {
      for (int z = y + 1; z < rho; ++z) {
        int i = x + shift, j = y + shift, k = z + shift;
        int c = static_cast<int>(clasp_set.count({i, j})) +
                static_cast<int>(clasp_set.count({i, k})) +
                static_cast<int>(clasp_set.count({j, k}));
        if (f.get(x, y, z) ^ (c >= 2)) plan.borromeans.push_back({i, j, k});
      }
    }
  }
}

}  // namespace

Realization realize(const MsDescriptor& d) {
  if (!check_pw(d)) throw std::domain_error("realize: Postnikov-Wu violated");
  int rho = d.rank();

  if (d.w.is_zero()) {
    Realization out;
    out.change = F2Matrix::identity(rho);
    out.plan.orientable = true;
    out.plan.components = rho;
    out.plan.framings.assign(rho, 0);
    std::vector<bool> cube_done(rho, false);
    std::vector<bool> kb_pair(rho * rho, false);
    emit_common(d.form, 0, 1, out.plan, cube_done, kb_pair);
    return out;
  }

  auto norm = normalize_nonorientable(d.form, d.w);
  SymTrilinearForm f = pullback(d.form, norm.change);

  Realization out;
  out.change = norm.change;
  out.plan.orientable = false;
  out.plan.components = rho - 1;
  out.plan.framings.assign(rho - 1, 0);

  std::vector<bool> cube_done(rho, false);
  std::vector<bool> kb_pair(rho * rho, false);

  // Basis index x >= 1 is component x; w sits at index 0. Each symplectic
  // pair of the w-pairing becomes an rp2 strand (pair containing w) or a
  // Klein block. Exactly one of nu(x,x,y), nu(x,y,y) is set on a Klein pair,
  // which fixes the strand roles.
  for (const auto& [px, py] : norm.report.pairs) {
    if (px == 0) {
      out.plan.rp2_blocks.push_back(py);
      continue;
    }
    KbBlock kb;
    if (f.get(px, px, py)) {
      kb.a_strand = px;
      kb.q_strand = py;
    } else {
      kb.a_strand = py;
      kb.q_strand = px;
    }
    kb.k = f.get(kb.a_strand, kb.a_strand, kb.a_strand);
    kb.m = f.get(kb.q_strand, kb.q_strand, kb.q_strand);
    out.plan.kb_blocks.push_back(kb);
    cube_done[px] = cube_done[py] = true;
    kb_pair[px * rho + py] = true;
  }

  emit_common(f, 1, 0, out.plan, cube_done, kb_pair);
  return out;
}

RoundtripResult compare_descriptors(const MsDescriptor& expected, const MsDescriptor& actual) {
  if (expected.rank() != actual.rank() || expected.w != actual.w) return {false, std::nullopt};
  int rho = expected.rank();
  for (int m = 0; m < multiset_count(rho); ++m) {
    auto [i, j, k] = multiset_at(rho, m);
    if (expected.form.get(i, j, k) != actual.form.get(i, j, k)) {
      return {false, std::array<int, 3>{i, j, k}};
    }
  }
  return {true, std::nullopt};
}

RoundtripResult roundtrip(const MsDescriptor& d) {
  Realization r = realize(d);
  MsDescriptor evaluated = eval_plan(r.plan);
  F2Vector transported = inverse(r.change).value().mul(d.w);
  MsDescriptor target(pullback(d.form, r.change), transported);
  return compare_descriptors(target, evaluated);
}

}  // namespace ms3
