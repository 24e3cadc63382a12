#include "ms3/catalogue.hpp"

namespace ms3 {

namespace {

MsDescriptor orientable(int rho, std::initializer_list<std::array<int, 3>> triples) {
  return MsDescriptor(SymTrilinearForm::from_triples(rho, triples), F2Vector(rho));
}

MsDescriptor nonorientable(int rho, std::initializer_list<std::array<int, 3>> triples) {
  return MsDescriptor(SymTrilinearForm::from_triples(rho, triples), F2Vector::unit(rho, 0));
}

LinkPlan oplan(int n, std::vector<int> framings, std::vector<std::pair<int, int>> clasps = {},
               std::vector<std::array<int, 3>> borromeans = {}) {
  LinkPlan p;
  p.orientable = true;
  p.components = n;
  p.framings = std::move(framings);
  p.clasps = std::move(clasps);
  p.borromeans = std::move(borromeans);
  return p;
}

LinkPlan nplan(int n, std::vector<int> framings, std::vector<int> rp2 = {},
               std::vector<KbBlock> kb = {}) {
  LinkPlan p;
  p.orientable = false;
  p.components = n;
  p.framings = std::move(framings);
  p.rp2_blocks = std::move(rp2);
  p.kb_blocks = std::move(kb);
  return p;
}

std::vector<CatalogueEntry> build() {
  std::vector<CatalogueEntry> out;

  // The three-sphere: trivial ring.
  out.push_back({"s3", orientable(0, {}), oplan(0, {})});

  // Real projective space: truncated polynomial ring on one generator.
  out.push_back({"rp3", orientable(1, {{1, 1, 1}}), oplan(1, {2})});

  // S1 x S2 and L(4,1) share the rank-one ring with vanishing cube.
  out.push_back({"s1xs2", orientable(1, {}), oplan(1, {0})});
  out.push_back({"l41", orientable(1, {}), oplan(1, {0})});

  // Quaternionic space: u^2 and v^2 nonzero, u^2 v = u v^2 != 0, cubes zero.
  out.push_back({"q8", orientable(2, {{1, 1, 2}, {1, 2, 2}}), oplan(2, {0, 0}, {{1, 2}})});

  // Connected sum of two projective spaces: two independent cubes.
  out.push_back({"rp3#rp3", orientable(2, {{1, 1, 1}, {2, 2, 2}}), oplan(2, {2, 2})});

  // Half-turn flat manifold: t^2 = 0, u^2 v = u v^2 = t u v != 0.
  out.push_back({"mt-halfturn", orientable(3, {{2, 2, 3}, {2, 3, 3}, {1, 2, 3}}),
                 oplan(3, {0, 0, 0}, {{2, 3}}, {{1, 2, 3}})});

  // Two chained clasps: u^2 z = u z^2, v^2 z = v z^2, u v z all nonzero.
  out.push_back({"fig4",
                 orientable(3, {{1, 1, 3}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}, {1, 2, 3}}),
                 oplan(3, {0, 0, 0}, {{1, 3}, {2, 3}})});

  // Clasp triangle: all six mixed pair products and the full triple.
  out.push_back({"fig5",
                 orientable(3, {{1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {1, 3, 3}, {2, 2, 3},
                                {2, 3, 3}, {1, 2, 3}}),
                 oplan(3, {0, 0, 0}, {{1, 2}, {1, 3}, {2, 3}})});

  // Twisted S2 bundle over S1: the bare nonorientable base, w^3 = 0.
  out.push_back({"s2xts1", nonorientable(1, {}), nplan(0, {})});

  // S1 x RP2: w^2 pairs with the projective strand.
  out.push_back({"s1xrp2", nonorientable(2, {{1, 1, 2}}), nplan(1, {0}, {1})});

  // S1 x Klein bottle: one Klein block with both cube bits clear.
  out.push_back({"s1xkb", nonorientable(3, {{1, 2, 3}, {2, 2, 3}}),
                 nplan(2, {0, 0}, {}, {{1, 2, 0, 0}})});

  // Sol torus bundle: Klein block with both cube bits set, w^2 = 0.
  out.push_back({"sol", nonorientable(3, {{1, 2, 3}, {2, 2, 3}, {2, 2, 2}, {3, 3, 3}}),
                 nplan(2, {0, 0}, {}, {{1, 2, 1, 1}})});

  return out;
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build();
  return entries;
}

const CatalogueEntry* find_entry(std::string_view name) {
  for (const CatalogueEntry& e : catalogue()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace ms3
