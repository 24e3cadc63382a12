#include "ms3/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace ms3 {

namespace {

using J = nlohmann::ordered_json;

J parse(const std::string& text) {
  try {
    return J::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int require_int(const J& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("expected integer field '") + key + "'");
  return j[key].get<int>();
}

const J& require_array(const J& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("expected array field '") + key + "'");
  return j[key];
}

bool require_bool(const J& j, const char* key) {
  if (!j.contains(key) || !j[key].is_boolean())
    throw ParseError(std::string("expected boolean field '") + key + "'");
  return j[key].get<bool>();
}

int int_at(const J& arr, size_t i, const char* what) {
  if (!arr[i].is_number_integer()) throw ParseError(std::string(what) + ": expected integer");
  return arr[i].get<int>();
}

}  // namespace

std::string descriptor_to_json(const MsDescriptor& d) {
  J j;
  j["rank"] = d.rank();
  J wbits = J::array();
  for (int i = 0; i < d.rank(); ++i) wbits.push_back(d.w.get(i) ? 1 : 0);
  j["w"] = wbits;
  J triples = J::array();
  for (const auto& t : d.form.triples()) triples.push_back({t[0], t[1], t[2]});
  j["triples"] = triples;
  return j.dump();
}

MsDescriptor descriptor_from_json(const std::string& text) {
  J j = parse(text);
  int rho = require_int(j, "rank");
  if (rho < 0 || rho > 64) throw ParseError("rank out of range");
  const J& warr = require_array(j, "w");
  if (static_cast<int>(warr.size()) != rho) throw ParseError("w: expected one bit per rank");
  F2Vector w(rho);
  for (int i = 0; i < rho; ++i) {
    int b = int_at(warr, i, "w");
    if (b != 0 && b != 1) throw ParseError("w: entries must be 0 or 1");
    w.set(i, b == 1);
  }
  SymTrilinearForm f(rho);
  for (const J& t : require_array(j, "triples")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("triples: expected [i,j,k]");
    int i = int_at(t, 0, "triples"), jj = int_at(t, 1, "triples"), k = int_at(t, 2, "triples");
    if (i < 1 || i > jj || jj > k || k > rho) throw ParseError("triples: need 1 <= i <= j <= k <= rank");
    if (f.get(i - 1, jj - 1, k - 1)) throw ParseError("triples: duplicate entry");
    f.set(i - 1, jj - 1, k - 1, true);
  }
  return MsDescriptor(std::move(f), w);
}

std::string plan_to_json(const LinkPlan& p) {
  J j;
  j["orientable"] = p.orientable;
  j["components"] = p.components;
  j["framings"] = p.framings;
  auto clasps = p.clasps;
  for (auto& [a, b] : clasps)
    if (a > b) std::swap(a, b);
  std::sort(clasps.begin(), clasps.end());
  J jc = J::array();
  for (const auto& [a, b] : clasps) jc.push_back({a, b});
  j["clasps"] = jc;
  auto borr = p.borromeans;
  for (auto& t : borr) std::sort(t.begin(), t.end());
  std::sort(borr.begin(), borr.end());
  J jb = J::array();
  for (const auto& t : borr) jb.push_back({t[0], t[1], t[2]});
  j["borromeans"] = jb;
  auto rp2 = p.rp2_blocks;
  std::sort(rp2.begin(), rp2.end());
  j["rp2_blocks"] = rp2;
  auto kbs = p.kb_blocks;
  std::sort(kbs.begin(), kbs.end(), [](const KbBlock& x, const KbBlock& y) {
    return std::minmax(x.a_strand, x.q_strand) < std::minmax(y.a_strand, y.q_strand);
  });
  J jk = J::array();
  for (const auto& kb : kbs) {
    J one;
    one["a"] = kb.a_strand;
    one["q"] = kb.q_strand;
    one["k"] = kb.k;
    one["m"] = kb.m;
    jk.push_back(one);
  }
  j["kb_blocks"] = jk;
  return j.dump();
}

LinkPlan plan_from_json(const std::string& text) {
  J j = parse(text);
  LinkPlan p;
  p.orientable = require_bool(j, "orientable");
  p.components = require_int(j, "components");
  if (p.components < 0) throw ParseError("components: negative count");
  for (const J& f : require_array(j, "framings")) {
    if (!f.is_number_integer()) throw ParseError("framings: expected integer");
    p.framings.push_back(f.get<int>());
  }
  for (const J& c : require_array(j, "clasps")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("clasps: expected [i,j]");
    p.clasps.emplace_back(int_at(c, 0, "clasps"), int_at(c, 1, "clasps"));
  }
  for (const J& t : require_array(j, "borromeans")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("borromeans: expected [i,j,k]");
    p.borromeans.push_back({int_at(t, 0, "borromeans"), int_at(t, 1, "borromeans"),
                            int_at(t, 2, "borromeans")});
  }
  for (const J& r : require_array(j, "rp2_blocks")) {
    if (!r.is_number_integer()) throw ParseError("rp2_blocks: expected integer");
    p.rp2_blocks.push_back(r.get<int>());
  }
  for (const J& kb : require_array(j, "kb_blocks")) {
    if (!kb.is_object()) throw ParseError("kb_blocks: expected object");
    KbBlock b;
    b.a_strand = require_int(kb, "a");
    b.q_strand = require_int(kb, "q");
    b.k = require_int(kb, "k");
    b.m = require_int(kb, "m");
    p.kb_blocks.push_back(b);
  }
  return p;
}

std::string altform_to_json(const AltForm& mu) {
  J j;
  j["beta"] = mu.beta;
  J coeffs = J::array();
  for (const auto& [t, n] : mu.coeffs) coeffs.push_back({t[0] + 1, t[1] + 1, t[2] + 1, n});
  j["coeffs"] = coeffs;
  return j.dump();
}

AltForm altform_from_json(const std::string& text) {
  J j = parse(text);
  int beta = require_int(j, "beta");
  if (beta < 0) throw ParseError("beta: negative");
  AltForm mu(beta);
  for (const J& c : require_array(j, "coeffs")) {
    if (!c.is_array() || c.size() != 4) throw ParseError("coeffs: expected [i,j,k,n]");
    int i = int_at(c, 0, "coeffs"), jj = int_at(c, 1, "coeffs"), k = int_at(c, 2, "coeffs");
    if (!c[3].is_number_integer()) throw ParseError("coeffs: expected integer coefficient");
    long long n = c[3].get<long long>();
    if (i < 1 || !(i < jj && jj < k) || k > beta)
      throw ParseError("coeffs: need 1 <= i < j < k <= beta");
    if (mu.coeffs.count({i - 1, jj - 1, k - 1})) throw ParseError("coeffs: duplicate triple");
    if (n != 0) mu.set(i - 1, jj - 1, k - 1, n);
  }
  return mu;
}

std::string census_to_json(const Census& c) {
  J j;
  j["rho"] = c.rho;
  j["w_class"] = c.w_class == WClass::zero ? "zero" : "nonzero";
  J classes = J::array();
  for (const CensusClass& cls : c.classes) {
    J one;
    one["representative"] = J::parse(descriptor_to_json(cls.representative));
    one["orbit_size"] = cls.orbit_size;
    J inv;
    inv["sq_rank"] = cls.sq_rank;
    inv["cup_kernel_dim"] = cls.cup_kernel;
    inv["sigma"] = cls.sigma;
    one["invariants"] = inv;
    classes.push_back(one);
  }
  j["classes"] = classes;
  return j.dump();
}

std::string matrix_to_json(const F2Matrix& m) {
  J rows = J::array();
  for (int r = 0; r < m.rows(); ++r) {
    J row = J::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
    rows.push_back(row);
  }
  return rows.dump();
}

std::string orientable_normalization_to_json(const OrientableNormalization& n) {
  J j;
  j["g"] = J::parse(matrix_to_json(n.change));
  J rep;
  rep["type"] = "orientable";
  rep["diag_blocks"] = n.report.diag_blocks;
  rep["hyperbolic_pairs"] = n.report.hyperbolic_pairs;
  rep["radical_dim"] = n.report.radical_dim;
  j["report"] = rep;
  return j.dump();
}

std::string nonorientable_normalization_to_json(const NonorientableNormalization& n) {
  J j;
  j["g"] = J::parse(matrix_to_json(n.change));
  J rep;
  rep["type"] = "nonorientable";
  rep["sigma"] = n.report.sigma;
  rep["w_square_nonzero"] = n.report.w_square_nonzero;
  J pairs = J::array();
  for (const auto& [a, b] : n.report.pairs) pairs.push_back({a + 1, b + 1});
  rep["pairs"] = pairs;
  j["report"] = rep;
  return j.dump();
}

}  // namespace ms3
