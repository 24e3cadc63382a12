#include "ms3/plan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ms3 {

namespace {

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<std::string> validate(const LinkPlan& p) {
  std::vector<std::string> out;
  int n = p.components;
  if (n < 0) out.push_back("components: negative count");
  auto in_range = [&](int c) { return c >= 1 && c <= n; };

  if (static_cast<int>(p.framings.size()) != n)
    out.push_back("framings: expected one entry per component");
  for (size_t i = 0; i < p.framings.size(); ++i)
    if (p.framings[i] != 0 && p.framings[i] != 2)
      out.push_back("framing " + std::to_string(i + 1) + ": value must be 0 or 2");

  std::set<std::pair<int, int>> seen_clasps;
  for (const auto& [i, j] : p.clasps) {
    if (i == j) {
      out.push_back("clasp " + pair_str(i, j) + ": repeated index");
      continue;
    }
    if (!in_range(i) || !in_range(j)) {
      out.push_back("clasp " + pair_str(i, j) + ": component out of range");
      continue;
    }
    auto key = std::minmax(i, j);
    if (!seen_clasps.insert(key).second)
      out.push_back("clasp " + pair_str(i, j) + ": duplicate pair");
  }

  std::set<std::array<int, 3>> seen_borr;
  for (const auto& t : p.borromeans) {
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      out.push_back("borromean (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                    std::to_string(t[2]) + "): repeated index");
      continue;
    }
    if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2])) {
      out.push_back("borromean (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                    std::to_string(t[2]) + "): component out of range");
      continue;
    }
    auto key = t;
    std::sort(key.begin(), key.end());
    if (!seen_borr.insert(key).second)
      out.push_back("borromean (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                    std::to_string(t[2]) + "): duplicate triple");
  }

  if (p.orientable && !p.rp2_blocks.empty())
    out.push_back("rp2_blocks: not allowed in an orientable plan");
  if (p.orientable && !p.kb_blocks.empty())
    out.push_back("kb_blocks: not allowed in an orientable plan");

  std::set<int> block_members;
  auto claim = [&](int c, const std::string& what) {
    if (!in_range(c)) {
      out.push_back(what + ": component out of range");
      return;
    }
    if (!block_members.insert(c).second)
      out.push_back(what + ": component " + std::to_string(c) + " already in a block");
  };
  for (int c : p.rp2_blocks) claim(c, "rp2 block " + std::to_string(c));
  for (const auto& kb : p.kb_blocks) {
    if (kb.a_strand == kb.q_strand) {
      out.push_back("kb block " + pair_str(kb.a_strand, kb.q_strand) + ": repeated index");
      continue;
    }
    claim(kb.a_strand, "kb block " + pair_str(kb.a_strand, kb.q_strand));
    claim(kb.q_strand, "kb block " + pair_str(kb.a_strand, kb.q_strand));
    if ((kb.k != 0 && kb.k != 1) || (kb.m != 0 && kb.m != 1))
      out.push_back("kb block " + pair_str(kb.a_strand, kb.q_strand) + ": k and m must be bits");
  }
  return out;
}

MsDescriptor eval_plan(const LinkPlan& p) {
  {
    auto errs = validate(p);
    if (!errs.empty()) throw std::domain_error("eval_plan: " + errs.front());
  }
  int n = p.components;
  int rho = p.orientable ? n : n + 1;
  int shift = p.orientable ? -1 : 0;  // component c -> basis index c + shift
  SymTrilinearForm f(rho);
  F2Vector w(rho);
  if (!p.orientable) w.set(0, true);

  std::set<int> kb_members;
  for (const auto& kb : p.kb_blocks) {
    kb_members.insert(kb.a_strand);
    kb_members.insert(kb.q_strand);
  }

  // (1) cubes
  for (int c = 1; c <= n; ++c) {
    if (kb_members.count(c)) continue;
    if (p.framings[c - 1] == 2) f.set(c + shift, c + shift, c + shift, true);
  }
  for (const auto& kb : p.kb_blocks) {
    if (kb.k) f.set(kb.a_strand + shift, kb.a_strand + shift, kb.a_strand + shift, true);
    if (kb.m) f.set(kb.q_strand + shift, kb.q_strand + shift, kb.q_strand + shift, true);
  }

  // (2) pair products
  std::set<std::pair<int, int>> clasp_set;
  for (const auto& [i, j] : p.clasps) clasp_set.insert(std::minmax(i, j));
  for (const auto& [i, j] : clasp_set) {
    f.set(i + shift, i + shift, j + shift, true);
    f.set(i + shift, j + shift, j + shift, true);
  }
  for (const auto& kb : p.kb_blocks) {
    int a = kb.a_strand + shift, q = kb.q_strand + shift;
    f.set(a, a, q, !f.get(a, a, q));
  }

  // (3) triples of distinct components
  std::set<std::array<int, 3>> borr_set;
  for (auto t : p.borromeans) {
    std::sort(t.begin(), t.end());
    borr_set.insert(t);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        int c = static_cast<int>(clasp_set.count({i, j})) +
                static_cast<int>(clasp_set.count({i, k})) +
                static_cast<int>(clasp_set.count({j, k}));
        int v = (c >= 2) ^ static_cast<int>(borr_set.count({i, j, k}));
        if (v) f.set(i + shift, j + shift, k + shift, true);
      }
    }
  }

  // (4) products against w
  if (!p.orientable) {
    for (int c : p.rp2_blocks) f.set(0, 0, c, true);
    for (const auto& kb : p.kb_blocks) f.set(0, kb.a_strand, kb.q_strand, true);
  }

  return MsDescriptor(std::move(f), w);
}

LinkPlan splice(const LinkPlan& p1, const LinkPlan& p2) {
  if (p1.orientable != p2.orientable)
    throw std::invalid_argument("splice: plans disagree on orientability");
  LinkPlan out = p1;
  int s = p1.components;
  out.components += p2.components;
  out.framings.insert(out.framings.end(), p2.framings.begin(), p2.framings.end());
  for (const auto& [i, j] : p2.clasps) out.clasps.emplace_back(i + s, j + s);
  for (const auto& t : p2.borromeans) out.borromeans.push_back({t[0] + s, t[1] + s, t[2] + s});
  for (int c : p2.rp2_blocks) out.rp2_blocks.push_back(c + s);
  for (const auto& kb : p2.kb_blocks)
    out.kb_blocks.push_back({kb.a_strand + s, kb.q_strand + s, kb.k, kb.m});
  return out;
}

}  // namespace ms3
