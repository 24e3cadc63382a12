#pragma once
// Exhaustive generator of valid plans with a bounded number of components:
// every framing assignment, every clasp subset, every triple subset, and for
// the nonorientable family every disjoint arrangement of crosscap and twisted
// pair blocks with all their bit options.

#include <array>
#include <utility>
#include <vector>

#include "ms3/plan.hpp"

namespace testutil {

inline std::vector<ms3::LinkPlan> enumerate_plans(int max_components) {
  std::vector<ms3::LinkPlan> out;
  for (int n = 0; n <= max_components; ++n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) all_pairs.emplace_back(i, j);
    std::vector<std::array<int, 3>> all_triples;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) all_triples.push_back({i, j, k});

    // block layouts: every subset of components as crosscap blocks, then at
    // most one twisted pair on the rest (components <= 3 admits no more)
    struct Layout {
      std::vector<int> rp2;
      std::vector<ms3::KbBlock> kb;
    };
    std::vector<Layout> layouts;
    for (uint32_t rmask = 0; rmask < (1u << n); ++rmask) {
      Layout base;
      std::vector<int> rest;
      for (int c = 1; c <= n; ++c) {
        if ((rmask >> (c - 1)) & 1)
          base.rp2.push_back(c);
        else
          rest.push_back(c);
      }
      layouts.push_back(base);
      for (size_t a = 0; a < rest.size(); ++a) {
        for (size_t q = 0; q < rest.size(); ++q) {
          if (a == q) continue;
          for (int k = 0; k <= 1; ++k) {
            for (int m = 0; m <= 1; ++m) {
              Layout l = base;
              l.kb.push_back({rest[a], rest[q], k, m});
              layouts.push_back(l);
            }
          }
        }
      }
    }

    for (int orientable = 1; orientable >= 0; --orientable) {
      for (uint32_t fmask = 0; fmask < (1u << n); ++fmask) {
        std::vector<int> framings(n);
        for (int c = 0; c < n; ++c) framings[c] = ((fmask >> c) & 1) ? 2 : 0;
        for (uint32_t cmask = 0; cmask < (1u << all_pairs.size()); ++cmask) {
          std::vector<std::pair<int, int>> clasps;
          for (size_t p = 0; p < all_pairs.size(); ++p)
            if ((cmask >> p) & 1) clasps.push_back(all_pairs[p]);
          for (uint32_t bmask = 0; bmask < (1u << all_triples.size()); ++bmask) {
            std::vector<std::array<int, 3>> borr;
            for (size_t t = 0; t < all_triples.size(); ++t)
              if ((bmask >> t) & 1) borr.push_back(all_triples[t]);
            if (orientable) {
              out.push_back({true, n, framings, clasps, borr, {}, {}});
            } else {
              for (const auto& l : layouts)
                out.push_back({false, n, framings, clasps, borr, l.rp2, l.kb});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace testutil
