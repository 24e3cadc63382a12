// Acceptance gate: one line per criterion, [PASS]/[FAIL] plus wall time.
// Runtime bounds are pinned here; a criterion with no bound prints only the
// measured time. Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ms3/catalogue.hpp"
#include "ms3/census.hpp"
#include "ms3/f2.hpp"
#include "ms3/forms.hpp"
#include "ms3/integral.hpp"
#include "ms3/plan.hpp"
#include "ms3/realize.hpp"
#include "plan_enum.hpp"

using namespace ms3;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

// ---------------------------------------------------------------- criterion 1

struct FixtureRow {
  const char* name;
  int rank;
  bool w_nonzero;
  std::vector<std::array<int, 3>> triples;
};

void criterion_fixtures(Failures& f) {
  const std::vector<FixtureRow> rows = {
      {"s3", 0, false, {}},
      {"rp3", 1, false, {{1, 1, 1}}},
      {"s1xs2", 1, false, {}},
      {"l41", 1, false, {}},
      {"q8", 2, false, {{1, 1, 2}, {1, 2, 2}}},
      {"rp3#rp3", 2, false, {{1, 1, 1}, {2, 2, 2}}},
      {"mt-halfturn", 3, false, {{1, 2, 3}, {2, 2, 3}, {2, 3, 3}}},
      {"fig4", 3, false, {{1, 1, 3}, {1, 2, 3}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}}},
      {"fig5", 3, false,
       {{1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}}},
      {"s2xts1", 1, true, {}},
      {"s1xrp2", 2, true, {{1, 1, 2}}},
      {"s1xkb", 3, true, {{1, 2, 3}, {2, 2, 3}}},
      {"sol", 3, true, {{1, 2, 3}, {2, 2, 2}, {2, 2, 3}, {3, 3, 3}}},
  };
  expect(f, catalogue().size() == rows.size(), "catalogue size");
  for (const auto& row : rows) {
    const auto* e = find_entry(row.name);
    if (!e) {
      expect(f, false, std::string(row.name) + ": missing");
      continue;
    }
    expect(f, e->descriptor.rank() == row.rank, std::string(row.name) + ": rank");
    F2Vector w = row.w_nonzero ? F2Vector::unit(row.rank, 0) : F2Vector(row.rank);
    expect(f, e->descriptor.w == w, std::string(row.name) + ": w");
    expect(f, e->descriptor.form.triples() == row.triples, std::string(row.name) + ": triples");
    expect(f, check_pw(e->descriptor.form, e->descriptor.w), std::string(row.name) + ": identity");
    if (!e->plan) {
      expect(f, false, std::string(row.name) + ": plan missing");
      continue;
    }
    auto d = eval_plan(*e->plan);
    expect(f, d.form == e->descriptor.form && d.w == e->descriptor.w,
           std::string(row.name) + ": plan evaluation");
  }
}

// ---------------------------------------------------------------- criterion 2

void criterion_plan_closure(Failures& f) {
  auto plans = testutil::enumerate_plans(3);
  expect(f, plans.size() > 1000, "expected thousands of plans");
  size_t idx = 0;
  for (const auto& p : plans) {
    auto d = eval_plan(p);
    if (!check_pw(d.form, d.w)) {
      expect(f, false, "plan #" + std::to_string(idx) + " output violates the identity");
      return;
    }
    // defense in depth: re-check a slice against the all-pairs reference
    if (idx % 16 == 0 && !oracle::pw_all_pairs(d.form, d.w.bits())) {
      expect(f, false, "plan #" + std::to_string(idx) + " fails the all-pairs reference");
      return;
    }
    ++idx;
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion_roundtrip(Failures& f) {
  for (int rho = 1; rho <= 3; ++rho) {
    for (bool nonzero : {false, true}) {
      F2Vector w(rho);
      if (nonzero) w.set(0, true);
      auto space = enumerate_pw(rho, w);
      for (uint64_t i = 0; i < space.size(); ++i) {
        MsDescriptor d(space.form_at(i), w);
        if (!roundtrip(d).ok) {
          expect(f, false, "exhaustive mismatch at rho " + std::to_string(rho));
          return;
        }
      }
    }
  }
  std::mt19937_64 rng(2026);
  for (bool nonzero : {false, true}) {
    F2Vector w(4);
    if (nonzero) w.set(0, true);
    auto space = enumerate_pw(4, w);
    std::uniform_int_distribution<uint64_t> pick(0, space.size() - 1);
    for (int s = 0; s < 5000; ++s) {
      MsDescriptor d(space.form_at(pick(rng)), w);
      if (!roundtrip(d).ok) {
        expect(f, false, "sampled mismatch at rho 4");
        return;
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 4

void criterion_census(Failures& f) {
  for (int rho = 1; rho <= 3; ++rho) {
    for (bool nonzero : {false, true}) {
      uint64_t w = nonzero ? 1 : 0;
      auto group = nonzero ? oracle::all_fixing(rho, w) : oracle::all_invertible(rho);
      auto reference = oracle::orbit_partition(rho, w, group);
      std::sort(reference.begin(), reference.end(),
                [](const oracle::OrbitClass& a, const oracle::OrbitClass& b) {
                  return oracle::lex_less(a.rep, b.rep);
                });
      auto c = census(rho, nonzero ? WClass::nonzero : WClass::zero);
      expect(f, c.classes.size() == reference.size(),
             "class count rho " + std::to_string(rho) + (nonzero ? " nonzero" : " zero"));
      if (c.classes.size() != reference.size()) continue;
      // same representatives with the same orbit sizes (both sides sorted)
      for (size_t i = 0; i < reference.size(); ++i) {
        expect(f, c.classes[i].representative.form.packed() == reference[i].rep,
               "representative mismatch rho " + std::to_string(rho));
        expect(f, c.classes[i].orbit_size == reference[i].size,
               "orbit size mismatch rho " + std::to_string(rho));
      }
    }
  }
  expect(f, census(1, WClass::zero).classes.size() == 2, "rho 1 zero count");
  expect(f, census(1, WClass::nonzero).classes.size() == 1, "rho 1 nonzero count");
  for (bool nonzero : {false, true}) {
    auto c = census(4, nonzero ? WClass::nonzero : WClass::zero, 4);
    uint64_t total = 0;
    for (const auto& cls : c.classes) total += cls.orbit_size;
    expect(f, total == c.space_size, "orbit sum at rho 4");
    F2Vector w(4);
    if (nonzero) w.set(0, true);
    expect(f, c.space_size == enumerate_pw(4, w).size(), "space size at rho 4");
  }
}

// ---------------------------------------------------------------- criterion 5

void criterion_kernels(Failures& f) {
  expect(f, cup_kernel_dim(find_entry("q8")->descriptor.form) == 1, "q8 kernel");
  expect(f, cup_kernel_dim(find_entry("rp3#rp3")->descriptor.form) == 1, "rp3#rp3 kernel");
  // pair-multiplication kernel bound: the map from symmetric degree-1 pairs
  // into degree 2 has kernel of dimension >= C(rho+1,2) - rho
  for (int rho = 1; rho <= 4; ++rho) {
    for (bool nonzero : {false, true}) {
      F2Vector w(rho);
      if (nonzero) w.set(0, true);
      auto space = enumerate_pw(rho, w);
      int pair_count = rho * (rho + 1) / 2;
      for (uint64_t i = 0; i < space.size(); ++i) {
        auto form = space.form_at(i);
        F2Matrix m(pair_count, rho);
        int r = 0;
        for (int a = 0; a < rho; ++a)
          for (int b = a; b < rho; ++b, ++r)
            for (int k = 0; k < rho; ++k) m.set(r, k, form.get(a, b, k));
        int kernel = pair_count - rank(m);
        if (kernel < pair_count - rho) {
          expect(f, false, "pair kernel bound violated at rho " + std::to_string(rho));
          return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 6

AltForm random_altform(int beta, std::mt19937_64& rng) {
  AltForm mu(beta);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < beta; ++i)
    for (int j = i + 1; j < beta; ++j)
      for (int k = j + 1; k < beta; ++k) {
        int v = coeff(rng);
        if (v) mu.set(i, j, k, v);
      }
  return mu;
}

void criterion_integral(Failures& f) {
  for (long long n = -5; n <= 5; ++n) {
    BoPlan p{3, {{{0, 1, 2}, n}}};
    AltForm expected(3);
    if (n) expected.set(0, 1, 2, n);
    expect(f, mu_of_boplan(p) == expected, "chain coefficient " + std::to_string(n));
  }
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    int beta = 3 + int(rng() % 3);
    auto mu = random_altform(beta, rng);
    if (!(mu_of_boplan(realize_integral(mu)) == mu)) {
      expect(f, false, "integral roundtrip failed");
      return;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    int beta = 3 + int(rng() % 3);
    auto mu = random_altform(beta, rng);
    auto ring = build_ring(mu);
    for (int i = 0; i < beta; ++i)
      for (int j = 0; j < beta; ++j)
        for (int k = 0; k < beta; ++k) {
          // (r_i r_j) r_k pairs the degree-2 expansion against r_k;
          // r_i (r_j r_k) pairs r_i against the degree-2 expansion
          long long left = 0, right = 0;
          for (int l = 0; l < beta; ++l) {
            left += ring.deg1x1[i][j][l] * ring.deg1x2[k][l];
            right += ring.deg1x2[i][l] * ring.deg1x1[j][k][l];
          }
          if (left != right || left != mu.get(i, j, k)) {
            expect(f, false, "associativity failed");
            return;
          }
        }
  }
  // classification trichotomy over both primes for every beta up to 5
  for (int p : {3, 5}) {
    for (int c = 0; c < p; ++c) {
      AltForm mu(3);
      if (c) mu.set(0, 1, 2, c);
      int r = contraction_rank(mu, p);
      expect(f, r == (c ? 3 : 0), "beta 3 exhaustive rank");
      expect(f, standard_class_small_beta(mu, p) ==
                    (c ? StandardFormLabel::single_block : StandardFormLabel::zero),
             "beta 3 exhaustive label");
    }
    for (int trial = 0; trial < 300; ++trial) {
      int beta = 3 + int(rng() % 3);
      auto mu = random_altform(beta, rng);
      int r = contraction_rank(mu, p);
      if (r != 0 && r != 3 && r != 5) {
        expect(f, false, "contraction rank outside {0,3,5}");
        return;
      }
      auto label = standard_class_small_beta(mu, p);
      auto want = r == 0 ? StandardFormLabel::zero
                         : (r == 3 ? StandardFormLabel::single_block
                                   : StandardFormLabel::double_block);
      if (label != want) {
        expect(f, false, "label does not follow the contraction rank");
        return;
      }
      int pairs = beta * (beta - 1) / 2;
      if (pairs - r < pairs - beta) {
        expect(f, false, "kernel bound violated");
        return;
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 7

void criterion_algebraic_laws(Failures& f) {
  std::mt19937_64 rng(4242);
  // cube additivity correction: cube(x+y) = cube(x) + cube(y) + nu(w,x,y)
  for (int s = 0; s < 10000; ++s) {
    int rho = 1 + int(rng() % 4);
    bool nonzero = rng() & 1;
    F2Vector w(rho);
    if (nonzero) w.set(0, true);
    auto space = enumerate_pw(rho, w);
    auto form = space.form_at(rng() % space.size());
    F2Vector x = testutil::random_vector(rho, rng);
    F2Vector y = testutil::random_vector(rho, rng);
    int lhs = eval(form, x + y, x + y, x + y);
    int rhs = eval(form, x, x, x) ^ eval(form, y, y, y) ^ eval(form, w, x, y);
    if (lhs != rhs) {
      expect(f, false, "cube correction failed");
      return;
    }
  }
  // contravariant action: pulling back along g then h equals pulling back
  // along g*h
  for (int s = 0; s < 1000; ++s) {
    int rho = 1 + int(rng() % 5);
    SymTrilinearForm form(rho);
    uint64_t m = uint64_t{1} << multiset_count(rho);
    form = SymTrilinearForm::from_packed(rho, rng() % m);
    auto g = testutil::random_gl(rho, rng);
    auto h = testutil::random_gl(rho, rng);
    if (!(pullback(pullback(form, g), h) == pullback(form, g.mul(h)))) {
      expect(f, false, "action law failed");
      return;
    }
  }
}

struct Criterion {
  const char* label;
  double bound_s;  // 0 = no pinned bound
  std::function<void(Failures&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"fixture exactness", 1.0, criterion_fixtures},
      {"identity closure of all small plans", 10.0, criterion_plan_closure},
      {"realization round trip", 60.0, criterion_roundtrip},
      {"census cross-validation", 60.0, criterion_census},
      {"kernel dimensions", 0.0, criterion_kernels},
      {"integral suite", 30.0, criterion_integral},
      {"algebraic laws on random samples", 0.0, criterion_algebraic_laws},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    auto t0 = std::chrono::steady_clock::now();
    criteria[i].run(f);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = criteria[i].bound_s == 0.0 || dt < criteria[i].bound_s;
    if (!in_time) f.push_back("exceeded time bound");
    bool pass = f.empty();
    failed += pass ? 0 : 1;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", dt);
    std::string line = buf;
    if (criteria[i].bound_s) {
      std::snprintf(buf, sizeof buf, ", bound %d s", int(criteria[i].bound_s));
      line += buf;
    }
    std::printf("[%s] criterion %zu: %s (%s)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].label,
                line.c_str());
    for (const auto& msg : f) std::printf("       - %s\n", msg.c_str());
  }
  return failed;
}
