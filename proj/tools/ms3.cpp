// Batch front end: every pipeline stage as a subcommand with line-delimited
// JSON on stdin/stdout. Exit 0 on success, 1 on a domain failure (violated
// identity, mismatch), 2 on malformed input or bad usage.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ms3/catalogue.hpp"
#include "ms3/census.hpp"
#include "ms3/f2.hpp"
#include "ms3/forms.hpp"
#include "ms3/json_io.hpp"
#include "ms3/normal_form.hpp"
#include "ms3/plan.hpp"
#include "ms3/realize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitBadInput = 2;

// Applies `handle` to every nonempty stdin line. Parse failures stop the run
// with exit 2; domain failures finish the stream and exit 1.
int for_each_line(const std::function<bool(const std::string&)>& handle) {
  std::string line;
  bool all_ok = true;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    try {
      all_ok = handle(line) && all_ok;
    } catch (const ms3::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadInput;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitDomain;
    }
  }
  return all_ok ? kExitOk : kExitDomain;
}

int cmd_verify() {
  return for_each_line([](const std::string& line) {
    auto d = ms3::descriptor_from_json(line);
    auto bad = ms3::pw_violations(d.form, d.w);
    if (bad.empty()) {
      std::cout << "ok\n";
      return true;
    }
    std::string out = "{\"ok\":false,\"pairs\":[";
    for (size_t i = 0; i < bad.size(); ++i) {
      if (i) out += ',';
      out += '[' + std::to_string(bad[i].first + 1) + ',' + std::to_string(bad[i].second + 1) + ']';
    }
    std::cout << out << "]}\n";
    return false;
  });
}

int cmd_normalize() {
  return for_each_line([](const std::string& line) {
    auto d = ms3::descriptor_from_json(line);
    if (d.w.is_zero())
      std::cout << ms3::orientable_normalization_to_json(ms3::normalize_orientable(d.form)) << "\n";
    else
      std::cout << ms3::nonorientable_normalization_to_json(ms3::normalize_nonorientable(d.form, d.w))
                << "\n";
    return true;
  });
}

int cmd_realize() {
  return for_each_line([](const std::string& line) {
    auto d = ms3::descriptor_from_json(line);
    std::cout << ms3::plan_to_json(ms3::realize(d).plan) << "\n";
    return true;
  });
}

int cmd_evalplan() {
  return for_each_line([](const std::string& line) {
    auto p = ms3::plan_from_json(line);
    std::cout << ms3::descriptor_to_json(ms3::eval_plan(p)) << "\n";
    return true;
  });
}

int cmd_kernel() {
  return for_each_line([](const std::string& line) {
    auto d = ms3::descriptor_from_json(line);
    std::cout << ms3::cup_kernel_dim(d.form) << "\n";
    return true;
  });
}

bool roundtrip_one(const ms3::MsDescriptor& d) {
  auto r = ms3::roundtrip(d);
  if (r.ok) {
    std::cout << "ok\n";
    return true;
  }
  auto [i, j, k] = *r.mismatch;
  std::cout << "{\"ok\":false,\"mismatch\":[" << i + 1 << ',' << j + 1 << ',' << k + 1 << "]}\n";
  return false;
}

int cmd_roundtrip_stream() {
  return for_each_line([](const std::string& line) { return roundtrip_one(ms3::descriptor_from_json(line)); });
}

// Sweep mode: roundtrip over the whole solution space (samples == 0) or a
// seeded random sample of it.
int cmd_roundtrip_sweep(int rank, bool w_nonzero, uint64_t samples, uint64_t seed) {
  ms3::F2Vector w(rank);
  if (w_nonzero) w.set(0, true);
  auto space = ms3::enumerate_pw(rank, w);
  uint64_t checked = 0;
  auto run = [&](uint64_t index) {
    ms3::MsDescriptor d(space.form_at(index), w);
    auto r = ms3::roundtrip(d);
    ++checked;
    if (!r.ok) {
      auto [i, j, k] = *r.mismatch;
      std::cout << "{\"ok\":false,\"index\":" << index << ",\"mismatch\":[" << i + 1 << ',' << j + 1
                << ',' << k + 1 << "]}\n";
      return false;
    }
    return true;
  };
  if (samples == 0) {
    for (uint64_t i = 0; i < space.size(); ++i)
      if (!run(i)) return kExitDomain;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(0, space.size() - 1);
    for (uint64_t s = 0; s < samples; ++s)
      if (!run(pick(rng))) return kExitDomain;
  }
  std::cout << "{\"ok\":true,\"rank\":" << rank << ",\"w_class\":\"" << (w_nonzero ? "nonzero" : "zero")
            << "\",\"checked\":" << checked << "}\n";
  return kExitOk;
}

int cmd_classify(int rank, bool w_nonzero, int parallel) {
  auto c = ms3::census(rank, w_nonzero ? ms3::WClass::nonzero : ms3::WClass::zero, parallel);
  std::cout << ms3::census_to_json(c) << "\n";
  return kExitOk;
}

int cmd_example(const std::string& name, bool want_plan) {
  const auto* entry = ms3::find_entry(name);
  if (!entry) {
    std::cerr << "error: unknown catalogue entry '" << name << "'\n";
    return kExitBadInput;
  }
  if (want_plan) {
    if (!entry->plan) {
      std::cerr << "error: catalogue entry '" << name << "' has no plan\n";
      return kExitDomain;
    }
    std::cout << ms3::plan_to_json(*entry->plan) << "\n";
  } else {
    std::cout << ms3::descriptor_to_json(entry->descriptor) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trilinear form toolkit for mod-2 three-manifold rings"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check form JSON lines against the degree-1 identity");
  auto* normalize = app.add_subcommand("normalize", "basis-normalize form JSON lines");
  auto* realize = app.add_subcommand("realize", "compile form JSON lines into surgery plans");
  auto* evalplan = app.add_subcommand("evalplan", "evaluate plan JSON lines back to forms");
  auto* kernel = app.add_subcommand("kernel", "print the cup-product kernel dimension per line");

  auto* roundtrip = app.add_subcommand("roundtrip", "realize and re-evaluate, comparing exactly");
  int rt_rank = 0;
  std::string rt_w = "zero";
  uint64_t rt_samples = 10000;
  uint64_t rt_seed = 0;
  auto* rt_rank_opt = roundtrip->add_option("--rank", rt_rank, "sweep the whole solution space at this rank")
                          ->check(CLI::Range(1, 4));
  roundtrip->add_option("--w", rt_w, "w class for the sweep")->check(CLI::IsMember({"zero", "nonzero"}));
  roundtrip->add_option("--samples", rt_samples, "random sample count for the sweep; 0 = exhaustive");
  roundtrip->add_option("--seed", rt_seed, "seed for sampled sweeps");

  auto* classify = app.add_subcommand("classify", "census of solution forms up to basis change");
  int cl_rank = 0;
  std::string cl_w = "zero";
  int cl_parallel = 1;
  classify->add_option("--rank", cl_rank, "rank of the census")->required()->check(CLI::Range(1, 4));
  classify->add_option("--w", cl_w, "w class")->check(CLI::IsMember({"zero", "nonzero"}));
  classify->add_option("--parallel", cl_parallel, "worker threads; the result does not depend on this")
      ->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("example", "print a catalogue fixture");
  std::string ex_name;
  bool ex_plan = false;
  example->add_option("name", ex_name, "fixture name")->required();
  example->add_flag("--plan", ex_plan, "print the surgery plan instead of the form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (*verify) return cmd_verify();
    if (*normalize) return cmd_normalize();
    if (*realize) return cmd_realize();
    if (*evalplan) return cmd_evalplan();
    if (*kernel) return cmd_kernel();
    if (*roundtrip)
      return *rt_rank_opt ? cmd_roundtrip_sweep(rt_rank, rt_w == "nonzero", rt_samples, rt_seed)
                          : cmd_roundtrip_stream();
    if (*classify) return cmd_classify(cl_rank, cl_w == "nonzero", cl_parallel);
    if (*example) return cmd_example(ex_name, ex_plan);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitBadInput;
}
