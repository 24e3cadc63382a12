#pragma once
// Compiles a descriptor satisfying the Postnikov-Wu identity into a plan
// whose evaluation reproduces it exactly, after the recorded basis change.
//
// Orientable descriptors translate directly: framings from cubes, clasps
// from pair products, borromean corrections for the residual triples; the
// basis change is the identity. Nonorientable descriptors are normalized
// first; each symplectic pair of the w-pairing becomes a projective-plane
// strand (the pair containing w) or a Klein block whose strand roles are
// forced by the pair products.

#include <optional>

#include "ms3/normal_form.hpp"
#include "ms3/plan.hpp"

namespace ms3 {

struct Realization {
  LinkPlan plan;
  F2Matrix change;  // eval_plan(plan) reproduces pullback(d.form, change)
};

/// Requires check_pw(d).
Realization realize(const MsDescriptor& d);

struct RoundtripResult {
  bool ok = true;
  std::optional<std::array<int, 3>> mismatch;  // first differing multiset, 0-based
};

/// First difference between two descriptors of equal rank, scanning multisets
/// in colex order.
RoundtripResult compare_descriptors(const MsDescriptor& expected, const MsDescriptor& actual);

/// Realizes, evaluates, and compares against the transported descriptor.
RoundtripResult roundtrip(const MsDescriptor& d);

}  // namespace ms3
