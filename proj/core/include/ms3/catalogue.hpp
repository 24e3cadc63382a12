#pragma once
// Reference descriptors for well-known closed 3-manifolds, each with a plan
// that evaluates back to it. Every entry satisfies the Postnikov-Wu identity
// and every plan passes the roundtrip check; both facts are pinned in the
// acceptance suite.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ms3/forms.hpp"
#include "ms3/plan.hpp"

namespace ms3 {

struct CatalogueEntry {
  std::string name;
  MsDescriptor descriptor;
  std::optional<LinkPlan> plan;
};

const std::vector<CatalogueEntry>& catalogue();

/// Null when the name is unknown.
const CatalogueEntry* find_entry(std::string_view name);

}  // namespace ms3
