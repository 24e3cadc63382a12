#pragma once
// Serialization of descriptors, plans, integral forms and census results.
// Emission is byte-stable: fixed key order, arrays sorted ascending, compact
// separators. Indices are 1-based on the wire and 0-based in the API.

#include <stdexcept>
#include <string>

#include "ms3/census.hpp"
#include "ms3/integral.hpp"
#include "ms3/normal_form.hpp"
#include "ms3/plan.hpp"

namespace ms3 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string descriptor_to_json(const MsDescriptor& d);
MsDescriptor descriptor_from_json(const std::string& text);

std::string plan_to_json(const LinkPlan& p);
LinkPlan plan_from_json(const std::string& text);

std::string altform_to_json(const AltForm& mu);
AltForm altform_from_json(const std::string& text);

std::string census_to_json(const Census& c);

std::string matrix_to_json(const F2Matrix& m);

std::string orientable_normalization_to_json(const OrientableNormalization& n);
std::string nonorientable_normalization_to_json(const NonorientableNormalization& n);

}  // namespace ms3
