#pragma once

#include <string>

#include "sgm/process.hpp"

namespace sgm::spec_text {

// sectioned key-value process description: [space], [phi], [modulus],
// [coefficients], [xi]; see specs/ for worked examples
process::ProcessSpec parse_spec(const std::string& path);

// same parser over an in-memory buffer; origin labels error messages
process::ProcessSpec parse_spec_text(const std::string& text, const std::string& origin);

} // namespace sgm::spec_text
