#pragma once

#include <string>
#include <vector>

#include "sagnac/circuit_doc.hpp"

namespace sagnac {

std::vector<std::string> preset_names();
const CircuitDoc& builtin_preset(const std::string& name);  // throws on unknown name
std::string preset_text(const std::string& name);

}  // namespace sagnac
