#pragma once

#include <string>
#include <vector>

#include "toric/stacky_fan.hpp"

namespace toric {

// named example fans: p2, root-p2-c2, root-p2-c3, wps, hirzebruch-ex2, example3, p112
StackyFan example_fan(const std::string& name);
std::vector<std::string> example_fan_names();

}  // namespace toric
