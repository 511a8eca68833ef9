#pragma once

#include <stdexcept>
#include <string>

#include "toric/stacky_fan.hpp"

namespace toric {

// malformed fan file: the message names the offending field
struct FanParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON object {"rank": int, "torsion": [int...], "B": [[int...]...],
// "cones": [[int...]...]} with 1-based ray indices in the cones
StackyFan parse_fan(const std::string& text);
StackyFan load_fan(const std::string& path);

std::string serialize_fan(const StackyFan& fan);

}  // namespace toric
