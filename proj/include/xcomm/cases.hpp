#pragma once

#include <string>
#include <vector>

#include "xcomm/enumerate.hpp"

namespace xcomm {

/// The worked two-point examples, built on the base partition
/// I_0 | 0 | I_1 | 10 | I_2 with a base map that keeps Sep_A nonempty.
struct BuiltinCase {
  std::string id;     // "6.1.1" ... "6.2.3b"
  std::string title;
  Instance instance;
};

const std::vector<BuiltinCase>& builtin_cases();

/// Throws Error{ParseError} for unknown ids.
const BuiltinCase& builtin_case(const std::string& id);

}  // namespace xcomm
