#pragma once

// Text form of vincular patterns for the command line. Letters are the
// digits 1-9; letters written next to each other must be adjacent in an
// occurrence, and '-' separates letters that need not be. The pattern
// 2341 with 2,3 forced adjacent is written "23-4-1".

#include <string_view>

#include "circperm/permutation.hpp"

namespace circperm::cli {

// Throws std::invalid_argument on anything that is not a pattern.
VincularPattern parse_pattern(std::string_view text);

}  // namespace circperm::cli
