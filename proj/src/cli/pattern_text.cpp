#include "circperm/cli/pattern_text.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace circperm::cli {

VincularPattern parse_pattern(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty pattern");
  text = text.substr(first, last - first + 1);

  std::vector<int> entries;
  std::vector<int> vincula;
  bool joined = false;  // previous character was a letter
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') {
      if (joined) vincula.push_back(static_cast<int>(entries.size()));  // 1-based left letter
      entries.push_back(ch - '0');
      joined = true;
    } else if (ch == '-') {
      if (!joined)
        throw std::invalid_argument("pattern \"" + std::string(text) +
                                    "\": '-' must sit between two letters");
      joined = false;
    } else {
      throw std::invalid_argument("pattern \"" + std::string(text) +
                                  "\": unexpected character '" + std::string(1, ch) + "'");
    }
  }
  if (!joined)
    throw std::invalid_argument("pattern \"" + std::string(text) + "\" ends with '-'");
  return VincularPattern(std::move(entries), std::move(vincula));
}

}  // namespace circperm::cli
