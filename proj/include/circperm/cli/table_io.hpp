#pragma once

// Emission and parsing of numbered sequences. Values are exact; integers
// print as plain decimals and other rationals as p/q.
//
//   plain  aligned columns under an "n value" header
//   csv    header "n,value", one row per entry
//   json   {"sequence":"a","values":[{"n":1,"value":"1"},...]}
//
// Values are strings in JSON so that consumers limited to doubles do not
// round them.

#include <string>
#include <string_view>
#include <vector>

#include "circperm/numeric.hpp"

namespace circperm::cli {

enum class Format { Plain, Csv, Json };

// "plain", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

struct SequenceRow {
  long n = 0;
  BigRational value;
  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

struct SequenceTable {
  std::string name;  // not carried by csv
  std::vector<SequenceRow> rows;
  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

std::string emit(const SequenceTable& table, Format format);

// Inverse of emit for csv and json; throws std::invalid_argument on
// malformed input.
SequenceTable parse_csv(std::string_view text);
SequenceTable parse_json(std::string_view text);

// Exact rational from "p" or "p/q"; throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

}  // namespace circperm::cli
