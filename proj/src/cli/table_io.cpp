#include "circperm/cli/table_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace circperm::cli {

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\"");
}

BigRational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto valid = [](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    return !part.empty() &&
           std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-')
    throw std::invalid_argument("not a rational number: \"" + s + "\"");
  const BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  BigRational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

namespace {

std::string emit_plain(const SequenceTable& t) {
  std::size_t wn = 1, wv = 5;
  std::vector<std::string> values;
  for (const auto& r : t.rows) {
    values.push_back(to_decimal(r.value));
    wn = std::max(wn, std::to_string(r.n).size());
    wv = std::max(wv, values.back().size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b) {
    out << std::string(wn - a.size(), ' ') << a << "  " << std::string(wv - b.size(), ' ') << b
        << '\n';
  };
  line("n", "value");
  for (std::size_t k = 0; k < t.rows.size(); ++k) line(std::to_string(t.rows[k].n), values[k]);
  return out.str();
}

std::string emit_csv(const SequenceTable& t) {
  std::string out = "n,value\n";
  for (const auto& r : t.rows) out += std::to_string(r.n) + "," + to_decimal(r.value) + "\n";
  return out;
}

std::string emit_json(const SequenceTable& t) {
  nlohmann::ordered_json doc;
  doc["sequence"] = t.name;
  doc["values"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows)
    doc["values"].push_back({{"n", r.n}, {"value", to_decimal(r.value)}});
  return doc.dump() + "\n";
}

}  // namespace

std::string emit(const SequenceTable& table, Format format) {
  switch (format) {
    case Format::Plain: return emit_plain(table);
    case Format::Csv: return emit_csv(table);
    case Format::Json: return emit_json(table);
  }
  throw std::invalid_argument("unknown format");
}

SequenceTable parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "n,value")
    throw std::invalid_argument("csv table must start with the header n,value");
  SequenceTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("csv row without a comma: \"" + line + "\"");
    try {
      std::size_t used = 0;
      const long n = std::stol(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
      t.rows.push_back({n, parse_rational(line.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed csv row: \"" + line + "\"");
    }
  }
  return t;
}

SequenceTable parse_json(std::string_view text) {
  SequenceTable t;
  try {
    const auto doc = nlohmann::json::parse(text);
    t.name = doc.at("sequence").get<std::string>();
    for (const auto& row : doc.at("values"))
      t.rows.push_back({row.at("n").get<long>(),
                        parse_rational(row.at("value").get<std::string>())});
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed json table: ") + e.what());
  }
  return t;
}

}  // namespace circperm::cli
