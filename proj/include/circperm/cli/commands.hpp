#pragma once

// Subcommands of the circperm tool. Each writes its result to `out`,
// diagnostics to `err`, and returns the process exit status.

#include <iosfwd>
#include <optional>
#include <string>

#include "circperm/cli/table_io.hpp"
#include "circperm/gf.hpp"
#include "circperm/numeric.hpp"

namespace circperm::cli {

enum class Command { Count, Table, Series, Verify, Conjectures };
enum class Engine { Oracle, Dp, Gf, All };

Engine parse_engine(std::string_view name);

struct RunConfig {
  Command command = Command::Count;
  std::optional<int> n;                 // length, table size or oracle bound
  std::optional<std::string> pattern;   // count only; default 23-4-1
  Engine engine = Engine::Dp;
  Format format = Format::Plain;
  int oracle_cap = 10;
  bool allow_beyond_cap = false;
  int order = gf::kDefaultOrder;
  std::string gf = "A";                 // A, B11, C11, V1, V0
  std::optional<BigRational> v, u;      // A at scalars
  bool linear = false;                  // count |L_n| instead of |A_n|
  std::string sequence = "a";           // table: a, b, c or v totals
  std::optional<std::string> fault;     // verify: corrupt one DP cell
};

inline constexpr std::string_view kDefaultPattern = "23-4-1";

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_conjectures(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace circperm::cli
