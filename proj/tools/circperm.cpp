// circperm: counts circular permutations avoiding 23-4-1 (2 and 3 adjacent)
// by brute force, by recurrence and from generating functions.

#include <iostream>

#include "CLI11.hpp"
#include "circperm/cli/commands.hpp"

using namespace circperm::cli;

namespace {

const char* kPatternHelp =
    "Vincular pattern: digits 1-9, letters written together must be adjacent, "
    "'-' separates free letters. 23-4-1 is 2341 with 2 and 3 adjacent.";

void add_engine(CLI::App* sub, std::string& engine, const char* def) {
  engine = def;
  sub->add_option("--engine", engine, "oracle, dp, gf or all")
      ->check(CLI::IsMember({"oracle", "dp", "gf", "all"}))
      ->capture_default_str();
}

void add_oracle_guard(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--oracle-cap", cfg.oracle_cap, "largest n the oracle accepts")
      ->capture_default_str();
  sub->add_flag("--force-oracle", cfg.allow_beyond_cap, "let the oracle exceed --oracle-cap");
}

void add_format(CLI::App* sub, std::string& format) {
  format = "plain";
  sub->add_option("--format", format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular permutations avoiding 23-4-1, counted three ways"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string engine, format, pattern, fault, v, u;
  int n = 0;

  auto* count = app.add_subcommand("count", "number of avoiders of length n");
  count->add_option("--n,-n", n, "length")->required();
  count->add_option("--pattern", pattern, kPatternHelp);
  count->add_flag("--linear", cfg.linear, "count the linear class L_n instead");
  add_engine(count, engine, "dp");
  add_oracle_guard(count, cfg);

  auto* table = app.add_subcommand("table", "a_1..a_N (or the b, c, v totals)");
  table->add_option("--N,-N", n, "number of rows")->default_val(30);
  table->add_option("--sequence", cfg.sequence, "a, b, c or v")
      ->check(CLI::IsMember({"a", "b", "c", "v"}))
      ->capture_default_str();
  add_engine(table, engine, "dp");
  add_format(table, format);
  add_oracle_guard(table, cfg);

  auto* series = app.add_subcommand("series", "coefficients of a generating function");
  series->add_option("--gf", cfg.gf, "A, B11, C11, V1 or V0")
      ->check(CLI::IsMember({"A", "B11", "C11", "V1", "V0"}))
      ->capture_default_str();
  series->add_option("--order", cfg.order, "highest power of x")->capture_default_str();
  series->add_option("--v", v, "rational value of v in A(x,v,u)");
  series->add_option("--u", u, "rational value of u in A(x,v,u)");
  add_format(series, format);

  auto* verify = app.add_subcommand("verify", "cross-check all engines");
  verify->add_option("--N,-N", n, "recurrence length")->default_val(30);
  verify->add_option("--order", cfg.order, "series order")->capture_default_str();
  verify->add_option("--inject-fault", fault, "corrupt one recurrence cell: b:n:i:j, c:n:i:j or v:n:j");
  add_oracle_guard(verify, cfg);

  auto* conj = app.add_subcommand("conjectures", "a_n^(n+1) < a_(n+1)^n up to N");
  conj->add_option("--N,-N", n, "largest n")->default_val(30);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) cfg.command = Command::Count;
    if (*table) cfg.command = Command::Table;
    if (*series) cfg.command = Command::Series;
    if (*verify) cfg.command = Command::Verify;
    if (*conj) cfg.command = Command::Conjectures;
    if (cfg.command != Command::Series) cfg.n = n;
    if (!engine.empty()) cfg.engine = parse_engine(engine);
    if (!format.empty()) cfg.format = parse_format(format);
    if (!pattern.empty()) cfg.pattern = pattern;
    if (!fault.empty()) cfg.fault = fault;
    if (!v.empty()) cfg.v = parse_rational(v);
    if (!u.empty()) cfg.u = parse_rational(u);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return run(cfg, std::cout, std::cerr);
}
