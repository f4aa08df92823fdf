#include "circperm/cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "circperm/cli/checks.hpp"
#include "circperm/cli/pattern_text.hpp"
#include "circperm/oracle.hpp"
#include "circperm/recurrence.hpp"

namespace circperm::cli {

namespace {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Oracle: return "oracle";
    case Engine::Dp: return "dp";
    case Engine::Gf: return "gf";
    case Engine::All: return "all";
  }
  return "?";
}

void require_oracle_allowed(const RunConfig& cfg, int n) {
  if (n > cfg.oracle_cap && !cfg.allow_beyond_cap)
    throw std::invalid_argument("oracle refuses n=" + std::to_string(n) + " above --oracle-cap " +
                                std::to_string(cfg.oracle_cap) + " (use --force-oracle)");
}

int require_size(const std::optional<int>& n, int fallback, int minimum, const char* what) {
  const int v = n.value_or(fallback);
  if (v < minimum)
    throw std::invalid_argument(std::string(what) + " must be at least " + std::to_string(minimum));
  return v;
}

BigInt integer_coefficient(const TruncatedSeries& s, int k) {
  const auto& c = s[k];
  if (!is_integer(c)) throw SeriesError("coefficient x^" + std::to_string(k) + " is not an integer");
  return c.get_num();
}

}  // namespace

Engine parse_engine(std::string_view name) {
  if (name == "oracle") return Engine::Oracle;
  if (name == "dp") return Engine::Dp;
  if (name == "gf") return Engine::Gf;
  if (name == "all") return Engine::All;
  throw std::invalid_argument("unknown engine \"" + std::string(name) + "\"");
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = require_size(cfg.n, 0, 1, "--n");
  if (cfg.linear && cfg.pattern)
    throw std::invalid_argument("--pattern does not apply to --linear counts");
  const auto pat = parse_pattern(cfg.pattern.value_or(std::string(kDefaultPattern)));
  const bool standard = pat == patterns::circular_target();

  std::vector<Engine> engines;
  if (cfg.engine == Engine::All)
    engines = {Engine::Oracle, Engine::Dp, Engine::Gf};
  else
    engines = {cfg.engine};
  for (Engine e : engines) {
    if (e == Engine::Oracle) require_oracle_allowed(cfg, n);
    if (e != Engine::Oracle && !standard)
      throw std::invalid_argument(std::string("engine ") + engine_name(e) +
                                  " only counts the pattern " + std::string(kDefaultPattern));
  }

  std::vector<std::pair<Engine, BigInt>> results;
  for (Engine e : engines) {
    BigInt value;
    switch (e) {
      case Engine::Oracle:
        value = cfg.linear ? oracle::count_linear_class(n)
                           : oracle::count_circular_avoiders(n, pat);
        break;
      case Engine::Dp: {
        const auto a = recurrence::compute_all(n).a;
        value = cfg.linear ? a.at(n) : (n == 1 ? BigInt(1) : a.at(n - 1));
        break;
      }
      case Engine::Gf: {
        const int k = cfg.linear ? n + 1 : n;
        value = integer_coefficient(gf::A_series(k), k);
        break;
      }
      case Engine::All: break;
    }
    results.emplace_back(e, value);
  }

  if (results.size() == 1) {
    out << to_decimal(results.front().second) << '\n';
    return 0;
  }
  bool agree = true;
  for (const auto& [e, value] : results) {
    out << engine_name(e) << std::string(8 - std::string(engine_name(e)).size(), ' ')
        << to_decimal(value) << '\n';
    agree = agree && value == results.front().second;
  }
  out << (agree ? "MATCH" : "MISMATCH") << '\n';
  if (!agree) err << "engines disagree at n=" << n << '\n';
  return agree ? 0 : 1;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int N = require_size(cfg.n, 30, 1, "--N");
  const std::string& seq = cfg.sequence;
  if (seq != "a" && seq != "b" && seq != "c" && seq != "v")
    throw std::invalid_argument("--sequence must be one of a, b, c, v");
  if (cfg.engine == Engine::All)
    throw std::invalid_argument("table takes a single engine");

  SequenceTable table;
  table.name = seq;
  auto add = [&](int n, const BigInt& value) { table.rows.push_back({n, BigRational(value)}); };

  switch (cfg.engine) {
    case Engine::Dp: {
      const auto t = recurrence::compute_all(N);
      for (int n = 1; n <= N; ++n) {
        if (seq == "a") add(n, t.a.at(n));
        if (seq == "b") add(n, n >= 2 ? t.b.total(n) : BigInt(0));
        if (seq == "c") add(n, n >= 3 ? t.c.total(n) : BigInt(0));
        if (seq == "v") add(n, t.v.row_total(n));
      }
      break;
    }
    case Engine::Oracle: {
      require_oracle_allowed(cfg, N);
      for (int n = 1; n <= N; ++n) {
        if (seq == "a") add(n, oracle::count_linear_class(n));
        if (seq == "b") add(n, n >= 2 ? oracle::oracle_b(n).total() : BigInt(0));
        if (seq == "c") add(n, n >= 3 ? oracle::oracle_c(n).total() : BigInt(0));
        if (seq == "v") add(n, oracle::oracle_v(n).total());
      }
      break;
    }
    case Engine::Gf: {
      if (seq == "a") {
        const auto A = gf::A_series(N + 1);
        for (int n = 1; n <= N; ++n) add(n, integer_coefficient(A, n + 1));
      } else {
        const auto s = seq == "b" ? gf::B11_series(N)
                     : seq == "c" ? gf::C11_series(N)
                                  : gf::V_series(BigRational(1), N);
        for (int n = 1; n <= N; ++n) add(n, integer_coefficient(s, n));
      }
      break;
    }
    case Engine::All: break;
  }
  out << emit(table, cfg.format);
  return 0;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int order = cfg.order;
  if (order < 0) throw std::invalid_argument("--order must be non-negative");
  const std::string& g = cfg.gf;
  TruncatedSeries s;
  std::string name = g;
  if (cfg.v || cfg.u) {
    if (g != "A") throw std::invalid_argument("--v and --u apply to --gf A only");
    const BigRational v = cfg.v.value_or(BigRational(1));
    const BigRational u = cfg.u.value_or(BigRational(1));
    s = gf::A_vu_series(v, u, order);
    name = "A(" + to_decimal(v) + "," + to_decimal(u) + ")";
  } else if (g == "A") {
    s = gf::A_series(order);
  } else if (g == "B11") {
    s = gf::B11_series(order);
  } else if (g == "C11") {
    s = gf::C11_series(order);
  } else if (g == "V1") {
    s = gf::V_series(BigRational(1), order);
  } else if (g == "V0") {
    s = gf::V0_series(order);
  } else {
    throw std::invalid_argument("--gf must be one of A, B11, C11, V1, V0");
  }

  if (cfg.format == Format::Plain) {
    std::string line;
    for (int k = 0; k <= s.order(); ++k) line += (k ? "," : "") + to_decimal(s[k]);
    out << line << '\n';
    return 0;
  }
  SequenceTable table;
  table.name = name;
  for (int k = 0; k <= s.order(); ++k) table.rows.push_back({k, s[k]});
  out << emit(table, cfg.format);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  CheckScale scale;
  scale.table_n = require_size(cfg.n, 30, 2, "--N");
  scale.order = cfg.order;
  if (scale.order < 2) throw std::invalid_argument("--order must be at least 2");
  scale.oracle_max = std::min(9, cfg.oracle_cap);
  if (cfg.allow_beyond_cap) scale.oracle_max = std::max(scale.oracle_max, cfg.oracle_cap);
  scale.reduction_max = std::min(8, scale.oracle_max);
  scale.bivariate_max = std::min(8, scale.oracle_max);
  if (cfg.fault) scale.fault = parse_fault(*cfg.fault);

  int failed = 0;
  const auto results = run_all(scale, [&](const CheckResult& r) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << (r.passed ? " [" : ": ") << r.detail << (r.passed ? "]" : "");
    out << std::endl;
    if (!r.passed) ++failed;
  });
  out << results.size() << " checks, " << failed << " failed" << '\n';
  return failed == 0 ? 0 : 1;
}

int cmd_conjectures(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int N = require_size(cfg.n, 30, 2, "--N");
  const auto t = recurrence::compute_all(N);
  const auto r = recurrence::check_conjectures(t.a);
  out << "a_n^(n+1) < a_(n+1)^n, checked exactly for n = 1.." << N - 1
      << " (checked, not proven)\n";
  out << "n  holds  a_(n+1)/a_n\n";
  for (const auto& s : r.steps)
    out << s.n << "  " << (s.inequality_holds ? "yes" : "NO") << "  " << to_decimal(s.ratio) << '\n';
  out << "inequality holds for every checked n: " << (r.inequality_holds_everywhere ? "yes" : "no")
      << '\n';
  out << "ratios strictly increasing over the checked range: "
      << (r.ratios_strictly_increasing ? "yes" : "no") << " (observation only)\n";
  return 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Count: return cmd_count(cfg, out, err);
      case Command::Table: return cmd_table(cfg, out, err);
      case Command::Series: return cmd_series(cfg, out, err);
      case Command::Verify: return cmd_verify(cfg, out, err);
      case Command::Conjectures: return cmd_conjectures(cfg, out, err);
    }
  } catch (const gf::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const SeriesError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace circperm::cli
