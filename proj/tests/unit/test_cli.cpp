#include <sstream>

#include "circperm/cli/checks.hpp"
#include "circperm/cli/commands.hpp"
#include "circperm/cli/pattern_text.hpp"
#include "circperm/cli/table_io.hpp"
#include "doctest.h"

using namespace circperm;
using namespace circperm::cli;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int status = run(cfg, out, err);
  return {status, out.str(), err.str()};
}

RunConfig count(int n, Engine e = Engine::Dp) {
  RunConfig c;
  c.command = Command::Count;
  c.n = n;
  c.engine = e;
  return c;
}

}  // namespace

TEST_CASE("pattern text") {
  CHECK(parse_pattern("23-4-1") == patterns::circular_target());
  CHECK(parse_pattern(" 12-3 ") == patterns::adjacent_12_3());
  CHECK(parse_pattern("4-1-23") == patterns::p41_adjacent_23());
  CHECK(parse_pattern("2341").vincula().size() == 3);
  CHECK(parse_pattern("2-3-4-1").vincula().empty());
  CHECK(parse_pattern(patterns::circular_target().to_string()) == patterns::circular_target());
  CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("-12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("12-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("1--2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("1a2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("11"), std::invalid_argument);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/6") == BigRational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("table emission") {
  SequenceTable t{"a", {{1, 1}, {2, 2}, {3, 5}}};
  CHECK(emit(t, Format::Csv) == "n,value\n1,1\n2,2\n3,5\n");
  CHECK(emit(t, Format::Json) ==
        "{\"sequence\":\"a\",\"values\":[{\"n\":1,\"value\":\"1\"},{\"n\":2,\"value\":\"2\"},"
        "{\"n\":3,\"value\":\"5\"}]}\n");
  CHECK(emit(t, Format::Plain) == "n  value\n1      1\n2      2\n3      5\n");
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("csv and json round trip") {
  SequenceTable t{"a", {}};
  BigInt big("362092868720288824992");
  for (int n = 1; n <= 6; ++n) t.rows.push_back({n, BigRational(big * n)});
  t.rows.push_back({7, BigRational(-7, 3)});

  const auto csv = emit(t, Format::Csv);
  CHECK(emit(parse_csv(csv), Format::Csv) == csv);
  CHECK(parse_csv(csv).rows == t.rows);

  const auto json = emit(t, Format::Json);
  CHECK(emit(parse_json(json), Format::Json) == json);
  CHECK(parse_json(json) == t);

  CHECK_THROWS_AS(parse_csv("x,y\n1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("n,value\n1;2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json("{\"sequence\":\"a\"}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json("not json"), std::invalid_argument);
}

TEST_CASE("count") {
  CHECK(run_cfg(count(10)).out == "11857\n");
  CHECK(run_cfg(count(2)).out == "1\n");
  CHECK(run_cfg(count(1, Engine::Gf)).out == "1\n");
  CHECK(run_cfg(count(7, Engine::Gf)).out == "180\n");

  auto lin = count(5, Engine::Oracle);
  lin.linear = true;
  CHECK(run_cfg(lin).out == "50\n");

  const auto all = run_cfg(count(8, Engine::All));
  CHECK(all.status == 0);
  CHECK(all.out == "oracle  690\ndp      690\ngf      690\nMATCH\n");
}

TEST_CASE("count guards") {
  auto big = count(11, Engine::Oracle);
  const auto refused = run_cfg(big);
  CHECK(refused.status == 2);
  CHECK(refused.err.find("oracle-cap") != std::string::npos);

  auto small_cap = count(5, Engine::Oracle);
  small_cap.oracle_cap = 4;
  CHECK(run_cfg(small_cap).status == 2);
  small_cap.allow_beyond_cap = true;
  CHECK(run_cfg(small_cap).out == "15\n");

  auto other = count(5, Engine::Dp);
  other.pattern = "1-23";
  CHECK(run_cfg(other).status == 2);
  other.engine = Engine::Oracle;
  CHECK(run_cfg(other).status == 0);

  auto bad = count(5);
  bad.pattern = "1x";
  CHECK(run_cfg(bad).status == 2);
  CHECK(run_cfg(count(0)).status == 2);
}

TEST_CASE("table") {
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.n = 1;
  CHECK(run_cfg(cfg).out == "n  value\n1      1\n");

  cfg.n = 30;
  cfg.format = Format::Csv;
  const auto dp = run_cfg(cfg).out;
  const auto parsed = parse_csv(dp);
  REQUIRE(parsed.rows.size() == 30);
  for (int n = 1; n <= 30; ++n) CHECK(to_decimal(parsed.rows[n - 1].value) == published_a()[n - 1]);

  cfg.n = 40;
  CHECK(parse_csv(run_cfg(cfg).out).rows.size() == 40);

  cfg.n = 12;
  for (const char* seq : {"a", "b", "c", "v"}) {
    cfg.sequence = seq;
    cfg.engine = Engine::Dp;
    const auto a = run_cfg(cfg).out;
    cfg.engine = Engine::Gf;
    CHECK(run_cfg(cfg).out == a);
    if (std::string(seq) != "a") {
      cfg.n = 7;
      cfg.engine = Engine::Oracle;
      const auto o = run_cfg(cfg).out;
      cfg.engine = Engine::Dp;
      CHECK(run_cfg(cfg).out == o);
      cfg.n = 12;
    }
  }
  cfg.sequence = "z";
  CHECK(run_cfg(cfg).status == 2);
}

TEST_CASE("series") {
  RunConfig cfg;
  cfg.command = Command::Series;
  cfg.order = 10;
  CHECK(run_cfg(cfg).out == "0,1,1,2,5,15,50,180,690,2792,11857\n");

  cfg.v = BigRational(1);
  cfg.u = BigRational(1);
  CHECK(run_cfg(cfg).out == "0,1,1,2,5,15,50,180,690,2792,11857\n");

  cfg.v.reset();
  cfg.u.reset();
  cfg.gf = "V0";
  const auto v0 = parse_csv([&] {
    auto c = cfg;
    c.format = Format::Csv;
    return run_cfg(c).out;
  }());
  cfg.gf = "V1";
  cfg.format = Format::Csv;
  const auto v1 = parse_csv(run_cfg(cfg).out);
  // V0 - x V1 - x vanishes
  for (int k = 0; k <= 10; ++k) {
    BigRational r = v0.rows[k].value - (k >= 1 ? v1.rows[k - 1].value : BigRational(0));
    if (k == 1) r -= 1;
    CHECK(r == 0);
  }

  cfg.gf = "A";
  cfg.format = Format::Json;
  cfg.v = BigRational(1, 2);
  const auto j = parse_json(run_cfg(cfg).out);
  CHECK(j.name == "A(1/2,1)");
  CHECK(j.rows.size() == 11);

  cfg.gf = "B11";
  CHECK(run_cfg(cfg).status == 2);  // --v only with A
  cfg.v.reset();
  cfg.gf = "Q";
  CHECK(run_cfg(cfg).status == 2);
}

TEST_CASE("conjectures") {
  RunConfig cfg;
  cfg.command = Command::Conjectures;
  cfg.n = 2;
  const auto r = run_cfg(cfg);
  CHECK(r.status == 0);
  CHECK(r.out.find("checked, not proven") != std::string::npos);
  CHECK(r.out.find("\n1  yes  2\n") != std::string::npos);
  cfg.n = 30;
  CHECK(run_cfg(cfg).out.find("inequality holds for every checked n: yes") != std::string::npos);
}

TEST_CASE("verify at small scale, with and without a fault") {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.n = 12;
  cfg.order = 12;
  cfg.oracle_cap = 6;
  const auto ok = run_cfg(cfg);
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  cfg.fault = "c:6:4:2";
  const auto bad = run_cfg(cfg);
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL oracle equals recurrence cell by cell: c(6,4,2)") != std::string::npos);

  cfg.fault = "v:9:3";  // beyond the oracle range, still caught by the series
  const auto v = run_cfg(cfg);
  CHECK(v.status == 1);
  CHECK(v.out.find("FAIL series coefficients equal recurrence totals: V(x,1) x^9") !=
        std::string::npos);

  cfg.fault = "q:1";
  CHECK(run_cfg(cfg).status == 2);
}

TEST_CASE("fault text") {
  const auto f = parse_fault("b:5:3:1");
  CHECK(f.table == 'b');
  CHECK(f.n == 5);
  CHECK(f.i == 3);
  CHECK(f.j == 1);
  CHECK(parse_fault("v:4:2").j == 2);
  CHECK_THROWS_AS(parse_fault("v:4:2:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fault("b:5:x:1"), std::invalid_argument);
}
