#include <string>

#include "circperm/cli/checks.hpp"
#include "circperm/oracle.hpp"
#include "circperm/recurrence.hpp"
#include "doctest.h"

using namespace circperm;
using namespace circperm::recurrence;

namespace {

const Tables& tables30() {
  static const Tables t = compute_all(30);
  return t;
}

}  // namespace

TEST_CASE("binomials") {
  BinomialTable c(10);
  CHECK(c(0, 0) == 1);
  CHECK(c(10, 3) == 120);
  CHECK(c(5, 6) == 0);
  CHECK(c(5, -1) == 0);
  CHECK(c(-1, 0) == 0);
}

TEST_CASE("a_1..a_30 as published") {
  const auto pub = cli::published_a();
  const auto& a = tables30().a;
  REQUIRE(a.size() == 30);
  for (int n = 1; n <= 30; ++n) CHECK(to_decimal(a.at(n)) == pub[n - 1]);
  CHECK(to_decimal(a.at(30)) == "362092868720288824992");
}

TEST_CASE("extending past the table keeps the prefix") {
  const auto t = compute_all(34);
  for (int n = 1; n <= 30; ++n) CHECK(t.a.at(n) == tables30().a.at(n));
  // agrees with the series engine, which computes these independently
  CHECK(to_decimal(t.a.at(31)) == "2902468778263996723996");
  CHECK(to_decimal(t.a.at(32)) == "23728550137026791789338");
}

TEST_CASE("recurrence equals the oracle cell by cell") {
  const auto& t = tables30();
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    const auto b = oracle::oracle_b(n);
    const auto c = oracle::oracle_c(n);
    const auto v = oracle::oracle_v(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(t.v.at(n, i) == v.at(i));
      for (int j = 1; j <= n; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(t.b.at(n, i, j) == b.at(i, j));
        CHECK(t.c.at(n, i, j) == c.at(i, j));
      }
    }
  }
}

TEST_CASE("boundary values") {
  const auto& t = tables30();
  for (int n = 2; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(t.v.at(n, n) == 1);
    CHECK(t.v.at(n, 1) == t.v.row_total(n - 1));
    CHECK(t.b.at(n, n, 1) == 1);
    CHECK(t.b.at(n, 1, n) == 0);
    if (n >= 3) CHECK(t.c.at(n, n, 2) == 1);
    if (n >= 4) CHECK(t.c.at(n, 2, n - 1) == pow(BigInt(2), static_cast<unsigned long>(n - 4)));
  }
  CHECK(t.v.at(4, 2) == 5);
  CHECK(t.v.at(4, 3) == 3);
}

TEST_CASE("structural zeros and tail sums") {
  const auto& t = tables30();
  CHECK(structural_violations(t).empty());
  for (int n = 1; n <= 12; ++n)
    for (int j = 1; j <= n; ++j) {
      BigInt s = 0;
      for (int i = j; i <= n; ++i) s += t.v.at(n, i);
      CHECK(t.v.tail_sum(n, j) == s);
    }
  CHECK(t.c.marginal(3, 3) == 0);  // zero extension: needs n > k
  CHECK(t.c.marginal(2, 2) == 0);
  CHECK(t.c.marginal(4, 2) == 2);
}

TEST_CASE("a_n reassembles from the b and c tables") {
  const auto& t = tables30();
  for (int n = 1; n <= 30; ++n) CHECK(assemble_a(n, t.b, t.c) == t.a.at(n));
}

TEST_CASE("mismatched sizes are rejected") {
  const auto v = compute_v(4);
  CHECK_THROWS_AS(compute_c(6, v), std::invalid_argument);
  const auto c = compute_c(4, v);
  CHECK_THROWS_AS(compute_b(5, c), std::invalid_argument);
}

TEST_CASE("overriding a structural zero is reported") {
  auto t = compute_all(8);
  t.b.override_cell(6, 2, 4, 7);
  const auto v = structural_violations(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().find("b(6,2,4)") != std::string::npos);
}

TEST_CASE("conjecture evidence") {
  const auto r = check_conjectures(tables30().a);
  CHECK(r.steps.size() == 29);
  CHECK(r.inequality_holds_everywhere);
  CHECK(r.ratios_strictly_increasing);
  CHECK(r.steps.front().ratio == 2);

  ASequence two;
  two.values = {1, 2};
  const auto s = check_conjectures(two);
  REQUIRE(s.steps.size() == 1);
  CHECK(s.steps[0].inequality_holds);  // 1^2 < 2^1

  ASequence flat;
  flat.values = {3, 3, 3};
  const auto f = check_conjectures(flat);
  CHECK_FALSE(f.inequality_holds_everywhere);
  CHECK_FALSE(f.ratios_strictly_increasing);
}
