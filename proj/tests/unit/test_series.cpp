#include <random>

#include "circperm/series.hpp"
#include "doctest.h"

using namespace circperm;
using S = TruncatedSeries;

namespace {

S poly(std::initializer_list<long> cs, int order) {
  std::vector<BigRational> v;
  for (long c : cs) v.emplace_back(c);
  return S::polynomial(v, order);
}

std::vector<BigRational> q(std::initializer_list<long> cs) {
  std::vector<BigRational> v;
  for (long c : cs) v.emplace_back(c);
  return v;
}

S random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<BigRational> cs;
  for (int k = 0; k <= order; ++k) cs.emplace_back(d(rng), 1 + (d(rng) + 9) % 4);
  if (unit && cs[0] == 0) cs[0] = 1;
  return S::from_coefficients(cs);
}

}  // namespace

TEST_CASE("construction and access") {
  const auto s = S::monomial(3, 2, 4);
  CHECK(s.order() == 4);
  CHECK(s[2] == 3);
  CHECK(s.valuation() == 2);
  CHECK_THROWS_AS(s[5], SeriesError);
  CHECK_THROWS_AS(s[-1], SeriesError);
  CHECK(S().order() == -1);
  CHECK(S::zero(3).is_zero());
  CHECK(S::zero(3).valuation() == 4);
  CHECK(S::from_coefficients({BigRational(2, 4)})[0] == BigRational(1, 2));
  CHECK(poly({1, -1, 3}, 1).order() == 1);
}

TEST_CASE("geometric series by division") {
  const auto g = S::constant(1, 5) / poly({1, -1}, 5);
  CHECK(g.order() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(g[k] == 1);
  CHECK(g == geometric(1, 5));
  CHECK(geometric(2, 3).to_string() == "1, 2, 4, 8");
}

TEST_CASE("cancelling a common power of x") {
  const auto r = S::monomial(1, 2, 4) / S::monomial(1, 1, 4);
  CHECK(r.order() == 3);
  CHECK(r.to_string() == "0, 1, 0, 0");
  CHECK_THROWS_AS(S::monomial(1, 1, 4) / S::monomial(1, 2, 4), SeriesError);
  CHECK_THROWS_AS(S::constant(1, 4) / S::zero(4), SeriesError);
}

TEST_CASE("precision bookkeeping") {
  const auto a = poly({1, 2}, 6);
  const auto b = S::monomial(1, 2, 3);  // x^2 + O(x^4)
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);  // min(6 + 2, 3 + 0)
  CHECK((b * b).order() == 5);  // x^4 + O(x^6)
  CHECK(a.shifted(2).order() == 8);
  CHECK_THROWS_AS(a.truncated(7), SeriesError);
  CHECK(a.truncated(2).to_string() == "1, 2, 0");
}

TEST_CASE("expand_rational") {
  CHECK(expand_rational(q({0, 1}), q({1, -1}), 4).to_string() == "0, 1, 1, 1, 1");
  CHECK(expand_rational(q({1}), q({1, -2}), 3).to_string() == "1, 2, 4, 8");
  CHECK(expand_rational(q({1, -1}), q({1, -3}), 3).to_string() == "1, 2, 6, 18");
  // x^2 / (x - x^2) = 1/(1-x) * x, known to the full requested order
  CHECK(expand_rational(q({0, 0, 1}), q({0, 1, -1}), 3).to_string() == "0, 1, 1, 1");
  CHECK_THROWS_AS(expand_rational(q({1}), q({0, 1}), 3), SeriesError);
  CHECK_THROWS_AS(expand_rational(q({1}), q({0, 0}), 3), SeriesError);
}

TEST_CASE("series_arith dispatch") {
  const auto a = poly({1, 1}, 3);
  const auto b = poly({1, -1}, 3);
  CHECK(series_arith(a, b, SeriesOp::Add) == a + b);
  CHECK(series_arith(a, b, SeriesOp::Sub) == a - b);
  CHECK(series_arith(a, b, SeriesOp::Mul).to_string() == "1, 0, -1, 0");
  CHECK(series_arith(a, b, SeriesOp::Div).to_string() == "1, 2, 2, 2");
}

TEST_CASE("rationals print in lowest terms") {
  const auto h = S::constant(1, 2) / poly({2, 1}, 2);
  CHECK(h.to_string() == "1/2, -1/4, 1/8");
}

TEST_CASE("ring identities on random series") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int N = 8;
    const auto a = random_series(rng, N, false);
    const auto b = random_series(rng, N, true);
    const auto c = random_series(rng, N, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
    // division by x^2 * b loses two orders and keeps the rest
    const auto xb = b.shifted(2);
    const auto r = (a.shifted(2) * xb) / xb;
    CHECK(r.order() >= N);
    CHECK(r.truncated(N) == a.shifted(2).truncated(N));
  }
}
