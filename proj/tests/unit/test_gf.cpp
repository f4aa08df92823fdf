#include "circperm/cli/checks.hpp"
#include "circperm/gf.hpp"
#include "circperm/recurrence.hpp"
#include "doctest.h"

using namespace circperm;
using namespace circperm::gf;
using S = TruncatedSeries;

namespace {

const recurrence::Tables& dp() {
  static const auto t = recurrence::compute_all(16);
  return t;
}

BigRational weighted_b(int n, const BigRational& u) {
  BigRational s = 0;
  for (int j = 1; j <= n && n >= 2; ++j) s += BigRational(dp().b.marginal(n, j)) * pow(u, j - 1);
  return s;
}

BigRational weighted_c(int n, const BigRational& u) {
  BigRational s = 0;
  for (int j = 2; j <= n; ++j) s += BigRational(dp().c.marginal(n, j)) * pow(u, j - 2);
  return s;
}

}  // namespace

TEST_CASE("V(x,1) counts the auxiliary class") {
  const auto V1 = V_series(BigRational(1), 14);
  CHECK(V1[0] == 0);
  CHECK(V1[1] == 1);
  for (int n = 1; n <= 14; ++n) CHECK(V1[n] == BigRational(dp().v.row_total(n)));
}

TEST_CASE("V(x,0) = x + x V(x,1)") {
  const auto V0 = V0_series(20);
  const auto V1 = V_series(BigRational(1), 20);
  CHECK(V0 == (S::monomial(1, 1, 20) + V1.shifted(1)).truncated(20));
}

TEST_CASE("V at a scalar weights the last letter") {
  const BigRational p(3);
  const auto V = V_series(p, 10);
  for (int n = 1; n <= 10; ++n) {
    BigRational s = 0;
    for (int j = 1; j <= n; ++j) s += BigRational(dp().v.at(n, j)) * pow(p, j - 1);
    CHECK(V[n] == s);
  }
}

TEST_CASE("C(x,1,1)") {
  const auto C = C11_series(14);
  CHECK(C[0] == 0);
  CHECK(C[1] == 0);
  CHECK(C[2] == 0);
  CHECK(C[3] == 1);
  for (int n = 3; n <= 14; ++n) CHECK(C[n] == BigRational(dp().c.total(n)));
}

TEST_CASE("C(x,1,u) at scalars") {
  CHECK(C1u_series(BigRational(1), 12) == C11_series(12));
  for (const BigRational& u : {BigRational(2), BigRational(-1, 3)}) {
    const auto C = C1u_series(u, 12);
    for (int n = 0; n <= 12; ++n) CHECK(C[n] == weighted_c(n, u));
  }
  // only the last-letter-2 members survive at u = 0
  const auto C0 = C1u_series(BigRational(0), 12);
  for (int n = 3; n <= 12; ++n) CHECK(C0[n] == BigRational(dp().c.marginal(n, 2)));
}

TEST_CASE("B(x,1,1)") {
  const auto B = B11_series(14);
  CHECK(B[0] == 0);
  CHECK(B[1] == 0);
  CHECK(B[2] == 1);
  CHECK(B[3] == 3);
  for (int n = 2; n <= 14; ++n) CHECK(B[n] == BigRational(dp().b.total(n)));
}

TEST_CASE("B(x,1,u) at scalars") {
  CHECK(B1u_series(BigRational(1), 12) == B11_series(12));
  for (const BigRational& u : {BigRational(2), BigRational(1, 2)}) {
    const auto B = B1u_series(u, 10);
    for (int n = 0; n <= 10; ++n) CHECK(B[n] == weighted_b(n, u));
  }
}

TEST_CASE("A(x) reproduces the published table") {
  const auto A = A_series(31);
  const auto pub = cli::published_a();
  CHECK(A[0] == 0);
  CHECK(A[1] == 1);
  for (int n = 1; n <= 30; ++n) CHECK(to_decimal(A[n + 1]) == pub[n - 1]);
}

TEST_CASE("A(x,v,u)") {
  CHECK(A_vu_series(1, 1, 12) == A_series(12));
  // frozen weighted sums over circular avoiders, exponents letter - 2
  const long want[] = {0, 1, 1, 5, 30, 209, 1629, 14078, 135217};
  const auto A23 = A_vu_series(2, 3, 8);
  for (int n = 0; n <= 8; ++n) CHECK(A23[n] == want[n]);
  for (const auto& [v, u] : {std::pair{BigRational(-1, 2), BigRational(7, 3)},
                             std::pair{BigRational(5), BigRational(1)},
                             std::pair{BigRational(0), BigRational(0)}})
    CHECK(A_vu_series(v, u, 4)[1] == 1);
}

TEST_CASE("A(x,v,1) matches direct evaluation near u = 1") {
  // interpolated u = 1 against the lifted substitution u = 1 + x^K
  const int N = 8;
  const auto interp = A_vu_series(BigRational(2), BigRational(1), N);
  bool reached = false;
  for (int W = 3 * N; W <= 8 * N && !reached; W += N) {
    Evaluator ev(W);
    const auto u = ev.scalar(1) + S::monomial(1, N, W);
    const auto direct = ev.Avu(ev.scalar(2), u);
    if (direct.order() < N) continue;
    reached = true;
    CHECK(direct.truncated(N) == interp);
  }
  CHECK(reached);
}

TEST_CASE("series arguments") {
  const auto p = geometric(3, 12);  // 1/(1-3x)
  const auto V = V_series(p, 10);
  CHECK(V.order() == 10);
  CHECK(V == V_series(geometric(3, 20), 10));
  CHECK_THROWS_AS(V_series(geometric(3, 5), 10), SeriesError);
  const auto u = geometric(2, 12);
  CHECK(C1u_series(u, 8).order() == 8);
  CHECK(B1u_series(u, 8).order() == 8);
}

TEST_CASE("degenerate specializations are reported") {
  // 1/(1-x) zeroes every kernel 1 - p + p x
  const auto g = geometric(1, 14);
  CHECK_THROWS_AS(V_series(g, 10), DomainError);
  CHECK_THROWS_AS(C1u_series(g, 10), DomainError);
  CHECK_THROWS_AS(B1u_series(g, 10), DomainError);
  // 1/(1+x) zeroes the factor 1 - p - p x
  CHECK_THROWS_AS(V_series(geometric(-1, 14), 10), DomainError);
  Evaluator ev(10);
  CHECK_THROWS_AS(ev.C1u(geometric(1, 10)), DomainError);
}

TEST_CASE("truncation stability") {
  const auto a = compute_bundle(12);
  const auto b = compute_bundle(17);
  CHECK(b.A.truncated(12) == a.A);
  CHECK(b.B11.truncated(12) == a.B11);
  CHECK(b.C11.truncated(12) == a.C11);
  CHECK(b.V1.truncated(12) == a.V1);
  CHECK(b.V0.truncated(12) == a.V0);
  CHECK(a.A == A_series(12));
  CHECK(a.order == 12);
}
