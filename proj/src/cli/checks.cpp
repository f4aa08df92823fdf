#include "circperm/cli/checks.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "circperm/oracle.hpp"

namespace circperm::cli {

namespace {

constexpr std::array<std::string_view, 30> kPublished = {
    "1",
    "2",
    "5",
    "15",
    "50",
    "180",
    "690",
    "2792",
    "11857",
    "52633",
    "243455",
    "1170525",
    "5837934",
    "30151474",
    "161021581",
    "888001485",
    "5051014786",
    "29600662480",
    "178541105770",
    "1107321666920",
    "7055339825171",
    "46142654894331",
    "309513540865544",
    "2127744119042216",
    "14979904453920111",
    "107932371558460341",
    "795363217306369817",
    "5990768203554158167",
    "46094392105916344968",
    "362092868720288824992",
};

std::string mismatch(const std::string& what, const std::string& a_name, const BigRational& a,
                     const std::string& b_name, const BigRational& b) {
  return what + ": " + a_name + " " + to_decimal(a) + ", " + b_name + " " + to_decimal(b);
}

std::string cell(char t, int n, int i, int j) {
  return std::string(1, t) + "(" + std::to_string(n) + "," + std::to_string(i) + "," +
         std::to_string(j) + ")";
}

std::string cell(char t, int n, int j) {
  return std::string(1, t) + "(" + std::to_string(n) + "," + std::to_string(j) + ")";
}

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

}  // namespace

std::span<const std::string_view> published_a() { return kPublished; }

Fault parse_fault(std::string_view text) {
  Fault f;
  std::vector<int> parts;
  const std::string s(text);
  if (s.size() < 3 || (s[0] != 'b' && s[0] != 'c' && s[0] != 'v') || s[1] != ':')
    throw std::invalid_argument("fault must look like b:n:i:j, c:n:i:j or v:n:j");
  f.table = s[0];
  std::size_t pos = 2;
  while (pos <= s.size()) {
    const auto next = std::min(s.find(':', pos), s.size());
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(s.substr(pos, next - pos), &used));
      if (used != next - pos) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw std::invalid_argument("fault \"" + s + "\": indices must be integers");
    }
    pos = next + 1;
  }
  const std::size_t want = f.table == 'v' ? 2 : 3;
  if (parts.size() != want)
    throw std::invalid_argument("fault \"" + s + "\": wrong number of indices");
  f.n = parts[0];
  if (f.table == 'v') {
    f.j = parts[1];
  } else {
    f.i = parts[1];
    f.j = parts[2];
  }
  return f;
}

void apply_fault(recurrence::Tables& t, const Fault& f) {
  switch (f.table) {
    case 'b': t.b.override_cell(f.n, f.i, f.j, t.b.at(f.n, f.i, f.j) + 1); break;
    case 'c': t.c.override_cell(f.n, f.i, f.j, t.c.at(f.n, f.i, f.j) + 1); break;
    case 'v': t.v.override_cell(f.n, f.j, t.v.at(f.n, f.j) + 1); break;
    default: throw std::invalid_argument("unknown fault table");
  }
}

CheckResult check_published_dp(const recurrence::ASequence& a) {
  const std::string name = "recurrence a_n equals the published table";
  const int upto = std::min<int>(a.size(), kPublished.size());
  for (int n = 1; n <= upto; ++n) {
    const BigInt want(std::string(kPublished[n - 1]));
    if (a.at(n) != want)
      return fail(name, mismatch("a_" + std::to_string(n), "dp", BigRational(a.at(n)),
                                 "published", BigRational(want)));
  }
  return pass(name, "n = 1.." + std::to_string(upto));
}

CheckResult check_published_series(const TruncatedSeries& A) {
  const std::string name = "A(x) coefficients equal the published table";
  if (A.order() < 1) return fail(name, "series too short");
  if (A[0] != 0 || A[1] != 1)
    return fail(name, "x^0, x^1 should be 0, 1; got " + to_decimal(A[0]) + ", " +
                          to_decimal(A[1]));
  const int upto = std::min<int>(A.order() - 1, kPublished.size());
  for (int n = 1; n <= upto; ++n) {
    const BigRational want(BigInt(std::string(kPublished[n - 1])));
    if (A[n + 1] != want)
      return fail(name, mismatch("x^" + std::to_string(n + 1), "series", A[n + 1],
                                 "published a_" + std::to_string(n), want));
  }
  return pass(name, "a_1..a_" + std::to_string(upto));
}

CheckResult check_oracle_vs_dp(const recurrence::Tables& t, int max_n) {
  const std::string name = "oracle equals recurrence cell by cell";
  if (t.b.max_n() < max_n) return fail(name, "recurrence tables shorter than n");
  for (int n = 1; n <= max_n; ++n) {
    const auto r = oracle::report(n);
    const std::string at_n = " (n=" + std::to_string(n) + ")";
    if (r.linear_class != t.a.at(n))
      return fail(name, mismatch("|L_" + std::to_string(n) + "|", "oracle",
                                 BigRational(r.linear_class), "dp a_n", BigRational(t.a.at(n))));
    const BigInt circ_dp = n == 1 ? BigInt(1) : t.a.at(n - 1);
    if (r.circular_class != circ_dp)
      return fail(name, mismatch("|A_" + std::to_string(n) + "|", "oracle",
                                 BigRational(r.circular_class), "dp a_(n-1)",
                                 BigRational(circ_dp)));
    for (int j = 1; j <= n; ++j)
      if (r.v.at(j) != t.v.at(n, j))
        return fail(name, mismatch(cell('v', n, j), "oracle", BigRational(r.v.at(j)), "dp",
                                   BigRational(t.v.at(n, j))));
    if (n < 2) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (r.b.at(i, j) != t.b.at(n, i, j))
          return fail(name, mismatch(cell('b', n, i, j), "oracle", BigRational(r.b.at(i, j)),
                                     "dp", BigRational(t.b.at(n, i, j))));
        if (r.c.at(i, j) != t.c.at(n, i, j))
          return fail(name, mismatch(cell('c', n, i, j), "oracle", BigRational(r.c.at(i, j)),
                                     "dp", BigRational(t.c.at(n, i, j))));
      }
  }
  return pass(name, "n = 1.." + std::to_string(max_n));
}

CheckResult check_reduction(int max_n) {
  const std::string name = "circular avoidance reduces to the linear class";
  for (int n = 2; n <= max_n; ++n) {
    const auto r = oracle::reduction_check(n);
    if (!r.holds)
      return fail(name, "n=" + std::to_string(n) + ", counterexample " +
                            (r.counterexample ? r.counterexample->to_string() : "?"));
  }
  return pass(name, "n = 2.." + std::to_string(max_n));
}

CheckResult check_structure(const recurrence::Tables& t) {
  const std::string name = "recurrence tables respect structural zeros";
  const auto v = recurrence::structural_violations(t);
  if (!v.empty()) return fail(name, v.front());
  return pass(name);
}

CheckResult check_series_vs_dp(const gf::GfBundle& g, const recurrence::Tables& t) {
  const std::string name = "series coefficients equal recurrence totals";
  const int upto = std::min(g.order, t.b.max_n());
  for (int n = 1; n <= upto; ++n) {
    const BigRational b = n >= 2 ? BigRational(t.b.total(n)) : BigRational(0);
    const BigRational c = n >= 3 ? BigRational(t.c.total(n)) : BigRational(0);
    const BigRational v(t.v.row_total(n));
    const BigRational a = n >= 2 ? BigRational(t.a.at(n - 1)) : BigRational(1);
    if (g.B11[n] != b) return fail(name, mismatch("B(x,1,1) x^" + std::to_string(n), "series", g.B11[n], "dp", b));
    if (g.C11[n] != c) return fail(name, mismatch("C(x,1,1) x^" + std::to_string(n), "series", g.C11[n], "dp", c));
    if (g.V1[n] != v) return fail(name, mismatch("V(x,1) x^" + std::to_string(n), "series", g.V1[n], "dp", v));
    if (g.A[n] != a) return fail(name, mismatch("A(x) x^" + std::to_string(n), "series", g.A[n], "dp", a));
  }
  return pass(name, "x^1..x^" + std::to_string(upto));
}

namespace {

CheckResult compare_series(const std::string& name, const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
  const int upto = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= upto; ++k)
    if (lhs[k] != rhs[k])
      return fail(name, mismatch("x^" + std::to_string(k), "left", lhs[k], "right", rhs[k]));
  return pass(name, "through x^" + std::to_string(upto));
}

}  // namespace

std::vector<CheckResult> check_gf_identities(const gf::GfBundle& g) {
  const int N = g.order;
  std::vector<CheckResult> out;
  const auto x_plus = TruncatedSeries::monomial(1, 1, N) + g.V1.shifted(1);
  out.push_back(compare_series("V(x,0) = x + x V(x,1)", g.V0, x_plus.truncated(N)));
  out.push_back(compare_series("C(x,1,u) at u = 1 equals C(x,1,1)", gf::C1u_series(1, N), g.C11));
  out.push_back(compare_series("B(x,1,u) at u = 1 equals B(x,1,1)", gf::B1u_series(1, N), g.B11));
  out.push_back(compare_series("A(x,v,u) at v = u = 1 equals A(x)", gf::A_vu_series(1, 1, N), g.A));
  return out;
}

std::vector<CheckResult> check_weighted_marginals(const recurrence::Tables& t, int max_n,
                                                  std::span<const int> us) {
  std::vector<CheckResult> out;
  for (int u : us) {
    const BigRational uq(u);
    const auto B = gf::B1u_series(uq, max_n);
    const auto C = gf::C1u_series(uq, max_n);
    const std::string bn = "B(x,1," + std::to_string(u) + ") equals weighted b(n,j)";
    const std::string cn = "C(x,1," + std::to_string(u) + ") equals weighted c(n,j)";
    std::optional<CheckResult> bad_b, bad_c;
    for (int n = 0; n <= max_n && !(bad_b && bad_c); ++n) {
      BigRational wb = 0, wc = 0;
      for (int j = 1; j <= n && n >= 2; ++j) wb += BigRational(t.b.marginal(n, j)) * pow(uq, j - 1);
      for (int j = 2; j <= n; ++j) wc += BigRational(t.c.marginal(n, j)) * pow(uq, j - 2);
      if (!bad_b && B[n] != wb)
        bad_b = fail(bn, mismatch("x^" + std::to_string(n), "series", B[n], "dp", wb));
      if (!bad_c && C[n] != wc)
        bad_c = fail(cn, mismatch("x^" + std::to_string(n), "series", C[n], "dp", wc));
    }
    const std::string range = "n <= " + std::to_string(max_n);
    out.push_back(bad_b ? *bad_b : pass(bn, range));
    out.push_back(bad_c ? *bad_c : pass(cn, range));
  }
  return out;
}

CheckResult check_integrality(const gf::GfBundle& g) {
  const std::string name = "A, B(x,1,1), C(x,1,1), V(x,1) have non-negative integer coefficients";
  const std::pair<const char*, const TruncatedSeries*> all[] = {
      {"A", &g.A}, {"B(x,1,1)", &g.B11}, {"C(x,1,1)", &g.C11}, {"V(x,1)", &g.V1}};
  for (const auto& [label, s] : all)
    for (int k = 0; k <= s->order(); ++k)
      if (!is_integer((*s)[k]) || sgn((*s)[k]) < 0)
        return fail(name, std::string(label) + " x^" + std::to_string(k) + " = " +
                              to_decimal((*s)[k]));
  return pass(name, "through x^" + std::to_string(g.order));
}

CheckResult check_truncation_stability(const gf::GfBundle& g) {
  const std::string name = "raising the order by 5 keeps the lower coefficients";
  const auto h = gf::compute_bundle(g.order + 5);
  const std::pair<const char*, std::pair<const TruncatedSeries*, const TruncatedSeries*>> all[] = {
      {"A", {&g.A, &h.A}},
      {"B(x,1,1)", {&g.B11, &h.B11}},
      {"C(x,1,1)", {&g.C11, &h.C11}},
      {"V(x,1)", {&g.V1, &h.V1}},
      {"V(x,0)", {&g.V0, &h.V0}}};
  for (const auto& [label, pair] : all)
    if (!(pair.second->truncated(g.order) == *pair.first))
      return fail(name, std::string(label) + " changed below x^" + std::to_string(g.order + 1));
  return pass(name, "order " + std::to_string(g.order) + " vs " + std::to_string(g.order + 5));
}

CheckResult check_conjecture(const recurrence::ASequence& a) {
  const std::string name = "a_n^(n+1) < a_(n+1)^n (checked, not proven)";
  const auto r = recurrence::check_conjectures(a);
  for (const auto& s : r.steps)
    if (!s.inequality_holds) return fail(name, "fails at n=" + std::to_string(s.n));
  return pass(name, "n = 1.." + std::to_string(a.size() - 1));
}

CheckResult check_bivariate(int max_n) {
  const std::string name = "A(x,2,3) equals the weighted oracle sums";
  const auto A = gf::A_vu_series(2, 3, max_n);
  for (int n = 3; n <= max_n; ++n) {
    const auto want =
        oracle::weighted_circular_sum(n, 2, 3, oracle::WeightConvention::LetterMinusTwo);
    if (A[n] != want)
      return fail(name, mismatch("x^" + std::to_string(n), "series", A[n], "oracle", want));
  }
  return pass(name, "n = 3.." + std::to_string(max_n));
}

std::vector<CheckResult> run_all(const CheckScale& s,
                                 const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  auto record = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };

  const int dp_n = std::max({s.table_n, s.order, s.oracle_max, s.weighted_max, 2});
  auto tables = recurrence::compute_all(dp_n);
  if (s.fault) apply_fault(tables, *s.fault);
  const auto bundle = gf::compute_bundle(s.order);

  record(check_published_dp(tables.a));
  record(check_published_series(bundle.A));
  record(check_structure(tables));
  record(check_oracle_vs_dp(tables, s.oracle_max));
  record(check_reduction(s.reduction_max));
  record(check_series_vs_dp(bundle, tables));
  for (auto& r : check_gf_identities(bundle)) record(std::move(r));
  const std::array<int, 3> us = {2, 3, 5};
  for (auto& r : check_weighted_marginals(tables, s.weighted_max, us)) record(std::move(r));
  record(check_integrality(bundle));
  record(check_truncation_stability(bundle));
  recurrence::ASequence a = tables.a;
  a.values.resize(static_cast<std::size_t>(s.table_n));
  record(check_conjecture(a));
  record(check_bivariate(s.bivariate_max));
  return out;
}

}  // namespace circperm::cli
