#pragma once

// Cross-engine checks. Each returns a named verdict with the first
// discrepancy in `detail` when it fails.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/gf.hpp"
#include "circperm/recurrence.hpp"

namespace circperm::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// a_1 .. a_30 as published.
std::span<const std::string_view> published_a();

// Deliberate corruption of one DP cell, for showing that verification
// notices. Text form "b:n:i:j", "c:n:i:j" or "v:n:j"; the cell is
// incremented by one.
struct Fault {
  char table = 'b';
  int n = 0, i = 0, j = 0;
};
Fault parse_fault(std::string_view text);
void apply_fault(recurrence::Tables& t, const Fault& f);

CheckResult check_published_dp(const recurrence::ASequence& a);
CheckResult check_published_series(const TruncatedSeries& A);
CheckResult check_oracle_vs_dp(const recurrence::Tables& t, int max_n);
CheckResult check_reduction(int max_n);
CheckResult check_structure(const recurrence::Tables& t);
CheckResult check_series_vs_dp(const gf::GfBundle& g, const recurrence::Tables& t);
std::vector<CheckResult> check_gf_identities(const gf::GfBundle& g);
std::vector<CheckResult> check_weighted_marginals(const recurrence::Tables& t, int max_n,
                                                  std::span<const int> us);
CheckResult check_integrality(const gf::GfBundle& g);
CheckResult check_truncation_stability(const gf::GfBundle& g);
CheckResult check_conjecture(const recurrence::ASequence& a);
CheckResult check_bivariate(int max_n);

struct CheckScale {
  int oracle_max = 9;      // oracle against DP cells
  int reduction_max = 8;
  int bivariate_max = 8;   // A(x,2,3) against weighted oracle sums
  int table_n = 30;        // DP length
  int order = gf::kDefaultOrder;
  int weighted_max = 12;
  std::optional<Fault> fault;
};

// Runs everything at the given scale, reporting each verdict as it lands.
std::vector<CheckResult> run_all(const CheckScale& scale,
                                 const std::function<void(const CheckResult&)>& on_result);

}  // namespace circperm::cli
