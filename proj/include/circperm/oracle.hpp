#pragma once

// Brute-force ground truth. Everything here is computed by enumerating
// permutations and testing pattern containment directly; nothing is memoized
// or pruned beyond what the occurrence search itself does.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circperm/numeric.hpp"
#include "circperm/permutation.hpp"
#include "circperm/tables.hpp"

namespace circperm::oracle {

// Number of circular permutations of [n] avoiding `pat`, one representative
// per rotation class (the one starting with 1).
BigInt count_circular_avoiders(int n, const VincularPattern& pat);

// Number of linear permutations of [n] avoiding every pattern in `pats`.
BigInt count_linear_avoiders(int n, std::span<const VincularPattern> pats);

// |L_n|: linear permutations of [n] avoiding both 12-3 and 4-1-23.
BigInt count_linear_class(int n);

// Members of L_n other than (n-1)(n-2)...1n in which 1 lies right of n,
// grouped by their last two letters. n >= 2.
PairCounts oracle_b(int n);

// Members of L_n other than (n-1)(n-2)...1n in which 1 lies left of n and 2
// lies right of n, grouped by their last two letters. n >= 3 (empty for n=2).
PairCounts oracle_c(int n);

// Permutations of [n] avoiding both 12-3 and 1-23, grouped by last letter.
RowCounts oracle_v(int n);

struct ReductionResult {
  bool holds = true;
  // First circular permutation (1 in front) where the two sides disagree.
  std::optional<Permutation> counterexample;
};

// Checks, for every circular permutation of [n] written with 1 first, that
// circular avoidance of 23-4-1 agrees with linear avoidance of {12-3, 4-1-23}
// by the word left after deleting the 1 and standardizing.
ReductionResult reduction_check(int n);

// Which letters the two statistics of the bivariate refinement read. Both
// look at the two letters directly before 1 going around the circle,
// (penultimate, last) of the representative starting with 1.
enum class WeightConvention {
  LetterMinusTwo,  // exponents letter - 2
  LetterMinusOne,  // exponents letter - 1
};

// Sum over circular avoiders of 23-4-1 of v^i u^j, i and j read from the two
// letters before 1 under `conv`. For n <= 2 the missing penultimate letter
// contributes exponent 0.
BigRational weighted_circular_sum(int n, const BigRational& v,
                                  const BigRational& u, WeightConvention conv);

struct OracleReport {
  int n = 0;
  BigInt linear_class;      // a_n = |L_n|
  BigInt circular_class;    // |A_n|
  PairCounts b;             // empty when n < 2
  PairCounts c;             // empty when n < 3
  RowCounts v;

  // Named quantities: "a_n", "|A_n|", "b(n,i,j)", "c(n,i,j)", "v(n,j)",
  // "b(n,j)", "c(n,j)". Zero cells are included.
  std::map<std::string, BigInt> counts() const;
};

OracleReport report(int n);

}  // namespace circperm::oracle
