#pragma once

// Exact dynamic programming for the refinement arrays of L_n, the class of
// linear permutations avoiding {12-3, 4-1-23}:
//
//   v(n,j)    permutations of [n] avoiding {12-3, 1-23} that end in j
//   c(n,i,j)  members of L_n (minus (n-1)...1n) with 1 left of n, 2 right of
//             n, ending in i,j
//   b(n,i,j)  members of L_n (minus (n-1)...1n) with 1 right of n, ending in
//             i,j
//   a_n       |L_n|, which is also the number of circular avoiders of 23-4-1
//             of length n+1
//
// Tables are filled in increasing n; every right-hand side reads only cells
// of strictly smaller n or already completed cells of the same n.

#include <string>
#include <vector>

#include "circperm/numeric.hpp"
#include "circperm/tables.hpp"

namespace circperm::recurrence {

// Pascal's triangle up to row `max_row`; binom(a, b) is 0 when b < 0, b > a
// or a < 0.
class BinomialTable {
 public:
  explicit BinomialTable(int max_row);
  const BigInt& operator()(int a, int b) const;

 private:
  int max_row_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

class VTable {
 public:
  VTable() = default;
  explicit VTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  // Zero outside 1 <= j <= n <= max_n.
  BigInt at(int n, int j) const;
  // Sum of v(n,i) over i >= j.
  BigInt tail_sum(int n, int j) const;
  BigInt row_total(int n) const { return tail_sum(n, 1); }
  const RowCounts& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

  // Overwrites one cell. Exists so verification can be shown to catch a
  // corrupted table; the tail sums are recomputed for that row.
  void override_cell(int n, int j, const BigInt& value);

 private:
  friend VTable compute_v(int max_n);
  void rebuild_tail(int n);

  std::vector<RowCounts> rows_;
  std::vector<std::vector<BigInt>> tails_;
};

// Shared layout of the c and b tables: one PairCounts per n plus the column
// marginals m(n,j) = sum over i != j of t(n,i,j).
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(int max_n);

  int max_n() const { return static_cast<int>(layers_.size()) - 1; }
  BigInt at(int n, int i, int j) const;
  const PairCounts& layer(int n) const { return layers_.at(static_cast<std::size_t>(n)); }

  // Column marginal; zero whenever n is out of the table.
  BigInt marginal(int n, int j) const;
  BigInt total(int n) const;

  void override_cell(int n, int i, int j, const BigInt& value);

 protected:
  void set(int n, int i, int j, const BigInt& value);
  void close_layer(int n);  // recompute marginals of layer n

  std::vector<PairCounts> layers_;
  std::vector<std::vector<BigInt>> marginals_;
  std::vector<BigInt> totals_;
};

class CTable : public PairTable {
 public:
  using PairTable::PairTable;
  // c(n,k) with the zero extension: 0 unless n > k >= 2.
  BigInt marginal(int n, int k) const;

 private:
  friend CTable compute_c(int max_n, const VTable& v);
};

class BTable : public PairTable {
 public:
  using PairTable::PairTable;

 private:
  friend BTable compute_b(int max_n, const CTable& c);
};

struct ASequence {
  std::vector<BigInt> values;  // values[n-1] = a_n

  int size() const { return static_cast<int>(values.size()); }
  const BigInt& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

VTable compute_v(int max_n);

// Throws std::invalid_argument if `v` does not reach max_n.
CTable compute_c(int max_n, const VTable& v);

// Throws std::invalid_argument if `c` does not reach max_n.
BTable compute_b(int max_n, const CTable& c);

ASequence compute_a(int max_n, const BTable& b, const CTable& c);

// Everything at once, in dependency order.
struct Tables {
  VTable v;
  CTable c;
  BTable b;
  ASequence a;
};
Tables compute_all(int max_n);

// Evaluates a_n from the tables, for cross-checking a possibly modified set of
// tables without rebuilding them.
BigInt assemble_a(int n, const BTable& b, const CTable& c);

// Structural zeros, delta boundaries and marginal consistency of the three
// tables. Returns one human-readable line per violated cell; empty when all
// hold.
std::vector<std::string> structural_violations(const Tables& t);

struct ConjectureReport {
  struct Step {
    int n = 0;
    bool inequality_holds = false;  // a_n^(n+1) < a_(n+1)^n
    BigRational ratio;              // a_(n+1) / a_n
  };
  std::vector<Step> steps;  // n = 1 .. size-1
  bool inequality_holds_everywhere = true;
  bool ratios_strictly_increasing = true;
};

ConjectureReport check_conjectures(const ASequence& a);

}  // namespace circperm::recurrence
