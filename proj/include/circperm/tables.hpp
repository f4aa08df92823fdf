#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "circperm/numeric.hpp"

namespace circperm {

// Counts indexed by a pair of letters (i, j), 1 <= i, j <= n, for one fixed n.
// Reads outside that square return zero.
class PairCounts {
 public:
  PairCounts() = default;
  explicit PairCounts(int n)
      : n_(n), cells_(static_cast<std::size_t>((n + 1) * (n + 1))) {}

  int n() const { return n_; }

  BigInt at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return 0;
    return cells_[index(i, j)];
  }

  BigInt& cell(int i, int j) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw std::out_of_range("pair index outside 1..n");
    return cells_[index(i, j)];
  }

  // Sum over the first letter i != j.
  BigInt column_sum(int j) const {
    BigInt s = 0;
    for (int i = 1; i <= n_; ++i)
      if (i != j) s += at(i, j);
    return s;
  }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& c : cells_) s += c;
    return s;
  }

  friend bool operator==(const PairCounts&, const PairCounts&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i * (n_ + 1) + j);
  }

  int n_ = 0;
  std::vector<BigInt> cells_;
};

// Counts indexed by a single letter j, 1 <= j <= n.
class RowCounts {
 public:
  RowCounts() = default;
  explicit RowCounts(int n) : n_(n), cells_(static_cast<std::size_t>(n + 1)) {}

  int n() const { return n_; }

  BigInt at(int j) const {
    if (j < 1 || j > n_) return 0;
    return cells_[static_cast<std::size_t>(j)];
  }

  BigInt& cell(int j) {
    if (j < 1 || j > n_) throw std::out_of_range("row index outside 1..n");
    return cells_[static_cast<std::size_t>(j)];
  }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& c : cells_) s += c;
    return s;
  }

  friend bool operator==(const RowCounts&, const RowCounts&) = default;

 private:
  int n_ = 0;
  std::vector<BigInt> cells_;
};

}  // namespace circperm
