#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace circperm {

// A linear arrangement of 1..n, n >= 1.
class Permutation {
 public:
  using value_type = int;

  // Throws std::invalid_argument unless `entries` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t pos) const { return entries_[pos]; }
  std::span<const int> entries() const { return entries_; }

  // Concatenated letters, e.g. "41523". Letters above 9 are comma separated.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// A pattern permutation together with its vincula. A vinculum t (1-based,
// 1 <= t <= m-1) forces pattern positions t and t+1 onto adjacent host
// positions.
class VincularPattern {
 public:
  VincularPattern(std::vector<int> entries, std::vector<int> vincula);

  std::size_t size() const { return entries_.size(); }
  std::span<const int> entries() const { return entries_; }
  std::span<const int> vincula() const { return vincula_; }

  // True when 0-based pattern positions `pos` and `pos + 1` must be adjacent.
  bool joined_to_next(std::size_t pos) const { return joined_[pos]; }

  // Overline-free rendering: adjacent runs are printed together and
  // separated by '-', so the pattern with letters 2,3 overlined is "23-4-1".
  std::string to_string() const;

  friend bool operator==(const VincularPattern& a, const VincularPattern& b) {
    return a.entries_ == b.entries_ && a.vincula_ == b.vincula_;
  }

 private:
  std::vector<int> entries_;
  std::vector<int> vincula_;  // sorted, unique
  std::vector<bool> joined_;
};

// Strictly increasing 1-based host positions i_1 < ... < i_m.
struct Occurrence {
  std::vector<std::size_t> indices;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// Every occurrence of `pat` in `host`, in lexicographic order of indices.
std::vector<Occurrence> occurrences(const Permutation& host,
                                    const VincularPattern& pat);

// Same search as occurrences() but stops at the first hit.
bool contains(std::span<const int> host, const VincularPattern& pat);
bool contains(const Permutation& host, const VincularPattern& pat);

bool avoids_linear(const Permutation& host,
                   std::span<const VincularPattern> pats);

// The n cyclic shifts of p, starting with p; each one moves the last letter of
// the previous to the front.
std::vector<Permutation> rotations(const Permutation& p);

bool avoids_circular(const Permutation& p, const VincularPattern& pat);

// Replaces the i-th smallest entry by i. Throws std::invalid_argument on
// duplicate or empty input.
Permutation standardize(std::span<const int> word);

namespace patterns {

// 2341 with 2,3 adjacent: the circular pattern this library enumerates.
VincularPattern circular_target();

// 123 with 1,2 adjacent.
VincularPattern adjacent_12_3();

// 4123 with 2,3 adjacent.
VincularPattern p41_adjacent_23();

// 123 with 2,3 adjacent.
VincularPattern p1_adjacent_23();

// {12-3, 4-1-23}: the linear class obtained after deleting 1 from a circular
// avoider of circular_target().
std::vector<VincularPattern> linear_pair();

// {12-3, 1-23}: the class counted by the auxiliary last-letter array.
std::vector<VincularPattern> auxiliary_pair();

}  // namespace patterns

}  // namespace circperm
