#include <algorithm>
#include <numeric>
#include <random>

#include "circperm/permutation.hpp"
#include "doctest.h"

using namespace circperm;

namespace {

Permutation perm(std::initializer_list<int> xs) { return Permutation(std::vector<int>(xs)); }

std::vector<std::vector<std::size_t>> as_indices(const std::vector<Occurrence>& occ) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& o : occ) out.push_back(o.indices);
  return out;
}

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> xs(static_cast<std::size_t>(n));
  std::iota(xs.begin(), xs.end(), 1);
  std::shuffle(xs.begin(), xs.end(), rng);
  return Permutation(xs);
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_NOTHROW(perm({3, 1, 2}));
  CHECK_THROWS_AS(perm({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({2, 3}), std::invalid_argument);
  CHECK(Permutation::identity(4).to_string() == "1234");
  CHECK(perm({4, 1, 5, 2, 3}).size() == 5);
}

TEST_CASE("pattern validation and text") {
  CHECK(patterns::circular_target().to_string() == "23-4-1");
  CHECK(patterns::adjacent_12_3().to_string() == "12-3");
  CHECK(patterns::p41_adjacent_23().to_string() == "4-1-23");
  CHECK(patterns::p1_adjacent_23().to_string() == "1-23");
  CHECK_THROWS_AS(VincularPattern({1, 2, 3}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern({1, 2, 3}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern({1, 3}, {}), std::invalid_argument);
  CHECK(VincularPattern({2, 3, 1}, {2, 2}).vincula().size() == 1);
}

TEST_CASE("occurrences") {
  // 2-31 in 41523: only 4,5,2 with 5,2 adjacent
  const VincularPattern p231({2, 3, 1}, {2});
  CHECK(as_indices(occurrences(perm({4, 1, 5, 2, 3}), p231)) ==
        std::vector<std::vector<std::size_t>>{{1, 3, 4}});

  CHECK(as_indices(occurrences(Permutation::identity(4), patterns::adjacent_12_3())) ==
        std::vector<std::vector<std::size_t>>{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});

  CHECK(occurrences(perm({3, 2, 1}), patterns::adjacent_12_3()).empty());
  // a pattern longer than the host never occurs
  CHECK(occurrences(perm({1, 2}), patterns::adjacent_12_3()).empty());
}

TEST_CASE("classical patterns count subsequences") {
  const VincularPattern p12({1, 2}, {});
  for (int n = 1; n <= 7; ++n)
    CHECK(occurrences(Permutation::identity(n), p12).size() ==
          static_cast<std::size_t>(n * (n - 1) / 2));
  // fully joined pattern = consecutive factor
  const VincularPattern p123({1, 2, 3}, {1, 2});
  CHECK(occurrences(Permutation::identity(6), p123).size() == 4);
}

TEST_CASE("linear avoidance") {
  const std::vector<VincularPattern> only_41_23 = {patterns::p41_adjacent_23()};
  CHECK(avoids_linear(perm({3, 1, 4, 2}), only_41_23));
  CHECK_FALSE(avoids_linear(perm({4, 1, 2, 3}), only_41_23));
  const auto pair = patterns::linear_pair();
  CHECK(avoids_linear(perm({4, 5, 1, 3, 2}), pair));
  CHECK_FALSE(avoids_linear(perm({1, 2, 3}), pair));
}

TEST_CASE("rotations move the last letter to the front") {
  const auto r = rotations(perm({2, 3, 4, 1}));
  REQUIRE(r.size() == 4);
  CHECK(r[0] == perm({2, 3, 4, 1}));
  CHECK(r[1] == perm({1, 2, 3, 4}));
  CHECK(r[2] == perm({4, 1, 2, 3}));
  CHECK(r[3] == perm({3, 4, 1, 2}));
}

TEST_CASE("circular avoidance") {
  const auto target = patterns::circular_target();
  // the rotation 2341 of 1234 is the pattern itself
  CHECK_FALSE(avoids_circular(Permutation::identity(4), target));
  CHECK(avoids_circular(perm({1, 4, 3, 2}), target));
  CHECK(avoids_circular(perm({1, 2, 3}), target));
}

TEST_CASE("circular avoidance is rotation invariant") {
  std::mt19937 rng(7);
  const auto target = patterns::circular_target();
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_perm(7, rng);
    const bool a = avoids_circular(p, target);
    for (const auto& q : rotations(p)) CHECK(avoids_circular(q, target) == a);
  }
}

TEST_CASE("contains agrees with occurrences") {
  std::mt19937 rng(11);
  const VincularPattern pats[] = {patterns::circular_target(), patterns::adjacent_12_3(),
                                  patterns::p41_adjacent_23(), VincularPattern({2, 1, 3}, {})};
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_perm(6, rng);
    for (const auto& pat : pats) CHECK(contains(p, pat) == !occurrences(p, pat).empty());
  }
}

TEST_CASE("standardize") {
  const std::vector<int> w = {5, 2, 9};
  CHECK(standardize(w) == perm({2, 1, 3}));
  const std::vector<int> neg = {-4, 10, 0};
  CHECK(standardize(neg) == perm({1, 3, 2}));
  const std::vector<int> dup = {3, 3};
  CHECK_THROWS_AS(standardize(dup), std::invalid_argument);
  CHECK_THROWS_AS(standardize(std::vector<int>{}), std::invalid_argument);
}
