#include "circperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circperm {

namespace {

bool is_bijection_onto_1_to_n(std::span<const int> entries) {
  std::vector<bool> seen(entries.size() + 1, false);
  for (int e : entries) {
    if (e < 1 || static_cast<std::size_t>(e) > entries.size() || seen[e])
      return false;
    seen[e] = true;
  }
  return true;
}

std::string join_letters(std::span<const int> letters) {
  const bool wide = std::any_of(letters.begin(), letters.end(),
                                [](int e) { return e > 9; });
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(letters[k]);
  }
  return out;
}

// Backtracking over index tuples. `visit` receives the 0-based positions of a
// complete occurrence and returns false to stop the search.
template <typename Visit>
bool search(std::span<const int> host, const VincularPattern& pat,
            std::vector<std::size_t>& chosen, std::size_t depth, Visit& visit) {
  const std::size_t n = host.size();
  const std::size_t m = pat.size();
  if (depth == m) return visit(chosen);

  std::size_t first = depth == 0 ? 0 : chosen[depth - 1] + 1;
  std::size_t last = n - (m - depth);  // leave room for the remaining letters
  if (depth > 0 && pat.joined_to_next(depth - 1)) last = std::min(last, first);

  const auto pattern = pat.entries();
  for (std::size_t pos = first; pos <= last; ++pos) {
    bool order_ok = true;
    for (std::size_t s = 0; s < depth && order_ok; ++s)
      order_ok = (host[pos] < host[chosen[s]]) == (pattern[depth] < pattern[s]);
    if (!order_ok) continue;
    chosen[depth] = pos;
    if (!search(host, pat, chosen, depth + 1, visit)) return false;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("permutation must have at least one entry");
  if (!is_bijection_onto_1_to_n(entries_))
    throw std::invalid_argument("not a permutation of 1..n: " +
                                join_letters(entries_));
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const { return join_letters(entries_); }

VincularPattern::VincularPattern(std::vector<int> entries,
                                 std::vector<int> vincula)
    : entries_(std::move(entries)), vincula_(std::move(vincula)) {
  if (entries_.empty() || !is_bijection_onto_1_to_n(entries_))
    throw std::invalid_argument("pattern entries must be a permutation of 1..m");
  std::sort(vincula_.begin(), vincula_.end());
  vincula_.erase(std::unique(vincula_.begin(), vincula_.end()), vincula_.end());
  joined_.assign(entries_.size(), false);
  for (int t : vincula_) {
    if (t < 1 || static_cast<std::size_t>(t) >= entries_.size())
      throw std::invalid_argument("vinculum position " + std::to_string(t) +
                                  " outside 1..m-1");
    joined_[static_cast<std::size_t>(t) - 1] = true;
  }
}

std::string VincularPattern::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k > 0 && !joined_[k - 1]) out += '-';
    out += std::to_string(entries_[k]);
  }
  return out;
}

std::vector<Occurrence> occurrences(const Permutation& host,
                                    const VincularPattern& pat) {
  std::vector<Occurrence> found;
  if (pat.size() > host.size()) return found;
  std::vector<std::size_t> chosen(pat.size());
  auto collect = [&found](const std::vector<std::size_t>& idx) {
    Occurrence occ;
    occ.indices.reserve(idx.size());
    for (std::size_t i : idx) occ.indices.push_back(i + 1);
    found.push_back(std::move(occ));
    return true;
  };
  search(host.entries(), pat, chosen, 0, collect);
  return found;
}

bool contains(std::span<const int> host, const VincularPattern& pat) {
  if (pat.size() > host.size()) return false;
  std::vector<std::size_t> chosen(pat.size());
  bool hit = false;
  auto stop = [&hit](const std::vector<std::size_t>&) {
    hit = true;
    return false;
  };
  search(host, pat, chosen, 0, stop);
  return hit;
}

bool contains(const Permutation& host, const VincularPattern& pat) {
  return contains(host.entries(), pat);
}

bool avoids_linear(const Permutation& host,
                   std::span<const VincularPattern> pats) {
  return std::none_of(pats.begin(), pats.end(), [&](const VincularPattern& p) {
    return contains(host, p);
  });
}

std::vector<Permutation> rotations(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(p.size());
  std::vector<int> current(p.entries().begin(), p.entries().end());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.emplace_back(current);
    std::rotate(current.rbegin(), current.rbegin() + 1, current.rend());
  }
  return out;
}

bool avoids_circular(const Permutation& p, const VincularPattern& pat) {
  const auto all = rotations(p);
  return std::none_of(all.begin(), all.end(), [&](const Permutation& r) {
    return contains(r, pat);
  });
}

Permutation standardize(std::span<const int> word) {
  if (word.empty()) throw std::invalid_argument("cannot standardize an empty word");
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize requires distinct entries");
  std::vector<int> ranks;
  ranks.reserve(word.size());
  for (int w : word) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
    ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranks));
}

namespace patterns {

VincularPattern circular_target() { return {{2, 3, 4, 1}, {1}}; }
VincularPattern adjacent_12_3() { return {{1, 2, 3}, {1}}; }
VincularPattern p41_adjacent_23() { return {{4, 1, 2, 3}, {3}}; }
VincularPattern p1_adjacent_23() { return {{1, 2, 3}, {2}}; }

std::vector<VincularPattern> linear_pair() {
  return {adjacent_12_3(), p41_adjacent_23()};
}

std::vector<VincularPattern> auxiliary_pair() {
  return {adjacent_12_3(), p1_adjacent_23()};
}

}  // namespace patterns

}  // namespace circperm
