#include "circperm/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace circperm::oracle {

namespace {

// Enumerates every permutation of [n] (or, with `fix_one`, every permutation
// of [n] starting with 1) in lexicographic order. The space is partitioned by
// the first free letter and each partition is scanned by its own task into a
// fresh accumulator; accumulators are merged in partition order.
template <typename Acc, typename Visit>
Acc scan(int n, bool fix_one, Visit visit) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const int lead = fix_one ? 1 : 0;  // number of fixed leading letters
  if (n - lead <= 0) {
    Acc acc{};
    std::vector<int> only(static_cast<std::size_t>(n));
    std::iota(only.begin(), only.end(), 1);
    visit(acc, std::span<const int>(only));
    return acc;
  }

  std::vector<std::future<Acc>> parts;
  for (int head = lead + 1; head <= n; ++head) {
    parts.push_back(std::async(std::launch::async, [=, &visit] {
      Acc acc{};
      std::vector<int> perm;
      perm.reserve(static_cast<std::size_t>(n));
      if (fix_one) perm.push_back(1);
      perm.push_back(head);
      for (int x = lead + 1; x <= n; ++x)
        if (x != head) perm.push_back(x);
      const auto tail_begin = perm.begin() + lead + 1;
      do {
        visit(acc, std::span<const int>(perm));
      } while (std::next_permutation(tail_begin, perm.end()));
      return acc;
    }));
  }
  Acc total{};
  for (auto& f : parts) total += f.get();
  return total;
}

struct Counter {
  long long value = 0;
  Counter& operator+=(const Counter& o) {
    value += o.value;
    return *this;
  }
};

bool in_linear_class(std::span<const int> perm) {
  static const auto pair = patterns::linear_pair();
  for (const auto& p : pair)
    if (contains(perm, p)) return false;
  return true;
}

bool is_held_out(std::span<const int> perm) {
  // (n-1)(n-2)...1 n
  const int n = static_cast<int>(perm.size());
  if (perm[static_cast<std::size_t>(n - 1)] != n) return false;
  for (int k = 0; k + 1 < n; ++k)
    if (perm[static_cast<std::size_t>(k)] != n - 1 - k) return false;
  return true;
}

std::size_t position_of(std::span<const int> perm, int letter) {
  return static_cast<std::size_t>(
      std::find(perm.begin(), perm.end(), letter) - perm.begin());
}

struct PairAcc {
  std::vector<long long> cells;  // (n+1)^2, filled lazily
  PairAcc& operator+=(const PairAcc& o) {
    if (cells.empty()) cells.assign(o.cells.size(), 0);
    for (std::size_t k = 0; k < o.cells.size(); ++k) cells[k] += o.cells[k];
    return *this;
  }
};

template <typename Keep>
PairCounts group_by_last_two(int n, Keep keep) {
  const std::size_t side = static_cast<std::size_t>(n + 1);
  PairAcc acc = scan<PairAcc>(
      n, false, [&](PairAcc& a, std::span<const int> perm) {
        if (a.cells.empty()) a.cells.assign(side * side, 0);
        if (!keep(perm)) return;
        const int i = perm[perm.size() - 2];
        const int j = perm[perm.size() - 1];
        ++a.cells[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)];
      });
  PairCounts out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!acc.cells.empty())
        out.cell(i, j) = BigInt(static_cast<long>(
            acc.cells[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)]));
  return out;
}

}  // namespace

BigInt count_circular_avoiders(int n, const VincularPattern& pat) {
  Counter c = scan<Counter>(n, true, [&](Counter& acc, std::span<const int> perm) {
    const Permutation p{std::vector<int>(perm.begin(), perm.end())};
    if (avoids_circular(p, pat)) ++acc.value;
  });
  return BigInt(static_cast<long>(c.value));
}

BigInt count_linear_avoiders(int n, std::span<const VincularPattern> pats) {
  Counter c = scan<Counter>(n, false, [&](Counter& acc, std::span<const int> perm) {
    for (const auto& p : pats)
      if (contains(perm, p)) return;
    ++acc.value;
  });
  return BigInt(static_cast<long>(c.value));
}

BigInt count_linear_class(int n) {
  const auto pair = patterns::linear_pair();
  return count_linear_avoiders(n, pair);
}

PairCounts oracle_b(int n) {
  if (n < 2) throw std::invalid_argument("b(n,i,j) is defined for n >= 2");
  return group_by_last_two(n, [n](std::span<const int> perm) {
    if (is_held_out(perm) || !in_linear_class(perm)) return false;
    return position_of(perm, 1) > position_of(perm, n);
  });
}

PairCounts oracle_c(int n) {
  if (n < 2) throw std::invalid_argument("c(n,i,j) is defined for n >= 2");
  if (n == 2) return PairCounts(2);
  return group_by_last_two(n, [n](std::span<const int> perm) {
    if (is_held_out(perm) || !in_linear_class(perm)) return false;
    const auto at_n = position_of(perm, n);
    return position_of(perm, 1) < at_n && position_of(perm, 2) > at_n;
  });
}

RowCounts oracle_v(int n) {
  struct RowAcc {
    std::vector<long long> cells;
    RowAcc& operator+=(const RowAcc& o) {
      if (cells.empty()) cells.assign(o.cells.size(), 0);
      for (std::size_t k = 0; k < o.cells.size(); ++k) cells[k] += o.cells[k];
      return *this;
    }
  };
  const auto pats = patterns::auxiliary_pair();
  RowAcc acc = scan<RowAcc>(n, false, [&](RowAcc& a, std::span<const int> perm) {
    if (a.cells.empty()) a.cells.assign(static_cast<std::size_t>(n + 1), 0);
    for (const auto& p : pats)
      if (contains(perm, p)) return;
    ++a.cells[static_cast<std::size_t>(perm.back())];
  });
  RowCounts out(n);
  for (int j = 1; j <= n && !acc.cells.empty(); ++j)
    out.cell(j) = BigInt(static_cast<long>(acc.cells[static_cast<std::size_t>(j)]));
  return out;
}

ReductionResult reduction_check(int n) {
  if (n < 2) throw std::invalid_argument("reduction check needs n >= 2");
  struct Acc {
    std::optional<std::vector<int>> first_bad;
    Acc& operator+=(const Acc& o) {
      if (!first_bad && o.first_bad) first_bad = o.first_bad;
      return *this;
    }
  };
  const auto target = patterns::circular_target();
  const auto pair = patterns::linear_pair();
  Acc acc = scan<Acc>(n, true, [&](Acc& a, std::span<const int> perm) {
    if (a.first_bad) return;
    const Permutation lambda{std::vector<int>(perm.begin(), perm.end())};
    const Permutation reduced = standardize(perm.subspan(1));
    if (avoids_circular(lambda, target) != avoids_linear(reduced, pair))
      a.first_bad = std::vector<int>(perm.begin(), perm.end());
  });
  ReductionResult r;
  if (acc.first_bad) {
    r.holds = false;
    r.counterexample = Permutation(*acc.first_bad);
  }
  return r;
}

BigRational weighted_circular_sum(int n, const BigRational& v,
                                  const BigRational& u, WeightConvention conv) {
  struct Acc {
    BigRational sum = 0;
    Acc& operator+=(const Acc& o) {
      sum += o.sum;
      return *this;
    }
  };
  const long offset = conv == WeightConvention::LetterMinusTwo ? 2 : 1;
  const auto target = patterns::circular_target();
  Acc acc = scan<Acc>(n, true, [&](Acc& a, std::span<const int> perm) {
    const Permutation lambda{std::vector<int>(perm.begin(), perm.end())};
    if (!avoids_circular(lambda, target)) return;
    if (n == 1) {
      a.sum += 1;
      return;
    }
    const long last = perm[perm.size() - 1] - offset;
    const long penultimate = n >= 3 ? perm[perm.size() - 2] - offset : 0;
    a.sum += pow(v, penultimate) * pow(u, last);
  });
  return acc.sum;
}

std::map<std::string, BigInt> OracleReport::counts() const {
  std::map<std::string, BigInt> out;
  const std::string ns = std::to_string(n);
  out["a_" + ns] = linear_class;
  out["|A_" + ns + "|"] = circular_class;
  auto pair_name = [&](const char* tag, int i, int j) {
    return std::string(tag) + "(" + ns + "," + std::to_string(i) + "," +
           std::to_string(j) + ")";
  };
  auto marginal_name = [&](const char* tag, int j) {
    return std::string(tag) + "(" + ns + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i <= b.n(); ++i)
    for (int j = 1; j <= b.n(); ++j)
      if (i != j) out[pair_name("b", i, j)] = b.at(i, j);
  for (int j = 1; j <= b.n(); ++j) out[marginal_name("b", j)] = b.column_sum(j);
  for (int i = 1; i <= c.n(); ++i)
    for (int j = 1; j <= c.n(); ++j)
      if (i != j) out[pair_name("c", i, j)] = c.at(i, j);
  for (int j = 1; j <= c.n(); ++j) out[marginal_name("c", j)] = c.column_sum(j);
  for (int j = 1; j <= v.n(); ++j) out[marginal_name("v", j)] = v.at(j);
  return out;
}

OracleReport report(int n) {
  OracleReport r;
  r.n = n;
  r.linear_class = count_linear_class(n);
  r.circular_class = count_circular_avoiders(n, patterns::circular_target());
  if (n >= 2) r.b = oracle_b(n);
  if (n >= 3) r.c = oracle_c(n);
  r.v = oracle_v(n);
  return r;
}

}  // namespace circperm::oracle
