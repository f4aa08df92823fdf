#include "circperm/recurrence.hpp"

#include <stdexcept>

namespace circperm::recurrence {

namespace {

BigInt power_of_two(int e) {
  BigInt r = 1;
  if (e > 0) r <<= static_cast<mp_bitcnt_t>(e);
  return r;
}

std::string cell_name(const char* tag, int n, int i, int j) {
  return std::string(tag) + "(" + std::to_string(n) + "," + std::to_string(i) +
         "," + std::to_string(j) + ")";
}

}  // namespace

BinomialTable::BinomialTable(int max_row) : max_row_(max_row) {
  rows_.resize(static_cast<std::size_t>(std::max(max_row, 0) + 1));
  for (int a = 0; a <= max_row; ++a) {
    auto& row = rows_[static_cast<std::size_t>(a)];
    row.assign(static_cast<std::size_t>(a + 1), 1);
    for (int b = 1; b < a; ++b)
      row[static_cast<std::size_t>(b)] =
          rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
  }
}

const BigInt& BinomialTable::operator()(int a, int b) const {
  if (a < 0 || b < 0 || b > a) return zero_;
  if (a > max_row_) throw std::out_of_range("binomial row beyond table");
  return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// ---------------------------------------------------------------------------
// v

VTable::VTable(int max_n) {
  rows_.reserve(static_cast<std::size_t>(max_n + 1));
  for (int n = 0; n <= max_n; ++n) rows_.emplace_back(n);
  tails_.resize(static_cast<std::size_t>(max_n + 1));
}

BigInt VTable::at(int n, int j) const {
  if (n < 1 || n > max_n()) return 0;
  return rows_[static_cast<std::size_t>(n)].at(j);
}

BigInt VTable::tail_sum(int n, int j) const {
  if (n < 1 || n > max_n()) return 0;
  if (j < 1) j = 1;
  if (j > n) return 0;
  return tails_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

void VTable::rebuild_tail(int n) {
  auto& tail = tails_[static_cast<std::size_t>(n)];
  tail.assign(static_cast<std::size_t>(n + 2), 0);
  for (int j = n; j >= 1; --j)
    tail[static_cast<std::size_t>(j)] =
        tail[static_cast<std::size_t>(j + 1)] + rows_[static_cast<std::size_t>(n)].at(j);
}

void VTable::override_cell(int n, int j, const BigInt& value) {
  rows_.at(static_cast<std::size_t>(n)).cell(j) = value;
  rebuild_tail(n);
}

VTable compute_v(int max_n) {
  if (max_n < 1) throw std::invalid_argument("compute_v needs N >= 1");
  const BinomialTable binom(max_n);
  VTable t(max_n);
  for (int n = 1; n <= max_n; ++n) {
    auto& row = t.rows_[static_cast<std::size_t>(n)];
    row.cell(n) = 1;
    if (n >= 2) row.cell(1) = t.row_total(n - 1);
    for (int j = 2; j <= n - 1; ++j) {
      // Penultimate letter above j: delete j.
      BigInt s = t.tail_sum(n - 1, j);
      // Penultimate letter 1, preceded by a decreasing run of d-2 letters
      // from [2, j-1] and then some i > j.
      for (int d = 2; d <= j; ++d)
        s += binom(j - 2, d - 2) * t.tail_sum(n - d, j + 1 - d);
      row.cell(j) = s;
    }
    t.rebuild_tail(n);
  }
  return t;
}

// ---------------------------------------------------------------------------
// shared pair-table storage

PairTable::PairTable(int max_n) {
  layers_.reserve(static_cast<std::size_t>(max_n + 1));
  for (int n = 0; n <= max_n; ++n) layers_.emplace_back(n);
  marginals_.resize(static_cast<std::size_t>(max_n + 1));
  totals_.assign(static_cast<std::size_t>(max_n + 1), 0);
  for (int n = 0; n <= max_n; ++n)
    marginals_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), 0);
}

BigInt PairTable::at(int n, int i, int j) const {
  if (n < 0 || n > max_n()) return 0;
  return layers_[static_cast<std::size_t>(n)].at(i, j);
}

BigInt PairTable::marginal(int n, int j) const {
  if (n < 1 || n > max_n() || j < 1 || j > n) return 0;
  return marginals_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

BigInt PairTable::total(int n) const {
  if (n < 1 || n > max_n()) return 0;
  return totals_[static_cast<std::size_t>(n)];
}

void PairTable::set(int n, int i, int j, const BigInt& value) {
  layers_[static_cast<std::size_t>(n)].cell(i, j) = value;
}

void PairTable::close_layer(int n) {
  const auto& layer = layers_[static_cast<std::size_t>(n)];
  auto& m = marginals_[static_cast<std::size_t>(n)];
  BigInt total = 0;
  for (int j = 1; j <= n; ++j) {
    m[static_cast<std::size_t>(j)] = layer.column_sum(j);
    total += m[static_cast<std::size_t>(j)];
  }
  totals_[static_cast<std::size_t>(n)] = total;
}

void PairTable::override_cell(int n, int i, int j, const BigInt& value) {
  layers_.at(static_cast<std::size_t>(n)).cell(i, j) = value;
  close_layer(n);
}

// ---------------------------------------------------------------------------
// c

BigInt CTable::marginal(int n, int k) const {
  if (!(n > k && k >= 2)) return 0;
  return PairTable::marginal(n, k);
}

CTable compute_c(int max_n, const VTable& v) {
  if (max_n < 1) throw std::invalid_argument("compute_c needs N >= 1");
  if (v.max_n() < max_n)
    throw std::invalid_argument("compute_c: v table stops at " +
                                std::to_string(v.max_n()) + " < N = " +
                                std::to_string(max_n));
  const BinomialTable binom(max_n);
  CTable t(max_n);
  for (int n = 2; n <= max_n; ++n) {
    // c(n,n,j) = [j == 2]
    if (n >= 3) t.set(n, n, 2, 1);
    if (n >= 4) {
      for (int i = 3; i <= n - 1; ++i) {
        // Ends in i,2: strip the maximal interval [2,d] left of n.
        BigInt s = 0;
        for (int d = 2; d <= i - 1; ++d) s += t.marginal(n - i + d, d);
        t.set(n, i, 2, s);
        // Ends in a descent i > j >= 3: delete the final letter.
        const BigInt shifted = t.marginal(n - 1, i - 1);
        for (int j = 3; j < i; ++j) t.set(n, i, j, shifted);
      }
      for (int j = 3; j <= n - 2; ++j) {
        BigInt s = 0;
        for (int d = 3; d <= j; ++d)
          for (int e = 0; e <= j - d; ++e)
            s += binom(j - 3, d - 3) * binom(j - d, e) *
                 v.tail_sum(n - d - e - 1, j + 1 - d - e);
        t.set(n, 2, j, s);
      }
      t.set(n, 2, n - 1, power_of_two(n - 4));
    }
    t.close_layer(n);
  }
  return t;
}

// ---------------------------------------------------------------------------
// b

BTable compute_b(int max_n, const CTable& c) {
  if (max_n < 1) throw std::invalid_argument("compute_b needs N >= 1");
  if (c.max_n() < max_n)
    throw std::invalid_argument("compute_b: c table stops at " +
                                std::to_string(c.max_n()) + " < N = " +
                                std::to_string(max_n));
  const BinomialTable binom(max_n);

  // diag[D][M] = sum over 2 <= m <= M of c(D+m, m); this is the innermost
  // l-sum of the b(n,1,j) recurrence with D = n-k and M = k-d.
  std::vector<std::vector<BigInt>> diag(static_cast<std::size_t>(max_n + 1));
  for (int D = 0; D <= max_n; ++D) {
    auto& row = diag[static_cast<std::size_t>(D)];
    row.assign(static_cast<std::size_t>(max_n + 1), 0);
    for (int M = 2; M <= max_n; ++M)
      row[static_cast<std::size_t>(M)] =
          row[static_cast<std::size_t>(M - 1)] + c.marginal(D + M, M);
  }
  auto diag_sum = [&](int D, int M) -> BigInt {
    if (D < 0 || M < 2) return 0;
    return diag[static_cast<std::size_t>(D)][static_cast<std::size_t>(std::min(M, max_n))];
  };

  BTable t(max_n);
  for (int n = 2; n <= max_n; ++n) {
    t.set(n, n, 1, 1);  // (n-1)...2 n 1
    for (int i = 2; i <= n - 1; ++i) {
      BigInt s = t.marginal(n - 1, i - 1);
      for (int d = 2; d <= i - 1; ++d) s += c.marginal(n - i + d, d);
      t.set(n, i, 1, s);
      const BigInt shifted = t.marginal(n - 1, i - 1);
      for (int j = 2; j < i; ++j) t.set(n, i, j, shifted);
    }
    for (int j = 2; j <= n - 1; ++j) {
      BigInt s = power_of_two(j - 2);
      for (int k = j + 1; k <= n - 1; ++k)
        for (int d = 2; d <= j; ++d)
          s += binom(j - 2, d - 2) *
               (t.marginal(n - d, k - d) + diag_sum(n - k, k - d));
      t.set(n, 1, j, s);
    }
    t.close_layer(n);
  }
  return t;
}

// ---------------------------------------------------------------------------
// a

BigInt assemble_a(int n, const BTable& b, const CTable& c) {
  if (n == 1) return 1;
  BigInt a = 1;  // (n-1)(n-2)...1 n
  for (int j = 1; j <= n; ++j) a += b.marginal(n, j);
  for (int d = 0; d <= n - 2; ++d)
    for (int i = 1; i <= n - d; ++i) a += c.marginal(n - d, i);
  return a;
}

ASequence compute_a(int max_n, const BTable& b, const CTable& c) {
  if (max_n < 1) throw std::invalid_argument("compute_a needs N >= 1");
  if (b.max_n() < max_n || c.max_n() < max_n)
    throw std::invalid_argument("compute_a: tables do not reach N");
  ASequence a;
  a.values.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) a.values.push_back(assemble_a(n, b, c));
  return a;
}

Tables compute_all(int max_n) {
  Tables t;
  t.v = compute_v(max_n);
  t.c = compute_c(max_n, t.v);
  t.b = compute_b(max_n, t.c);
  t.a = compute_a(max_n, t.b, t.c);
  return t;
}

// ---------------------------------------------------------------------------
// checks

std::vector<std::string> structural_violations(const Tables& t) {
  std::vector<std::string> out;
  auto expect = [&out](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };

  for (int n = 1; n <= t.v.max_n(); ++n) {
    expect(t.v.at(n, n) == 1, "v(" + std::to_string(n) + "," + std::to_string(n) + ") != 1");
    for (int j = 1; j <= n; ++j)
      expect(t.v.at(n, j) >= 0, "v(" + std::to_string(n) + "," + std::to_string(j) + ") < 0");
  }

  for (int n = 2; n <= t.c.max_n(); ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const BigInt x = t.c.at(n, i, j);
        const std::string name = cell_name("c", n, i, j);
        expect(x >= 0, name + " < 0");
        if (i == j || j == n || j == 1 || i == 1) expect(x == 0, name + " should be 0");
        else if (i == n) expect(x == (j == 2 ? 1 : 0), name + " should be [j==2]");
        else if (i >= 3 && i < j && j <= n - 1) expect(x == 0, name + " should be 0");
      }
    if (n >= 4)
      expect(t.c.at(n, 2, n - 1) == power_of_two(n - 4),
             cell_name("c", n, 2, n - 1) + " != 2^(n-4)");
    for (int j = 1; j <= n; ++j)
      expect(t.c.PairTable::marginal(n, j) == t.c.layer(n).column_sum(j),
             "c(" + std::to_string(n) + "," + std::to_string(j) + ") marginal mismatch");
  }

  for (int n = 2; n <= t.b.max_n(); ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const BigInt x = t.b.at(n, i, j);
        const std::string name = cell_name("b", n, i, j);
        expect(x >= 0, name + " < 0");
        if (i == j || j == n) expect(x == 0, name + " should be 0");
        else if (i == n) expect(x == (j == 1 ? 1 : 0), name + " should be [j==1]");
        else if (i >= 2 && i < j && j <= n - 1) expect(x == 0, name + " should be 0");
      }
    for (int j = 1; j <= n; ++j)
      expect(t.b.marginal(n, j) == t.b.layer(n).column_sum(j),
             "b(" + std::to_string(n) + "," + std::to_string(j) + ") marginal mismatch");
  }

  for (int n = 1; n <= t.a.size(); ++n) {
    if (n == 1) expect(t.a.at(1) == 1, "a_1 != 1");
    expect(t.a.at(n) >= 1, "a_" + std::to_string(n) + " < 1");
  }
  return out;
}

ConjectureReport check_conjectures(const ASequence& a) {
  ConjectureReport r;
  for (int n = 1; n + 1 <= a.size(); ++n) {
    ConjectureReport::Step s;
    s.n = n;
    s.inequality_holds = pow(a.at(n), static_cast<unsigned long>(n + 1)) <
                         pow(a.at(n + 1), static_cast<unsigned long>(n));
    s.ratio = BigRational(a.at(n + 1), a.at(n));
    s.ratio.canonicalize();
    r.inequality_holds_everywhere = r.inequality_holds_everywhere && s.inequality_holds;
    if (!r.steps.empty() && !(s.ratio > r.steps.back().ratio))
      r.ratios_strictly_increasing = false;
    r.steps.push_back(std::move(s));
  }
  return r;
}

}  // namespace circperm::recurrence
