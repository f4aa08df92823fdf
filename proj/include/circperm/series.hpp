#pragma once

// Exact power series in x with rational coefficients, known up to an order:
// a series of order N stands for c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)).
//
// Every operation propagates the order that is actually determined by its
// inputs, the way p-adic precision is tracked:
//
//   order(a +- b) = min(Na, Nb)
//   order(a * b)  = min(Na + val b, Nb + val a)
//   order(a / b)  = min(Na - val b, Nb + val a - 2 val b)
//
// where val is the index of the first nonzero known coefficient (N + 1 for a
// series that is zero as far as it is known). Division by a series of
// positive valuation cancels the common power of x, so the quotient is known
// to fewer terms than its inputs. Callers that need N terms ask for more and
// truncate.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circperm/numeric.hpp"

namespace circperm {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncatedSeries {
 public:
  // Order -1: nothing known.
  TruncatedSeries() = default;

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(const BigRational& c, int order);
  // c * x^k, known to `order`.
  static TruncatedSeries monomial(const BigRational& c, int k, int order);
  // Polynomial with the given coefficients (lowest degree first), known to
  // `order`; terms above `order` are dropped.
  static TruncatedSeries polynomial(std::span<const BigRational> coeffs, int order);
  static TruncatedSeries from_coefficients(std::vector<BigRational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^k; throws SeriesError if k is negative or above order().
  const BigRational& operator[](int k) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  // First nonzero known coefficient, or order() + 1 if there is none.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }

  // Same series known to fewer terms. Throws SeriesError when asked for more
  // terms than are known.
  TruncatedSeries truncated(int order) const;

  // Multiplication by x^k, k >= 0. The order grows by k.
  TruncatedSeries shifted(int k) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const BigRational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& c) {
    return a *= c;
  }
  friend TruncatedSeries operator*(const BigRational& c, TruncatedSeries a) {
    return a *= c;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // Throws SeriesError when b is zero as far as it is known, or when the
  // quotient would need negative powers of x.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  // Literal equality: same order and same coefficients.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "c0, c1, ..., cN" with each coefficient in lowest terms.
  std::string to_string() const;

 private:
  explicit TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<BigRational> coeffs_;
};

enum class SeriesOp { Add, Sub, Mul, Div };

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                             SeriesOp op);

// Expansion of numer(x) / denom(x) known to exactly `order` terms. If denom
// vanishes at 0 the common power of x is cancelled first; it is an error for
// denom to have a higher valuation than numer.
TruncatedSeries expand_rational(std::span<const BigRational> numer,
                                std::span<const BigRational> denom, int order);

// 1 / (1 - c x) to the given order: 1, c, c^2, ...
TruncatedSeries geometric(const BigRational& c, int order);

}  // namespace circperm
