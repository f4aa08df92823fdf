#pragma once

#include <gmpxx.h>

#include <string>

namespace circperm {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_decimal(const BigRational& q) { return q.get_str(10); }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline BigRational pow(const BigRational& base, long exponent) {
  BigRational r = 1;
  BigRational b = exponent >= 0 ? base : BigRational(1) / base;
  for (long e = exponent >= 0 ? exponent : -exponent; e > 0; --e) r *= b;
  return r;
}

}  // namespace circperm
