#pragma once

// Closed-form generating functions for the refinement arrays, evaluated as
// exact truncated series in x. The catalytic variables (p for V, u and v for
// C and B) are specialised to series in x, which covers both rational scalars
// and the substitutions such as u/(1-2ux) that the formulas feed back into
// themselves.
//
//   V(x,p)    = sum_n sum_j v(n,j) p^(j-1) x^n
//   C(x,v,u)  = sum_n sum_{i,j} c(n,i,j) v^(i-2) u^(j-2) x^n
//   B(x,v,u)  = sum_n sum_{i,j} b(n,i,j) v^(i-1) u^(j-1) x^n
//   A(x)      = x + sum_{n>=2} a_(n-1) x^n
//   A(x,v,u)  = A(x) refined by the two letters before 1 in a circular
//               avoider; letters i+2 and j+2 give weight v^i u^j.
//
// Each public function hides the working precision: it evaluates at a few
// orders above the requested one and raises the margin until the tracked
// order of the result covers the request.

#include <stdexcept>

#include "circperm/numeric.hpp"
#include "circperm/series.hpp"

namespace circperm::gf {

// A specialisation that makes a kernel or other denominator vanish, or
// that otherwise falls outside the region where the formulas are valid.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GfBundle {
  int order = 0;
  TruncatedSeries V1;   // V(x,1)
  TruncatedSeries V0;   // V(x,0)
  TruncatedSeries C11;  // C(x,1,1)
  TruncatedSeries B11;  // B(x,1,1)
  TruncatedSeries A;    // A(x)
};

inline constexpr int kDefaultOrder = 32;

// Evaluation at one fixed working order. Intermediate results are cached.
// Results come back with whatever order the precision tracking proves; use
// the free functions below for results of a guaranteed order.
class Evaluator {
 public:
  explicit Evaluator(int working_order);

  int working_order() const { return work_; }

  TruncatedSeries V0();
  TruncatedSeries V1();
  TruncatedSeries V(const TruncatedSeries& p);
  TruncatedSeries C11();
  TruncatedSeries C1u(const TruncatedSeries& u);
  TruncatedSeries B11();
  TruncatedSeries B1u(const TruncatedSeries& u);
  TruncatedSeries A();
  TruncatedSeries C(const TruncatedSeries& v, const TruncatedSeries& u);
  TruncatedSeries B(const TruncatedSeries& v, const TruncatedSeries& u);
  TruncatedSeries Avu(const TruncatedSeries& v, const TruncatedSeries& u);

  // The scalar c as a series at the working order.
  TruncatedSeries scalar(const BigRational& c) const;

 private:
  int work_;
  TruncatedSeries v0_, v1_, c11_, b11_;
  bool have_v0_ = false, have_v1_ = false, have_c11_ = false, have_b11_ = false;
};

TruncatedSeries V_series(const BigRational& p, int order = kDefaultOrder);
// `p` must be known to at least `order`; the result is known to `order`
// unless the argument's own order limits it (SeriesError then).
TruncatedSeries V_series(const TruncatedSeries& p, int order = kDefaultOrder);
TruncatedSeries V0_series(int order = kDefaultOrder);
TruncatedSeries C11_series(int order = kDefaultOrder);
TruncatedSeries C1u_series(const BigRational& u, int order = kDefaultOrder);
TruncatedSeries C1u_series(const TruncatedSeries& u, int order = kDefaultOrder);
TruncatedSeries B11_series(int order = kDefaultOrder);
TruncatedSeries B1u_series(const BigRational& u, int order = kDefaultOrder);
TruncatedSeries B1u_series(const TruncatedSeries& u, int order = kDefaultOrder);
TruncatedSeries A_series(int order = kDefaultOrder);

// A(x,v0,u0). At u0 = 1 the printed formulas divide 0 by 0 (the factor
// 1/(1-u) multiplies a difference that vanishes there, and the inner
// argument u/(1-ux) zeroes the kernel of C(x,1,.) and B(x,1,.)). The
// coefficient of x^n is a polynomial in u of degree at most n-2, so the
// value there is interpolated exactly from evaluations at other scalars.
TruncatedSeries A_vu_series(const BigRational& v0, const BigRational& u0,
                            int order = kDefaultOrder);

GfBundle compute_bundle(int order = kDefaultOrder);

}  // namespace circperm::gf
