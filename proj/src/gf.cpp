#include "circperm/gf.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace circperm::gf {

namespace {

using S = TruncatedSeries;

// s / (1 - c x), same order as s.
S divide_by_linear(const S& s, const BigRational& c) {
  std::vector<BigRational> q(s.coefficients().begin(), s.coefficients().end());
  for (std::size_t k = 1; k < q.size(); ++k) q[k] += c * q[k - 1];
  return S::from_coefficients(std::move(q));
}

S poly(std::initializer_list<long> coeffs, int order) {
  std::vector<BigRational> c;
  for (long x : coeffs) c.emplace_back(x);
  return S::polynomial(c, order);
}

BigRational factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return BigRational(f);
}

BigRational sign(int j) { return (j % 2 == 0) ? 1 : -1; }

// Each iterated sum adds x^2 to its numerator and two linear factors to its
// denominator per step. When every such factor has valuation at most 1 the
// lower bound on a term's valuation never decreases, so the first term
// beyond the working order ends the sum.
void require_simple_factor(const S& factor, const char* what) {
  if (factor.valuation() > 1)
    throw DomainError(std::string("denominator factor ") + what +
                      " has valuation above 1 for this argument");
}

S accumulate(const S& sum, const S& term, bool started) {
  return started ? sum + term : term;
}

}  // namespace

Evaluator::Evaluator(int working_order)
    : work_(working_order) {
  if (working_order < 1) throw SeriesError("working order must be positive");
}

S Evaluator::scalar(const BigRational& c) const { return S::constant(c, work_); }

// ---------------------------------------------------------------------------
// V

S Evaluator::V0() {
  if (have_v0_) return v0_;
  const int W = work_;
  const S one = scalar(1);
  S inv = one;  // prod_{i=1}^{j} 1/(1 - i x)
  S num, den;
  bool started_num = false, started_den = false;
  for (int j = 1; j <= W; ++j) {
    inv = divide_by_linear(inv, j);
    const S inv_next = divide_by_linear(inv, j + 1);
    // (j+1 - j^2 x) x^j / ((j+1)! prod_{i<=j}(1-ix))
    const S d = ((poly({j + 1, -static_cast<long>(j) * j}, W) * inv) * (1 / factorial(j + 1))).shifted(j);
    den = accumulate(den, d, started_den);
    started_den = true;
    if (j + 1 <= W) {
      // (j+1 - (j^2+j+1) x) x^(j+1) / ((j+1)! prod_{i<=j+1}(1-ix))
      const S n = ((poly({j + 1, -(static_cast<long>(j) * j + j + 1)}, W) * inv_next) *
                   (1 / factorial(j + 1))).shifted(j + 1);
      num = accumulate(num, n, started_num);
      started_num = true;
    }
  }
  v0_ = num / den;
  have_v0_ = true;
  return v0_;
}

S Evaluator::V1() {
  if (have_v1_) return v1_;
  v1_ = V(scalar(1));
  have_v1_ = true;
  return v1_;
}

S Evaluator::V(const S& p_in) {
  const int lim = std::min(p_in.order(), work_);
  if (lim < 0) throw SeriesError("V: argument carries no coefficients");
  const S p = p_in.truncated(lim);
  const S one = S::constant(1, lim);
  const S px = p.shifted(1);

  const S kernel = one - p + px;
  if (kernel.is_zero()) {
    if (kernel.order() >= work_) throw DomainError("V: kernel 1 - p + p x vanishes");
    return S();  // argument known to too few terms
  }

  const S v0 = V0();
  const S p2 = p * p;
  const S p2x = p2.shifted(1);
  const S p2x2 = p2.shifted(2);

  S ppow = one;                // p^(2j)
  S q = one;                   // prod_{i=1}^{j} (1 - i p x)
  S r = one - p - px;          // prod_{i=1}^{j+1} (1 - p - i p x)
  require_simple_factor(r, "1 - p - p x");

  S sum;
  bool started = false;
  for (int j = 0;; ++j) {
    const S next_q = one - px * BigRational(j + 1);  // 1 - (j+1) p x
    const S den = q * next_q * r;
    // V0 has valuation 1, so both numerators carry at least x^(2j+1).
    if (2 * j + 1 - den.valuation() > lim) break;

    const BigRational jj(j);
    // -1 + p - j p^2 x + (2j+1) p x - (j^2+j+1) p^2 x^2
    const S n1 = (p - one) + px * BigRational(2 * j + 1) - p2x * jj -
                 p2x2 * BigRational(j * j + j + 1);
    // (1 - j p x)^2 - p + (j-1) p^2 x
    const S ajx = one - px * jj;
    const S n2 = ajx * ajx - p + p2x * BigRational(j - 1);

    const S first = (n1 * p).shifted(2 * j + 1);
    const S second = (v0 * n2 * next_q).shifted(2 * j);
    const S term = (ppow * (first + second)) / den;
    sum = accumulate(sum, term * sign(j), started);
    started = true;

    ppow = ppow * p2;
    q = q * next_q;
    const S factor = one - p - px * BigRational(j + 2);
    require_simple_factor(factor, "1 - p - i p x");
    r = r * factor;
  }
  return sum / kernel;
}

// ---------------------------------------------------------------------------
// C

S Evaluator::C11() {
  if (have_c11_) return c11_;
  const int W = work_;
  const S shifted_v = V(geometric(3, W));  // V(x, 1/(1-3x))
  const S num = (poly({1, -1}, W) * shifted_v - poly({1, -4, 3}, W) * V1() +
                 poly({3, -6, -3}, W))
                    .shifted(3);
  c11_ = num / poly({3, -15, 18}, W);  // 3 (1-2x)(1-3x)
  have_c11_ = true;
  return c11_;
}

S Evaluator::C1u(const S& u_in) {
  const int lim = std::min(u_in.order(), work_);
  if (lim < 0) throw SeriesError("C(x,1,u): argument carries no coefficients");
  const S u = u_in.truncated(lim);
  const S one = S::constant(1, lim);
  const S ux = u.shifted(1);

  const S kernel = one - u + ux;
  if (kernel.is_zero()) {
    if (kernel.order() >= work_) throw DomainError("C(x,1,u): kernel 1 - u + u x vanishes");
    return S();  // argument known to too few terms
  }

  // (1 - u x) x / (1 - x) * C(x,1,1)
  const S lead = divide_by_linear(((one - ux) * C11()).shifted(1), 1);

  const S one_minus_u = one - u;
  const S d = one - u - ux * BigRational(2);  // 1 - u - 2ux
  const S e = one - ux * BigRational(2);      // 1 - 2ux
  S rest;
  const int dv = d.valuation();
  if (one_minus_u.is_zero() && dv <= 3) {
    // The bracket below is x^3 times a power series over d; its product with
    // a vanishing (1-u) is zero to the order (1-u) is known.
    rest = S::zero(one_minus_u.order() + 3 - dv);
  } else {
    const S inner1 = (u * V1()).shifted(4) / d;
    const S inner2 = (u * u * V(u / e)).shifted(4) / (d * e);
    const S inner3 = divide_by_linear((one - ux - ux.shifted(1)).shifted(3) / e, 1);
    rest = one_minus_u * (inner1 - inner2 + inner3);
  }
  return (lead + rest) / kernel;
}

S Evaluator::C(const S& v_in, const S& u_in) {
  const int lim = std::min({v_in.order(), u_in.order(), work_});
  const S v = v_in.truncated(lim);
  const S u = u_in.truncated(lim);
  const S one = S::constant(1, lim);
  const S ux = u.shifted(1);
  const S vx = v.shifted(1);
  const S uv = u * v;

  const S d = one - u - ux * BigRational(2);
  const S e = one - ux * BigRational(2);
  const S c1v = C1u(v);

  const S part1 = u.shifted(4) / d * (V1() - u / e * V(u / e));
  const S part2 = u.shifted(4) / e;
  const S part3 = (uv.shifted(1) * (c1v - C1u(uv))) / (one - u);
  const S part4 = vx / (one - vx) * c1v;
  const S part5 = v.shifted(3) / (one - vx);
  return part1 + part2 + part3 + part4 + part5;
}

// ---------------------------------------------------------------------------
// B

S Evaluator::B11() {
  if (have_b11_) return b11_;
  const int W = work_;
  const S one = scalar(1);
  const S c11 = C11();

  S inv = one;  // prod_{i=1}^{j} 1/(1 - i x)
  S t1, t2, t3, den;
  bool started = false;
  for (int j = 1; j <= W; ++j) {
    inv = divide_by_linear(inv, j);
    const S inv2 = divide_by_linear(divide_by_linear(inv, j + 1), j + 2);
    const BigRational f_up = 1 / factorial(j + 1);
    const BigRational f_down = 1 / factorial(j - 1);

    const S a = (inv * (BigRational(j * j) * f_up)).shifted(j + 1);
    const S dj = (poly({-(j + 1), static_cast<long>(j) * j}, W) * inv * f_up).shifted(j);
    const S c3 = (poly({1, -(j + 1)}, W) * poly({1, -(j + 1)}, W) * inv2 * f_down).shifted(j + 2);

    // j x^(j+1) / ((j+1)! prod_{i<=j+2}(1-ix)) * C(x, 1, 1/(1-(j+1)x))
    const S coef = (inv2 * (BigRational(j) * f_up)).shifted(j + 1);
    const int need = W - coef.valuation();
    S b;
    if (need < 0) {
      b = S::zero(W);
    } else {
      b = coef * C1u(geometric(j + 1, need + 2));
    }

    t1 = accumulate(t1, a, started);
    t2 = accumulate(t2, b, started);
    t3 = accumulate(t3, c3, started);
    den = accumulate(den, dj, started);
    started = true;
  }
  const S num = divide_by_linear(c11, 1) * t1 + t2 + divide_by_linear(t3, 1);
  b11_ = -(num / den);
  have_b11_ = true;
  return b11_;
}

S Evaluator::B1u(const S& u_in) {
  const int lim = std::min(u_in.order(), work_);
  if (lim < 0) throw SeriesError("B(x,1,u): argument carries no coefficients");
  const S u = u_in.truncated(lim);
  const S one = S::constant(1, lim);
  const S ux = u.shifted(1);

  const S kernel = one - u + ux;
  if (kernel.is_zero()) {
    if (kernel.order() >= work_) throw DomainError("B(x,1,u): kernel 1 - u + u x vanishes");
    return S();  // argument known to too few terms
  }

  const S b11 = B11();
  const S c11_over = divide_by_linear(C11(), 1);  // C(x,1,1) / (1-x)
  const S u2 = u * u;
  const S u2x = u2.shifted(1);

  S upow = one;                   // u^(2j)
  S q = one;                      // prod_{i=1}^{j} (1 - i u x)
  S r_prev = one;                 // prod_{i=1}^{j} (1 - u - i u x)
  S r = one - u - ux;             // prod_{i=1}^{j+1} (1 - u - i u x)
  require_simple_factor(r, "1 - u - u x");

  S sum;
  bool started = false;
  for (int j = 0;; ++j) {
    const BigRational jj(j);
    const S f1 = one - ux * BigRational(j + 1);  // 1 - (j+1) u x
    const S f2 = one - ux * BigRational(j + 2);  // 1 - (j+2) u x
    const S den12 = q * r;
    if (2 * j + 1 - den12.valuation() > lim) break;

    const S a = one - ux * jj;          // 1 - j u x
    const S m = one - u - ux * jj;      // 1 - u - j u x
    const S q2 = q * f1 * f2;           // prod_{i=1}^{j+2} (1 - i u x)

    // B(x,1,1) and C(x,1,1)/(1-x) share the first denominator.
    const S n1 = (a * a + u2x * BigRational(j - 1) - u) * upow;
    const S n2 = m * m * upow;
    const S s12 = (b11 * n1 + c11_over * n2).shifted(2 * j + 1) / den12;

    const S n4 = f1 * f1 * m * upow;
    const S s4 = divide_by_linear(n4.shifted(2 * j + 2) / (q2 * r_prev), 1);

    const S c3 = (m * upow * u2 * u).shifted(2 * j + 2) / (q2 * r);
    S s3;
    if (c3.is_zero()) {
      s3 = S::zero(c3.order());  // C(x,1,.) is a power series
    } else {
      const int need = lim - c3.valuation();
      if (need < 0) {
        s3 = S::zero(lim);
      } else {
        const S w = u / f1;  // u / (1 - (j+1) u x)
        s3 = c3 * C1u(w.truncated(std::min(need + 2, w.order())));
      }
    }

    sum = accumulate(sum, (s12 - s3 + s4) * sign(j), started);
    started = true;

    upow = upow * u2;
    q = q * f1;
    r_prev = r;
    const S factor = one - u - ux * BigRational(j + 2);
    require_simple_factor(factor, "1 - u - i u x");
    r = r * factor;
  }
  return sum / kernel;
}

S Evaluator::B(const S& v_in, const S& u_in) {
  const int lim = std::min({v_in.order(), u_in.order(), work_});
  const S v = v_in.truncated(lim);
  const S u = u_in.truncated(lim);
  const S one = S::constant(1, lim);
  const S ux = u.shifted(1);
  const S vx = v.shifted(1);
  const S uv = u * v;

  const S e = one - ux * BigRational(2);  // 1 - 2ux
  const S g = one - u - ux;               // 1 - u - ux
  const S h = one - ux;                   // 1 - ux
  const S w = u / h;                      // u / (1 - ux)

  const S part1 = divide_by_linear(u.shifted(3) / e, 1);
  const S part2 = u.shifted(2) / g * (B11() - u / h * B1u(w));
  const S part3 =
      u.shifted(2) / g * (divide_by_linear(C11(), 1) - (u * u) / (h * e) * C1u(w));
  const S part4 = (vx * (B1u(v) - u * B1u(uv))) / (one - u);
  const S part5 = (v * v).shifted(1) / (one - vx) * C1u(v);
  const S part6 = v.shifted(2) / (one - vx);
  return part1 + part2 + part3 + part4 + part5 + part6;
}

// ---------------------------------------------------------------------------
// A

S Evaluator::A() {
  const int W = work_;
  return (geometric(1, W) + divide_by_linear(C11(), 1)).shifted(1) + B11().shifted(1);
}

S Evaluator::Avu(const S& v_in, const S& u_in) {
  const int lim = std::min({v_in.order(), u_in.order(), work_});
  const S v = v_in.truncated(lim);
  const S u = u_in.truncated(lim);
  const S one = S::constant(1, lim);
  const S ux = u.shifted(1);
  const S uvx = (u * v).shifted(1);

  const S head = (one.shifted(1) + (one - u).shifted(2)) / (one - ux);
  return head + B(v, u).shifted(1) + uvx / (one - uvx) * C(v, u);
}

// ---------------------------------------------------------------------------
// fixed-order entry points

namespace {

// Evaluates at increasing working orders until the tracked order of the
// result reaches `order`.
S at_order(int order, int first_margin, const std::function<S(Evaluator&)>& eval) {
  if (order < 0) throw SeriesError("order must be non-negative");
  int best = -2;
  for (int margin = first_margin;; margin *= 2) {
    Evaluator ev(order + margin);
    const S r = eval(ev);
    if (r.order() >= order) return r.truncated(order);
    if (r.order() <= best || margin > 4 * order + 64)
      throw SeriesError("could not reach order " + std::to_string(order) +
                        " (best " + std::to_string(r.order()) + ")");
    best = r.order();
  }
}

constexpr int kMargin = 8;

void require_argument_order(const S& arg, int order) {
  if (arg.order() < order)
    throw SeriesError("argument known to order " + std::to_string(arg.order()) +
                      " < requested order " + std::to_string(order));
}

// 1 - p + p x for the caller's argument, at the argument's own order.
void require_live_kernel(const S& arg, const char* name) {
  const S kernel = S::constant(1, arg.order()) - arg + arg.shifted(1);
  if (kernel.is_zero())
    throw DomainError(std::string(name) + ": kernel vanishes for this argument");
}

}  // namespace

S V_series(const BigRational& p, int order) {
  return at_order(order, kMargin, [&](Evaluator& ev) { return ev.V(ev.scalar(p)); });
}

S V_series(const S& p, int order) {
  require_argument_order(p, order);
  require_live_kernel(p, "V");
  return at_order(order, kMargin, [&](Evaluator& ev) { return ev.V(p); });
}

S V0_series(int order) {
  return at_order(order, kMargin, [](Evaluator& ev) { return ev.V0(); });
}

S C11_series(int order) {
  return at_order(order, kMargin, [](Evaluator& ev) { return ev.C11(); });
}

S C1u_series(const BigRational& u, int order) {
  return at_order(order, kMargin, [&](Evaluator& ev) { return ev.C1u(ev.scalar(u)); });
}

S C1u_series(const S& u, int order) {
  require_argument_order(u, order);
  require_live_kernel(u, "C(x,1,u)");
  return at_order(order, kMargin, [&](Evaluator& ev) { return ev.C1u(u); });
}

S B11_series(int order) {
  return at_order(order, kMargin, [](Evaluator& ev) { return ev.B11(); });
}

S B1u_series(const BigRational& u, int order) {
  return at_order(order, kMargin, [&](Evaluator& ev) { return ev.B1u(ev.scalar(u)); });
}

S B1u_series(const S& u, int order) {
  require_argument_order(u, order);
  require_live_kernel(u, "B(x,1,u)");
  return at_order(order, kMargin, [&](Evaluator& ev) { return ev.B1u(u); });
}

S A_series(int order) {
  return at_order(order, kMargin, [](Evaluator& ev) { return ev.A(); });
}

S A_vu_series(const BigRational& v0, const BigRational& u0, int order) {
  if (u0 != 1) {
    return at_order(order, kMargin, [&](Evaluator& ev) {
      return ev.Avu(ev.scalar(v0), ev.scalar(u0));
    });
  }
  // The coefficient of x^n is a polynomial in u of degree at most n - 2, so
  // order - 1 nodes determine every coefficient through x^order. One more
  // node is evaluated and must be reproduced by the interpolant.
  const int count = std::max(order - 1, 1);
  std::vector<BigRational> nodes;
  for (int k = 0; static_cast<int>(nodes.size()) < count + 1; ++k) {
    nodes.emplace_back(k % 2 == 0 ? -(k / 2) : (k + 3) / 2);  // 0, 2, -1, 3, ...
  }
  std::vector<std::future<S>> pending;
  for (const auto& u : nodes)
    pending.push_back(std::async(std::launch::async, [&v0, u, order] {
      return A_vu_series(v0, u, order);
    }));
  std::vector<S> values;
  for (auto& f : pending) values.push_back(f.get());

  // Lagrange weights for evaluating the interpolant through the first
  // `count` nodes at the point t.
  auto weights = [&](const BigRational& t) {
    std::vector<BigRational> w(static_cast<std::size_t>(count), BigRational(1));
    for (int k = 0; k < count; ++k)
      for (int m = 0; m < count; ++m)
        if (m != k) w[k] *= (t - nodes[m]) / (nodes[k] - nodes[m]);
    return w;
  };
  auto combine = [&](const std::vector<BigRational>& w) {
    S out = S::zero(order);
    for (int k = 0; k < count; ++k) out += values[k] * w[k];
    return out;
  };
  if (!(combine(weights(nodes.back())) == values.back()))
    throw SeriesError("A(x,v,u): coefficients are not polynomial in u of the expected degree");
  return combine(weights(BigRational(1)));
}

GfBundle compute_bundle(int order) {
  GfBundle bundle;
  bundle.order = order;
  for (int margin = kMargin;; margin *= 2) {
    Evaluator ev(order + margin);
    bundle.V1 = ev.V1();
    bundle.V0 = ev.V0();
    bundle.C11 = ev.C11();
    bundle.B11 = ev.B11();
    bundle.A = ev.A();
    const int reached = std::min({bundle.V1.order(), bundle.V0.order(),
                                  bundle.C11.order(), bundle.B11.order(),
                                  bundle.A.order()});
    if (reached >= order) break;
    if (margin > 4 * order + 64)
      throw SeriesError("could not reach order " + std::to_string(order));
  }
  bundle.V1 = bundle.V1.truncated(order);
  bundle.V0 = bundle.V0.truncated(order);
  bundle.C11 = bundle.C11.truncated(order);
  bundle.B11 = bundle.B11.truncated(order);
  bundle.A = bundle.A.truncated(order);
  return bundle;
}

}  // namespace circperm::gf
