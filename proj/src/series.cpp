#include "circperm/series.hpp"

#include <algorithm>

namespace circperm {

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries(std::vector<BigRational>(static_cast<std::size_t>(std::max(order + 1, 0))));
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, int order) {
  return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const BigRational& c, int k, int order) {
  auto s = zero(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::span<const BigRational> coeffs,
                                            int order) {
  auto s = zero(order);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k)
    s.coeffs_[k] = coeffs[k];
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<BigRational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  return TruncatedSeries(std::move(coeffs));
}

const BigRational& TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > order())
    throw SeriesError("coefficient x^" + std::to_string(k) +
                      " is not known (series order " + std::to_string(order()) + ")");
  return coeffs_[static_cast<std::size_t>(k)];
}

int TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  return order() + 1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order())
    throw SeriesError("cannot extend a series of order " + std::to_string(order()) +
                      " to order " + std::to_string(new_order));
  return TruncatedSeries(std::vector<BigRational>(
      coeffs_.begin(), coeffs_.begin() + std::max(new_order + 1, 0)));
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  if (k < 0) throw SeriesError("shift must be non-negative");
  std::vector<BigRational> out(static_cast<std::size_t>(k) + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.coeffs_.size() < coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.coeffs_.size() < coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int va = a.valuation();
  const int vb = b.valuation();
  const int order = std::min(a.order() + vb, b.order() + va);
  auto r = TruncatedSeries::zero(order);
  BigRational term;
  for (int k = 0; k <= order; ++k) {
    BigRational& acc = r.coeffs_[static_cast<std::size_t>(k)];
    const int lo = std::max(va, k - b.order());
    const int hi = std::min(a.order(), k - vb);
    for (int i = lo; i <= hi; ++i) {
      mpq_mul(term.get_mpq_t(), a.coeffs_[static_cast<std::size_t>(i)].get_mpq_t(),
              b.coeffs_[static_cast<std::size_t>(k - i)].get_mpq_t());
      acc += term;
    }
  }
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int vb = b.valuation();
  if (vb > b.order()) throw SeriesError("division by the zero series");
  const int va = a.valuation();
  if (va <= a.order() && va < vb)
    throw SeriesError("quotient has negative valuation (numerator x^" +
                      std::to_string(va) + ", denominator x^" + std::to_string(vb) + ")");
  const int order = std::min(a.order() - vb, b.order() + va - 2 * vb);
  if (order < 0) return TruncatedSeries::zero(std::max(order, -1));

  // Cancel x^vb and divide term by term: q_k = (a'_k - sum b'_i q_(k-i)) / b'_0.
  const int qv = va - vb;  // q_k = 0 below this index
  const BigRational inv_lead = 1 / b.coeffs_[static_cast<std::size_t>(vb)];
  auto q = TruncatedSeries::zero(order);
  BigRational term;
  for (int k = std::max(qv, 0); k <= order; ++k) {
    BigRational acc = a.coeffs_[static_cast<std::size_t>(k + vb)];
    const int hi = std::min(k - qv, b.order() - vb);
    for (int i = 1; i <= hi; ++i) {
      const auto& bi = b.coeffs_[static_cast<std::size_t>(i + vb)];
      if (sgn(bi) == 0) continue;
      mpq_mul(term.get_mpq_t(), bi.get_mpq_t(),
              q.coeffs_[static_cast<std::size_t>(k - i)].get_mpq_t());
      acc -= term;
    }
    q.coeffs_[static_cast<std::size_t>(k)] = acc * inv_lead;
  }
  return q;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_decimal(coeffs_[k]);
  }
  return out;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                             SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Sub: return a - b;
    case SeriesOp::Mul: return a * b;
    case SeriesOp::Div: return a / b;
  }
  throw SeriesError("unknown series operation");
}

TruncatedSeries expand_rational(std::span<const BigRational> numer,
                                std::span<const BigRational> denom, int order) {
  // Both inputs are exact polynomials, so they can be taken to whatever order
  // the valuation shift eats.
  int shift = 0;
  while (static_cast<std::size_t>(shift) < denom.size() &&
         sgn(denom[static_cast<std::size_t>(shift)]) == 0)
    ++shift;
  if (static_cast<std::size_t>(shift) == denom.size())
    throw SeriesError("division by the zero polynomial");
  const int work = order + 2 * shift;
  const auto n = TruncatedSeries::polynomial(numer, work);
  const auto d = TruncatedSeries::polynomial(denom, work);
  return (n / d).truncated(order);
}

TruncatedSeries geometric(const BigRational& c, int order) {
  std::vector<BigRational> coeffs(static_cast<std::size_t>(std::max(order + 1, 0)));
  BigRational p = 1;
  for (auto& x : coeffs) {
    x = p;
    p *= c;
  }
  return TruncatedSeries::from_coefficients(std::move(coeffs));
}

}  // namespace circperm
