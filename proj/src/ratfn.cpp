#include "wht/ratfn.hpp"

#include "wht/error.hpp"

namespace wht {

RatFn::RatFn(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  Laurent g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = laurent_div_exact(num_, g);
    den_ = laurent_div_exact(den_, g);
  }
  // Normalize the denominator to min exponent 0, lowest coefficient > 0,
  // compensating in the numerator (units of Z[A,A^-1]).
  long sh = -den_.min_exp();
  den_ = den_.shifted(sh);
  num_ = num_.shifted(sh);
  if (den_.coeff(0) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
  return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::involute() const { return RatFn(num_.involute(), den_.involute()); }

std::complex<double> RatFn::evaluate(const std::complex<double>& z,
                                     double rel_tol) const {
  std::complex<double> dv = den_.evaluate(z);
  double scale = den_.magnitude_at(z);
  if (std::abs(dv) <= rel_tol * (scale > 0 ? scale : 1.0))
    throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at point");
  return num_.evaluate(z) / dv;
}

std::optional<Laurent> RatFn::as_laurent() const {
  if (den_.is_one()) return num_;
  // Canonical form is reduced, so a non-unit denominator cannot divide.
  Laurent q;
  if (laurent_divides(num_, den_, &q)) return q;
  return std::nullopt;
}

std::string RatFn::pretty() const {
  if (den_.is_one()) return num_.pretty();
  // Choose a unit multiple for display. If the numerator is a monomial,
  // reduce it to a positive constant; otherwise center its exponent range
  // and make its leading coefficient positive.
  Laurent n = num_, d = den_;
  long sh;
  bool flip;
  if (n.terms().size() == 1) {
    sh = -n.min_exp();
    flip = n.coeff(n.min_exp()) < 0;
  } else {
    sh = -(n.min_exp() + n.max_exp()) / 2;
    flip = n.coeff(n.max_exp()) < 0;
  }
  n = n.shifted(sh);
  d = d.shifted(sh);
  if (flip) {
    n = -n;
    d = -d;
  }
  std::string ns = n.pretty();
  if (n.terms().size() > 1) ns = "(" + ns + ")";
  return ns + "/(" + d.pretty() + ")";
}

const RatFn& loop_value() {
  static const RatFn d{loop_value_laurent()};
  return d;
}

}  // namespace wht
