#pragma once

#include <complex>
#include <optional>
#include <string>

#include "wht/laurent.hpp"

namespace wht {

// Element of Q(A) stored as a reduced fraction of Laurent polynomials.
// Canonical form: gcd(num, den) is a unit, den has min exponent 0 and its
// lowest-degree coefficient positive. Equality is componentwise equality
// of canonical forms.
class RatFn {
public:
  RatFn() : num_(), den_(1) {}
  RatFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFn(const Laurent& n) : num_(n), den_(1) {}
  RatFn(Laurent num, Laurent den);  // canonicalizes; throws DivisionByZero
  static RatFn monomial(long exp, long coeff = 1) {
    return RatFn(Laurent::monomial(exp, coeff));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;  // throws DivisionByZero
  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  bool operator==(const RatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFn& o) const { return !(*this == o); }
  bool operator<(const RatFn& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  RatFn involute() const;
  std::complex<double> evaluate(const std::complex<double>& z,
                                double rel_tol = 1e-12) const;
  std::optional<Laurent> as_laurent() const;

  std::string pretty() const;

private:
  Laurent num_, den_;
};

// The loop value d = -A^2 - A^-2 as a RatFn.
const RatFn& loop_value();

}  // namespace wht
