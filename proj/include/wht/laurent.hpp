#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>

namespace wht {

// Sparse element of Z[A, A^-1]. Invariant: no stored coefficient is zero,
// so the zero polynomial is the empty map and equality is map equality.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(long constant);
  explicit Laurent(const mpz_class& constant);
  static Laurent monomial(long exp, const mpz_class& coeff = mpz_class(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  long min_exp() const;  // requires !is_zero()
  long max_exp() const;  // requires !is_zero()
  mpz_class coeff(long exp) const;
  const std::map<long, mpz_class>& terms() const { return terms_; }

  void add_term(long exp, const mpz_class& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  Laurent involute() const;          // A -> A^-1
  Laurent shifted(long k) const;     // multiply by A^k
  mpz_class content() const;         // gcd of coefficients, nonnegative

  std::complex<double> evaluate(const std::complex<double>& z) const;
  // Sum of |coeff| * |z|^exp; scale reference for pole detection.
  double magnitude_at(const std::complex<double>& z) const;

  std::string pretty() const;

private:
  std::map<long, mpz_class> terms_;
};

// gcd up to a unit, returned normalized: min_exp 0, lowest coefficient > 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);
// Exact division; throws Error(Internal) if it does not divide.
Laurent laurent_div_exact(const Laurent& a, const Laurent& b);
// True (and sets *quot if nonnull) iff b divides a over Z[A, A^-1].
bool laurent_divides(const Laurent& a, const Laurent& b, Laurent* quot);

// d = -A^2 - A^-2, the loop value.
const Laurent& loop_value_laurent();

}  // namespace wht
