#include "wht/laurent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "wht/error.hpp"

namespace wht {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InadmissibleTriple: return "InadmissibleTriple";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::ColorMismatch: return "ColorMismatch";
    case ErrorCode::InadmissibleVertex: return "InadmissibleVertex";
    case ErrorCode::DuplicateDiskId: return "DuplicateDiskId";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::HasDiskGates: return "HasDiskGates";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NotSingleWormhole: return "NotSingleWormhole";
    case ErrorCode::NonLaurentResult: return "NonLaurentResult";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::DenominatorZero: return "DenominatorZero";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Laurent::Laurent(long constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent::Laurent(const mpz_class& constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent Laurent::monomial(long exp, const mpz_class& coeff) {
  Laurent p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

long Laurent::min_exp() const { return terms_.begin()->first; }
long Laurent::max_exp() const { return terms_.rbegin()->first; }

mpz_class Laurent::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent::add_term(long exp, const mpz_class& c) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (c != 0) terms_[exp] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::involute() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Laurent Laurent::shifted(long k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::complex<double> Laurent::evaluate(const std::complex<double>& z) const {
  if (terms_.empty()) return {0.0, 0.0};
  // Horner over the dense exponent range, then shift by z^min_exp.
  long lo = min_exp(), hi = max_exp();
  std::complex<double> acc{0.0, 0.0};
  for (long e = hi; e >= lo; --e) {
    acc *= z;
    auto it = terms_.find(e);
    if (it != terms_.end()) acc += it->second.get_d();
  }
  return acc * std::pow(z, static_cast<double>(lo));
}

double Laurent::magnitude_at(const std::complex<double>& z) const {
  double m = 0.0, az = std::abs(z);
  for (const auto& [e, c] : terms_)
    m += std::abs(c.get_d()) * std::pow(az, static_cast<double>(e));
  return m;
}

std::string Laurent::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponents.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    long e = it->first;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || e == 0) out << c.get_str();
    if (e != 0) {
      if (!unit) out << "*";
      out << "A";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

// Dense polynomial in Z[x], coefficient of x^i at index i; no trailing zeros.
using Poly = std::vector<mpz_class>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const Laurent& a) {
  Poly p;
  if (a.is_zero()) return p;
  long lo = a.min_exp();
  p.assign(static_cast<size_t>(a.max_exp() - lo + 1), mpz_class(0));
  for (const auto& [e, c] : a.terms()) p[static_cast<size_t>(e - lo)] = c;
  return p;
}

Laurent from_poly(const Poly& p, long shift) {
  Laurent r;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r.add_term(static_cast<long>(i) + shift, p[i]);
  return r;
}

mpz_class poly_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly poly_div_scalar(const Poly& p, const mpz_class& s) {
  Poly r = p;
  for (auto& c : r) {
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    if (rem != 0) throw Error(ErrorCode::Internal, "non-exact scalar division");
    c = q;
  }
  return r;
}

Poly poly_primitive(const Poly& p) {
  if (p.empty()) return p;
  mpz_class c = poly_content(p);
  Poly r = poly_div_scalar(p, c);
  if (r.back() < 0)
    for (auto& x : r) x = -x;
  return r;
}

// Pseudo-remainder of a by b (b nonzero).
Poly poly_prem(Poly a, const Poly& b) {
  poly_trim(a);
  const mpz_class& lb = b.back();
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    long da = static_cast<long>(a.size()) - 1;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (long i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  if (a.empty()) return poly_primitive(b);
  if (b.empty()) return poly_primitive(a);
  a = poly_primitive(a);
  b = poly_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = poly_prem(a, b);
    a = std::move(b);
    b = poly_primitive(r);
  }
  return a;
}

// Exact division in Z[x]; returns false if not exact.
bool poly_divide(const Poly& a, const Poly& b, Poly* quot) {
  if (b.empty()) return false;
  Poly rem = a;
  poly_trim(rem);
  Poly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, mpz_class(0));
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
    long da = static_cast<long>(rem.size()) - 1;
    mpz_class qc, r2;
    mpz_tdiv_qr(qc.get_mpz_t(), r2.get_mpz_t(), rem.back().get_mpz_t(),
                b.back().get_mpz_t());
    if (r2 != 0) return false;
    q[static_cast<size_t>(da - db)] = qc;
    for (long i = 0; i <= db; ++i)
      rem[static_cast<size_t>(da - db + i)] -= qc * b[static_cast<size_t>(i)];
    poly_trim(rem);
  }
  if (!rem.empty()) return false;
  if (quot) *quot = q;
  return true;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  if (a.is_zero()) return laurent_gcd(b, a);
  Poly pa = to_poly(a);
  mpz_class ca = poly_content(pa);
  if (b.is_zero()) {
    Poly pr = poly_primitive(pa);
    for (auto& c : pr) c *= ca;
    return from_poly(pr, 0);
  }
  Poly pb = to_poly(b);
  mpz_class cb = poly_content(pb);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly g = poly_gcd(pa, pb);
  for (auto& c : g) c *= cg;
  return from_poly(g, 0);
}

bool laurent_divides(const Laurent& a, const Laurent& b, Laurent* quot) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quot) *quot = Laurent();
    return true;
  }
  Poly q;
  if (!poly_divide(to_poly(a), to_poly(b), &q)) return false;
  if (quot) *quot = from_poly(q, a.min_exp() - b.min_exp());
  return true;
}

Laurent laurent_div_exact(const Laurent& a, const Laurent& b) {
  Laurent q;
  if (!laurent_divides(a, b, &q))
    throw Error(ErrorCode::Internal, "non-exact Laurent division");
  return q;
}

const Laurent& loop_value_laurent() {
  static const Laurent d = [] {
    Laurent p;
    p.add_term(2, -1);
    p.add_term(-2, -1);
    return p;
  }();
  return d;
}

}  // namespace wht
