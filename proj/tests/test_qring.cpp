#include <doctest.h>

#include <random>

#include "wht/error.hpp"
#include "wht/laurent.hpp"
#include "wht/ratfn.hpp"

using wht::Error;
using wht::ErrorCode;
using wht::Laurent;
using wht::RatFn;

namespace {

RatFn random_ratfn(std::mt19937& rng) {
  auto rnd_laurent = [&](bool nonzero) {
    Laurent p;
    for (int t = 0; t < 3; ++t) {
      long e = static_cast<long>(rng() % 9) - 4;
      long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) p.add_term(e, c);
    }
    if (nonzero && p.is_zero()) p.add_term(0, 1);
    return p;
  };
  return RatFn(rnd_laurent(false), rnd_laurent(true));
}

}  // namespace

TEST_CASE("laurent basic arithmetic") {
  Laurent a = Laurent::monomial(2, 3);  // 3A^2
  Laurent b = Laurent::monomial(-2, 1);
  CHECK((a + b).coeff(2) == 3);
  CHECK((a + b).coeff(-2) == 1);
  CHECK((a * b).coeff(0) == 3);
  CHECK((a - a).is_zero());
  CHECK(Laurent(1).is_one());
  CHECK(wht::loop_value_laurent().pretty() == "-A^2 - A^-2");
}

TEST_CASE("laurent involution and shift") {
  Laurent d = wht::loop_value_laurent();
  CHECK(d.involute() == d);
  Laurent m = Laurent::monomial(3, 2);
  CHECK(m.involute() == Laurent::monomial(-3, 2));
  CHECK(m.shifted(-3) == Laurent(2));
}

TEST_CASE("laurent gcd and exact division") {
  Laurent d = wht::loop_value_laurent();
  Laurent d2 = d * d;
  Laurent g = wht::laurent_gcd(d2, d);
  // gcd is d up to a unit, normalized with positive lowest coefficient.
  CHECK(wht::laurent_divides(d, g, nullptr));
  CHECK(wht::laurent_divides(g, d, nullptr));
  CHECK(wht::laurent_div_exact(d2, d) == d);
  Laurent q;
  CHECK(!wht::laurent_divides(d, d2, &q));
}

TEST_CASE("ratfn canonical form") {
  Laurent d = wht::loop_value_laurent();
  // (d^2) / d reduces to d / 1.
  RatFn f(d * d, d);
  CHECK(f == RatFn(d));
  CHECK(f.den().is_one());
  // Denominator normalization: min exponent 0, positive lowest coefficient.
  RatFn g(Laurent(1), d);
  CHECK(g.den().min_exp() == 0);
  CHECK(g.den().coeff(0) > 0);
  CHECK(g.pretty() == "1/(-A^2 - A^-2)");
}

TEST_CASE("ratfn division by zero") {
  CHECK_THROWS_AS(RatFn(1) / RatFn(0), Error);
  try {
    RatFn x(Laurent(1), Laurent());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("ratfn field axioms on random elements") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    RatFn x = random_ratfn(rng), y = random_ratfn(rng), z = random_ratfn(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + RatFn(0) == x);
    CHECK(x * RatFn(1) == x);
    CHECK((x - x).is_zero());
    if (!x.is_zero()) CHECK((x / x).is_one());
  }
}

TEST_CASE("involute is a field automorphism and an involution") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    RatFn x = random_ratfn(rng), y = random_ratfn(rng);
    CHECK((x + y).involute() == x.involute() + y.involute());
    CHECK((x * y).involute() == x.involute() * y.involute());
    CHECK(x.involute().involute() == x);
  }
}

TEST_CASE("evaluate is a homomorphism") {
  std::mt19937 rng(999);
  const std::complex<double> z = std::polar(1.0, 0.37);
  for (int trial = 0; trial < 30; ++trial) {
    RatFn x = random_ratfn(rng), y = random_ratfn(rng);
    auto lhs = (x * y).evaluate(z);
    auto rhs = x.evaluate(z) * y.evaluate(z);
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
    auto lhs2 = (x + y).evaluate(z);
    auto rhs2 = x.evaluate(z) + y.evaluate(z);
    CHECK(std::abs(lhs2 - rhs2) < 1e-10 * (1.0 + std::abs(rhs2)));
  }
}

TEST_CASE("evaluate reports poles") {
  // 1/(A^4 + 1 + A^-4) has a pole at A = e^{i pi/6}.
  Laurent den;
  den.add_term(4, 1);
  den.add_term(0, 1);
  den.add_term(-4, 1);
  RatFn f(Laurent(1), den);
  const auto root = std::polar(1.0, M_PI / 6.0);
  try {
    f.evaluate(root);
    FAIL("expected PoleAtPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtPoint);
  }
  // Away from the pole it evaluates fine.
  CHECK(std::abs(f.evaluate(std::polar(1.0, 0.1))) > 0.0);
}

TEST_CASE("as_laurent") {
  Laurent d = wht::loop_value_laurent();
  RatFn whole(d * d, d);
  auto lp = whole.as_laurent();
  REQUIRE(lp.has_value());
  CHECK(*lp == d);
  RatFn frac(Laurent(1), d);
  CHECK(!frac.as_laurent().has_value());
}

TEST_CASE("pretty printing is canonical") {
  CHECK(RatFn(0).pretty() == "0");
  CHECK(RatFn(1).pretty() == "1");
  CHECK(RatFn(-2).pretty() == "-2");
  CHECK(wht::loop_value().pretty() == "-A^2 - A^-2");
  CHECK(RatFn::monomial(3).pretty() == "A^3");
  CHECK((wht::loop_value() * wht::loop_value()).pretty() == "A^4 + 2 + A^-4");
}
