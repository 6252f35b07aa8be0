#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "wht/engine.hpp"
#include "wht/recoupling.hpp"
#include "wht/wrt.hpp"

using wht::Diagram;
using wht::RootSpec;

TEST_CASE("root spec basics") {
  RootSpec r5{5};
  CHECK(r5.max_color() == 3);
  CHECK(std::abs(r5.a() - std::polar(1.0, M_PI / 10.0)) < 1e-15);
}

TEST_CASE("omega weights") {
  RootSpec r3{3};
  auto w = omega_weights(r3);
  REQUIRE(w.size() == 2);
  CHECK(w[0].first == 0);
  CHECK(std::abs(w[0].second - std::complex<double>(1.0)) < 1e-12);
  CHECK(w[1].first == 1);
  // d(A_3) = -2 cos(pi/3) = -1.
  CHECK(std::abs(w[1].second - std::complex<double>(-1.0)) < 1e-12);
  // Weight of color 0 is always 1.
  for (int r = 3; r <= 8; ++r)
    CHECK(std::abs(omega_weights(RootSpec{r})[0].second -
                   std::complex<double>(1.0)) < 1e-12);
}

TEST_CASE("numeric evaluator matches the exact one") {
  const auto a = RootSpec{7}.a();
  for (const char* name :
       {"unknot.wh", "unknot2.wh", "hopf11.wh", "hopf22.wh", "theta112.wh"}) {
    Diagram d = whtest::load_fixture(name);
    auto exact = wht::eval_s3_transfer(d).evaluate(a);
    auto numeric = wht::eval_s3_at(d, a);
    CHECK(std::abs(exact - numeric) < 1e-9 * (1.0 + std::abs(exact)));
  }
}

TEST_CASE("wrt ratio on gate-free diagrams is plain evaluation") {
  Diagram empty;
  CHECK(std::abs(wrt_ratio(empty, RootSpec{5}) - std::complex<double>(1.0)) <
        1e-12);
  Diagram u = whtest::load_fixture("unknot.wh");
  auto expect = wht::loop_value().evaluate(RootSpec{6}.a());
  CHECK(std::abs(wrt_ratio(u, RootSpec{6}) - expect) < 1e-9);
}

TEST_CASE("wrt ratio matches the specialized bracket") {
  Diagram z2 = whtest::load_fixture("z2.wh");
  CHECK(std::abs(wrt_ratio(z2, RootSpec{5}) - std::complex<double>(1.0)) <
        1e-9);
  Diagram z1 = whtest::load_fixture("z1.wh");
  CHECK(std::abs(wrt_ratio(z1, RootSpec{6})) < 1e-9);
}

TEST_CASE("wrt errors") {
  Diagram open = whtest::identity_tangle(1);
  CHECK_THROWS_AS(wrt_ratio(open, RootSpec{5}), wht::Error);
  // Color 2 requires r >= 4.
  Diagram u2 = whtest::load_fixture("unknot2.wh");
  try {
    wrt_ratio(u2, RootSpec{3});
    FAIL("expected ColorOutOfRange");
  } catch (const wht::Error& e) {
    CHECK(e.code() == wht::ErrorCode::ColorOutOfRange);
  }
}

TEST_CASE("omega scale invariance") {
  Diagram z2 = whtest::load_fixture("z2.wh");
  RootSpec spec{6};
  auto base = wrt_ratio(z2, spec);
  std::vector<std::complex<double>> w;
  for (const auto& [i, wi] : omega_weights(spec)) w.push_back(wi);
  for (auto& wi : w) wi *= std::complex<double>(2.5, -1.25);
  auto scaled = wrt_ratio(z2, spec, &w);
  CHECK(std::abs(base - scaled) < 1e-12);
}

TEST_CASE("belt chirality independence") {
  Diagram z3 = whtest::load_fixture("z3.wh");
  RootSpec spec{7};
  auto front = wrt_ratio(z3, spec, nullptr, false);
  auto back = wrt_ratio(z3, spec, nullptr, true);
  CHECK(std::abs(front - back) < 1e-9);
}

TEST_CASE("convergence check on z4") {
  Diagram z4 = whtest::load_fixture("z4.wh");
  auto rows = wht::convergence_check(z4, 5, 7, 1e-9);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CAPTURE(row.r);
    CAPTURE(row.reason);
    CHECK(row.status == "pass");
  }
}

TEST_CASE("convergence check reports skips") {
  // hopf22_gate has a 1/Delta_2-type bracket; at r = 3 colors exceed k and
  // the exact bracket itself has a pole, so the row must be a skip.
  Diagram g = whtest::load_fixture("hopf22_gate.wh");
  auto rows = wht::convergence_check(g, 3, 5, 1e-9);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].status == "skip");
  CHECK(!rows[0].reason.empty());
  CHECK(rows[2].status == "pass");
}
