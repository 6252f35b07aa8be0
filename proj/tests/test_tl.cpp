#include <doctest.h>

#include "wht/recoupling.hpp"
#include "wht/tl.hpp"

using wht::Matching;
using wht::RatFn;
using wht::TLElement;

namespace {

RatFn d() { return wht::loop_value(); }

}  // namespace

TEST_CASE("matching construction and planarity") {
  Matching id2 = Matching::identity(2);
  CHECK(id2.planar());
  Matching e = Matching::generator(3, 1);
  CHECK(e.planar());
  CHECK(e.n_bottom == 3);
  CHECK(e.n_top == 3);
  // A crossing pairing is not planar.
  Matching x;
  x.n_bottom = 2;
  x.n_top = 2;
  x.pair = {2, 3, 0, 1};  // bottom 0 <-> top 1, bottom 1 <-> top 0
  CHECK(!x.planar());
}

TEST_CASE("stack counts loops") {
  // e * e = d e in TL_2: stacking e over e makes one loop.
  Matching e = Matching::generator(2, 1);
  auto st = wht::stack(e, e);
  CHECK(st.loops == 1);
  CHECK(st.matching == e);
  // id over id: no loops.
  auto st2 = wht::stack(Matching::identity(4), Matching::identity(4));
  CHECK(st2.loops == 0);
  CHECK(st2.matching == Matching::identity(4));
}

TEST_CASE("closure loop counts") {
  CHECK(wht::closure_loops(Matching::identity(1)) == 1);
  CHECK(wht::closure_loops(Matching::identity(3)) == 3);
  CHECK(wht::closure_loops(Matching::generator(2, 1)) == 1);
}

TEST_CASE("temperley-lieb relations") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      TLElement ei = TLElement::generator(n, i);
      // e_i^2 = d e_i
      CHECK(compose(ei, ei) == ei.scaled(d()));
      // e_i e_j = e_j e_i for |i-j| >= 2
      for (int j = i + 2; j < n; ++j) {
        TLElement ej = TLElement::generator(n, j);
        CHECK(compose(ei, ej) == compose(ej, ei));
      }
      // e_i e_{i+1} e_i = e_i
      if (i + 1 < n) {
        TLElement e2 = TLElement::generator(n, i + 1);
        CHECK(compose(compose(ei, e2), ei) == ei);
      }
    }
  }
}

TEST_CASE("tensor and closure") {
  TLElement id1 = TLElement::identity(1);
  TLElement id2 = tensor(id1, id1);
  CHECK(id2 == TLElement::identity(2));
  CHECK(closure_value(TLElement::identity(2)) == d() * d());
  CHECK(closure_value(TLElement::generator(2, 1)) == d());
}

TEST_CASE("jones-wenzl idempotence") {
  for (int n = 1; n <= 6; ++n) {
    const TLElement& f = wht::jones_wenzl(n);
    CHECK(compose(f, f) == f);
    // Coefficient of the identity is 1.
    CHECK(f.coefficient(Matching::identity(n)).is_one());
  }
}

TEST_CASE("jones-wenzl annihilates the generators") {
  for (int n = 2; n <= 6; ++n) {
    const TLElement& f = wht::jones_wenzl(n);
    for (int i = 1; i < n; ++i) {
      TLElement ei = TLElement::generator(n, i);
      CHECK(compose(f, ei).is_zero());
      CHECK(compose(ei, f).is_zero());
    }
  }
}

TEST_CASE("jones-wenzl closure equals quantum delta") {
  for (int n = 0; n <= 8; ++n)
    CHECK(wht::jones_wenzl_delta(n) == wht::quantum_delta(n));
}
