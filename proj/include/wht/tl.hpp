#pragma once

#include <map>
#include <string>
#include <vector>

#include "wht/ratfn.hpp"

namespace wht {

// A crossingless pairing of n_bottom + n_top boundary points. Points are
// indexed in circle order: bottom strands 0..n_bottom-1 left to right, then
// top strands right to left (top strand t sits at circle index
// n_bottom + n_top - 1 - t). Planarity is then a nesting condition.
// Detached loops are never stored; callers carry them as d-powers.
struct Matching {
  int n_bottom = 0;
  int n_top = 0;
  std::vector<int> pair;  // circle index -> circle index of partner

  static Matching identity(int n);
  // e_i generator of TL_n, i in 1..n-1 (turn-back on strands i-1, i).
  static Matching generator(int n, int i);

  int bottom_index(int i) const { return i; }
  int top_index(int t) const { return n_bottom + n_top - 1 - t; }

  bool planar() const;
  // Nested-parentheses debug form over the circle order.
  std::string debug_string() const;

  bool operator==(const Matching& o) const {
    return n_bottom == o.n_bottom && n_top == o.n_top && pair == o.pair;
  }
  bool operator<(const Matching& o) const {
    if (n_bottom != o.n_bottom) return n_bottom < o.n_bottom;
    if (n_top != o.n_top) return n_top < o.n_top;
    return pair < o.pair;
  }
};

struct StackedMatching {
  Matching matching;
  int loops = 0;
};

// Stack y on top of x (x.n_top == y.n_bottom), counting closed loops.
StackedMatching stack(const Matching& x, const Matching& y);
Matching tensor(const Matching& x, const Matching& y);
// Loop count of the trace closure (bottom i joined to top i around the side).
int closure_loops(const Matching& m);

// Formal RatFn-combination of matchings with common boundary counts.
class TLElement {
public:
  TLElement(int n_bottom, int n_top) : nb_(n_bottom), nt_(n_top) {}
  static TLElement identity(int n);
  static TLElement generator(int n, int i);
  static TLElement single(const Matching& m, const RatFn& c = RatFn(1));

  int n_bottom() const { return nb_; }
  int n_top() const { return nt_; }
  const std::map<Matching, RatFn>& combo() const { return combo_; }
  bool is_zero() const { return combo_.empty(); }
  RatFn coefficient(const Matching& m) const;

  void add(const Matching& m, const RatFn& c);
  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement scaled(const RatFn& c) const;
  bool operator==(const TLElement& o) const {
    return nb_ == o.nb_ && nt_ == o.nt_ && combo_ == o.combo_;
  }

private:
  int nb_, nt_;
  std::map<Matching, RatFn> combo_;
};

// Stack y on top of x, bilinear, loops closing against d.
TLElement compose(const TLElement& x, const TLElement& y);
TLElement tensor(const TLElement& x, const TLElement& y);
RatFn closure_value(const TLElement& x);

// The Jones-Wenzl idempotent f^(n), memoized.
const TLElement& jones_wenzl(int n);
// closure_value(jones_wenzl(n)), memoized alongside the projectors.
const RatFn& jones_wenzl_delta(int n);

}  // namespace wht
