#include "wht/tl.hpp"

#include <mutex>

#include "wht/error.hpp"

namespace wht {

Matching Matching::identity(int n) {
  Matching m;
  m.n_bottom = m.n_top = n;
  m.pair.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    m.pair[i] = 2 * n - 1 - i;
    m.pair[2 * n - 1 - i] = i;
  }
  return m;
}

Matching Matching::generator(int n, int i) {
  if (i < 1 || i >= n)
    throw Error(ErrorCode::Internal, "generator index out of range");
  Matching m = identity(n);
  auto link = [&m](int a, int b) {
    m.pair[a] = b;
    m.pair[b] = a;
  };
  link(i - 1, i);                              // bottom turn-back
  link(m.top_index(i - 1), m.top_index(i));    // top turn-back
  return m;
}

bool Matching::planar() const {
  std::vector<int> st;
  for (int i = 0; i < static_cast<int>(pair.size()); ++i) {
    if (pair[i] == i) return false;
    if (pair[i] > i) {
      st.push_back(i);
    } else {
      if (st.empty() || st.back() != pair[i]) return false;
      st.pop_back();
    }
  }
  return st.empty();
}

std::string Matching::debug_string() const {
  std::string s;
  for (int i = 0; i < static_cast<int>(pair.size()); ++i)
    s += (pair[i] > i) ? '(' : ')';
  return s;
}

StackedMatching stack(const Matching& x, const Matching& y) {
  if (x.n_top != y.n_bottom)
    throw Error(ErrorCode::BoundaryMismatch, "stack: boundary mismatch");
  const int k = x.n_top;
  StackedMatching out;
  out.matching.n_bottom = x.n_bottom;
  out.matching.n_top = y.n_top;
  out.matching.pair.assign(static_cast<size_t>(x.n_bottom + y.n_top), -1);

  // Interface: x top strand t <-> y bottom strand t.
  std::vector<bool> visited(static_cast<size_t>(k), false);

  // Walk from a boundary point to its partner, hopping across the interface.
  // Side 0 = x, side 1 = y; points are circle indices within their side.
  auto walk = [&](int side, int p) -> std::pair<int, int> {
    for (;;) {
      int q = side == 0 ? x.pair[static_cast<size_t>(p)]
                        : y.pair[static_cast<size_t>(p)];
      if (side == 0) {
        if (q < x.n_bottom) return {0, q};  // x bottom: boundary
        int t = x.n_bottom + x.n_top - 1 - q;
        visited[static_cast<size_t>(t)] = true;
        side = 1;
        p = t;  // y bottom circle index is t itself
      } else {
        if (q >= y.n_bottom) return {1, q};  // y top: boundary
        int t = q;
        visited[static_cast<size_t>(t)] = true;
        side = 0;
        p = x.n_bottom + x.n_top - 1 - t;
      }
    }
  };

  auto result_index = [&](int side, int p) {
    if (side == 0) return p;  // x bottom i -> i
    int u = y.n_bottom + y.n_top - 1 - p;  // y top strand
    return out.matching.top_index(u);
  };

  for (int i = 0; i < x.n_bottom; ++i) {
    if (out.matching.pair[static_cast<size_t>(i)] >= 0) continue;
    auto [side, q] = walk(0, i);
    int a = i, b = result_index(side, q);
    out.matching.pair[static_cast<size_t>(a)] = b;
    out.matching.pair[static_cast<size_t>(b)] = a;
  }
  for (int u = 0; u < y.n_top; ++u) {
    int a = out.matching.top_index(u);
    if (out.matching.pair[static_cast<size_t>(a)] >= 0) continue;
    auto [side, q] = walk(1, y.top_index(u));
    int b = result_index(side, q);
    out.matching.pair[static_cast<size_t>(a)] = b;
    out.matching.pair[static_cast<size_t>(b)] = a;
  }

  // Remaining interface points lie on closed loops; their chords alternate
  // between the two sides.
  for (int t = 0; t < k; ++t) {
    if (visited[static_cast<size_t>(t)]) continue;
    ++out.loops;
    int cur = t;
    while (!visited[static_cast<size_t>(cur)]) {
      visited[static_cast<size_t>(cur)] = true;
      int q = x.pair[static_cast<size_t>(x.n_bottom + x.n_top - 1 - cur)];
      int t2 = x.n_bottom + x.n_top - 1 - q;
      visited[static_cast<size_t>(t2)] = true;
      cur = y.pair[static_cast<size_t>(t2)];
    }
  }
  return out;
}

Matching tensor(const Matching& x, const Matching& y) {
  Matching m;
  m.n_bottom = x.n_bottom + y.n_bottom;
  m.n_top = x.n_top + y.n_top;
  m.pair.assign(static_cast<size_t>(m.n_bottom + m.n_top), -1);

  auto map_x = [&](int p) {
    if (p < x.n_bottom) return p;
    int t = x.n_bottom + x.n_top - 1 - p;
    return m.top_index(t);
  };
  auto map_y = [&](int p) {
    if (p < y.n_bottom) return x.n_bottom + p;
    int t = y.n_bottom + y.n_top - 1 - p;
    return m.top_index(x.n_top + t);
  };
  for (int p = 0; p < x.n_bottom + x.n_top; ++p) {
    int a = map_x(p), b = map_x(x.pair[static_cast<size_t>(p)]);
    m.pair[static_cast<size_t>(a)] = b;
  }
  for (int p = 0; p < y.n_bottom + y.n_top; ++p) {
    int a = map_y(p), b = map_y(y.pair[static_cast<size_t>(p)]);
    m.pair[static_cast<size_t>(a)] = b;
  }
  return m;
}

int closure_loops(const Matching& m) {
  if (m.n_bottom != m.n_top)
    throw Error(ErrorCode::BoundaryMismatch, "closure: boundary mismatch");
  const int n = m.n_bottom;
  std::vector<bool> seen(static_cast<size_t>(2 * n), false);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++loops;
    int p = s;
    do {
      seen[static_cast<size_t>(p)] = true;
      int q = m.pair[static_cast<size_t>(p)];
      seen[static_cast<size_t>(q)] = true;
      // Closure arc: bottom i <-> top i.
      p = q < n ? m.top_index(q) : 2 * n - 1 - q;
    } while (p != s);
  }
  return loops;
}

TLElement TLElement::identity(int n) {
  return single(Matching::identity(n));
}

TLElement TLElement::generator(int n, int i) {
  return single(Matching::generator(n, i));
}

TLElement TLElement::single(const Matching& m, const RatFn& c) {
  TLElement e(m.n_bottom, m.n_top);
  e.add(m, c);
  return e;
}

RatFn TLElement::coefficient(const Matching& m) const {
  auto it = combo_.find(m);
  return it == combo_.end() ? RatFn() : it->second;
}

void TLElement::add(const Matching& m, const RatFn& c) {
  if (c.is_zero()) return;
  auto it = combo_.find(m);
  if (it == combo_.end()) {
    combo_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) combo_.erase(it);
  }
}

TLElement TLElement::operator+(const TLElement& o) const {
  TLElement r = *this;
  for (const auto& [m, c] : o.combo_) r.add(m, c);
  return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
  TLElement r = *this;
  for (const auto& [m, c] : o.combo_) r.add(m, -c);
  return r;
}

TLElement TLElement::scaled(const RatFn& c) const {
  TLElement r(nb_, nt_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : combo_) r.add(m, x * c);
  return r;
}

namespace {
RatFn d_power(int k) {
  RatFn r(1);
  for (int i = 0; i < k; ++i) r *= loop_value();
  return r;
}
}  // namespace

TLElement compose(const TLElement& x, const TLElement& y) {
  if (x.n_top() != y.n_bottom())
    throw Error(ErrorCode::BoundaryMismatch, "compose: boundary mismatch");
  TLElement r(x.n_bottom(), y.n_top());
  for (const auto& [mx, cx] : x.combo())
    for (const auto& [my, cy] : y.combo()) {
      StackedMatching s = stack(mx, my);
      r.add(s.matching, cx * cy * d_power(s.loops));
    }
  return r;
}

TLElement tensor(const TLElement& x, const TLElement& y) {
  TLElement r(x.n_bottom() + y.n_bottom(), x.n_top() + y.n_top());
  for (const auto& [mx, cx] : x.combo())
    for (const auto& [my, cy] : y.combo()) r.add(tensor(mx, my), cx * cy);
  return r;
}

RatFn closure_value(const TLElement& x) {
  if (x.n_bottom() != x.n_top())
    throw Error(ErrorCode::BoundaryMismatch, "closure: boundary mismatch");
  RatFn v;
  for (const auto& [m, c] : x.combo()) v += c * d_power(closure_loops(m));
  return v;
}

namespace {

struct JwCache {
  std::mutex mu;
  std::vector<TLElement> jw;
  std::vector<RatFn> delta;
};

JwCache& jw_cache() {
  static JwCache* c = new JwCache();
  return *c;
}

void jw_extend(JwCache& c, int n) {
  if (c.jw.empty()) {
    Matching empty;  // 0 points
    c.jw.push_back(TLElement::single(empty));
    c.delta.push_back(closure_value(c.jw[0]));
  }
  while (static_cast<int>(c.jw.size()) <= n) {
    int m = static_cast<int>(c.jw.size());  // building f^(m)
    if (m == 1) {
      c.jw.push_back(TLElement::identity(1));
    } else {
      const TLElement f = tensor(c.jw[static_cast<size_t>(m - 1)],
                                 TLElement::identity(1));
      TLElement e = TLElement::generator(m, m - 1);
      RatFn ratio = c.delta[static_cast<size_t>(m - 2)] /
                    c.delta[static_cast<size_t>(m - 1)];
      c.jw.push_back(f - compose(compose(f, e), f).scaled(ratio));
    }
    c.delta.push_back(closure_value(c.jw.back()));
  }
}

}  // namespace

const TLElement& jones_wenzl(int n) {
  if (n < 0) throw Error(ErrorCode::Internal, "jones_wenzl: negative n");
  JwCache& c = jw_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  jw_extend(c, n);
  return c.jw[static_cast<size_t>(n)];
}

const RatFn& jones_wenzl_delta(int n) {
  if (n < 0) throw Error(ErrorCode::Internal, "jones_wenzl_delta: negative n");
  JwCache& c = jw_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  jw_extend(c, n);
  return c.delta[static_cast<size_t>(n)];
}

}  // namespace wht
