#include "wht/recoupling.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "wht/diagram.hpp"
#include "wht/engine.hpp"
#include "wht/error.hpp"

namespace wht {

bool is_admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

bool AdmissibleTriple::ok() const { return is_admissible(a, b, c); }

const RatFn& quantum_delta(int n) {
  if (n < 0) throw Error(ErrorCode::Internal, "quantum_delta: negative color");
  static std::mutex mu;
  static std::vector<RatFn> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // (-1)^m (A^{2(m+1)} - A^{-2(m+1)}) / (A^2 - A^-2), expanded.
    Laurent p;
    for (int j = 0; j <= m; ++j) p.add_term(2 * m - 4 * j, m % 2 ? -1 : 1);
    cache.push_back(RatFn(p));
  }
  return cache[static_cast<size_t>(n)];
}

Matching vertex_matching(int a, int b, int c) {
  if (!is_admissible(a, b, c))
    throw Error(ErrorCode::InadmissibleTriple, "inadmissible vertex colors");
  const int p = (a + c - b) / 2, q = (b + c - a) / 2, m = (a + b - c) / 2;
  Matching v;
  v.n_bottom = c;
  v.n_top = a + b;
  v.pair.assign(static_cast<size_t>(c + a + b), -1);
  auto link = [&v](int x, int y) {
    v.pair[static_cast<size_t>(x)] = y;
    v.pair[static_cast<size_t>(y)] = x;
  };
  for (int i = 0; i < p; ++i) link(i, v.top_index(i));
  for (int j = 0; j < q; ++j) link(p + j, v.top_index(a + m + j));
  for (int i = 0; i < m; ++i) link(v.top_index(p + i), v.top_index(a + m - 1 - i));
  if (!v.planar())
    throw Error(ErrorCode::Internal, "vertex matching is not planar");
  return v;
}

namespace {

Matching transpose(const Matching& m) {
  Matching t;
  t.n_bottom = m.n_top;
  t.n_top = m.n_bottom;
  t.pair.assign(m.pair.size(), -1);
  auto map_pt = [&](int p) {
    // m bottom i -> t top i; m top u -> t bottom u.
    if (p < m.n_bottom) return t.top_index(p);
    return m.n_bottom + m.n_top - 1 - p;
  };
  for (int p = 0; p < static_cast<int>(m.pair.size()); ++p) {
    int a = map_pt(p), b = map_pt(m.pair[static_cast<size_t>(p)]);
    t.pair[static_cast<size_t>(a)] = b;
  }
  return t;
}

}  // namespace

TLElement vertex_up(int a, int b, int c) {
  TLElement tau = TLElement::single(vertex_matching(a, b, c));
  TLElement legs = tensor(jones_wenzl(a), jones_wenzl(b));
  return compose(compose(jones_wenzl(c), tau), legs);
}

TLElement vertex_down(int a, int b, int c) {
  TLElement tau = TLElement::single(transpose(vertex_matching(a, b, c)));
  TLElement legs = tensor(jones_wenzl(a), jones_wenzl(b));
  return compose(compose(legs, tau), jones_wenzl(c));
}

namespace {

// Quantum integer [k] = (A^{2k} - A^{-2k}) / (A^2 - A^-2) as a Laurent
// polynomial: A^{2(k-1)} + A^{2(k-3)} + ... + A^{-2(k-1)}.
Laurent quantum_int(int k) {
  Laurent p;
  for (int j = 0; j < k; ++j) p.add_term(2 * (k - 1) - 4 * j, 1);
  return p;
}

// Quantum factorial [k]! = [1][2]...[k]. A deque keeps references stable
// while the cache grows.
const Laurent& quantum_factorial(int k) {
  static std::deque<Laurent> cache{Laurent(1)};
  while (static_cast<int>(cache.size()) <= k)
    cache.push_back(cache.back() *
                    quantum_int(static_cast<int>(cache.size())));
  return cache[static_cast<size_t>(k)];
}

}  // namespace

const RatFn& theta_net(int a, int b, int c) {
  if (!is_admissible(a, b, c))
    throw Error(ErrorCode::InadmissibleTriple, "theta_net: inadmissible triple");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, RatFn> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(a, b, c);
  auto it = cache.find(key);
  if (it == cache.end()) {
    // Closed form with internal colors m, n, p (a = m+n, b = m+p, c = n+p):
    //   theta = (-1)^{m+n+p} [m+n+p+1]! [m]! [n]! [p]!
    //           / ([m+n]! [n+p]! [p+m]!).
    const int m = (a + b - c) / 2, n = (a + c - b) / 2, p = (b + c - a) / 2;
    RatFn v = RatFn(quantum_factorial(m + n + p + 1) * quantum_factorial(m),
                    quantum_factorial(m + n) * quantum_factorial(n + p)) *
              RatFn(quantum_factorial(n) * quantum_factorial(p),
                    quantum_factorial(p + m));
    if ((m + n + p) % 2) v = -v;
    it = cache.emplace(key, std::move(v)).first;
  }
  return it->second;
}

std::vector<std::pair<int, RatFn>> fusion_coefficients(int a, int b) {
  std::vector<std::pair<int, RatFn>> out;
  for (int c = std::abs(a - b); c <= a + b; c += 2)
    out.emplace_back(c, quantum_delta(c) / theta_net(a, b, c));
  return out;
}

const RatFn& twist_coefficient(int n) {
  if (n < 0) throw Error(ErrorCode::Internal, "twist_coefficient: negative color");
  static std::mutex mu;
  static std::map<int, RatFn> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    Diagram d;
    d.slices.push_back(Slice::cup(0, n));
    d.slices.push_back(Slice::cross(0, +1));
    d.slices.push_back(Slice::cap(0));
    RatFn v = eval_s3_transfer(d) / quantum_delta(n);
    it = cache.emplace(n, std::move(v)).first;
  }
  return it->second;
}

}  // namespace wht
