#include "wht/tqft.hpp"

#include <algorithm>
#include <map>

#include "wht/recoupling.hpp"

namespace wht {

long catalan_number(int n) {
  // c(n) = C(2n, n) / (n + 1); exact in long for the n used here.
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

long dim_v(const MarkedSphere& s) {
  // Left-comb fusion: carry the running edge color, count paths to 0.
  std::map<int, long> cur{{0, 1}};
  for (int v : s.colors) {
    std::map<int, long> next;
    for (const auto& [c, cnt] : cur)
      for (int c2 = std::abs(c - v); c2 <= c + v; c2 += 2) next[c2] += cnt;
    cur = std::move(next);
  }
  auto it = cur.find(0);
  return it == cur.end() ? 0 : it->second;
}

namespace {

void enumerate_matchings(std::vector<int>& pair, int n2,
                         std::vector<Matching>& out) {
  int i = 0;
  while (i < n2 && pair[i] >= 0) ++i;
  if (i == n2) {
    Matching m;
    m.n_bottom = 0;
    m.n_top = n2;
    m.pair = pair;
    if (m.planar()) out.push_back(m);
    return;
  }
  for (int j = i + 1; j < n2; ++j) {
    if (pair[j] >= 0) continue;
    pair[i] = j;
    pair[j] = i;
    enumerate_matchings(pair, n2, out);
    pair[i] = pair[j] = -1;
  }
}

}  // namespace

std::vector<Matching> catalan_basis(int n) {
  std::vector<Matching> out;
  std::vector<int> pair(2 * n, -1);
  enumerate_matchings(pair, 2 * n, out);
  return out;
}

Diagram matching_diagram(const Matching& m) {
  const int n2 = m.n_bottom + m.n_top;
  // Strand-level partner on the top boundary.
  auto partner = [&](int t) { return n2 - 1 - m.pair[n2 - 1 - t]; };
  std::vector<int> live(n2);
  for (int i = 0; i < n2; ++i) live[i] = i;
  std::vector<int> cap_positions;
  while (!live.empty()) {
    size_t i = 0;
    while (i + 1 < live.size() && partner(live[i]) != live[i + 1]) ++i;
    cap_positions.push_back(static_cast<int>(i));
    live.erase(live.begin() + i, live.begin() + i + 2);
  }
  Diagram d;
  d.top_colors.assign(n2, 1);
  for (size_t k = cap_positions.size(); k-- > 0;)
    d.slices.push_back(Slice::cup(cap_positions[k], 1));
  return d;
}

namespace {

void enumerate_paths(const std::vector<int>& v, size_t i, int cur,
                     std::vector<int>& path,
                     std::vector<std::vector<int>>& out) {
  if (i == v.size()) {
    if (cur == 0) out.push_back(path);
    return;
  }
  for (int c2 = std::abs(cur - v[i]); c2 <= cur + v[i]; c2 += 2) {
    path.push_back(c2);
    enumerate_paths(v, i + 1, c2, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> tree_colorings(const MarkedSphere& s) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  enumerate_paths(s.colors, 0, 0, path, out);
  return out;
}

std::vector<Diagram> tree_basis(const MarkedSphere& s) {
  const auto& v = s.colors;
  const int n = static_cast<int>(v.size());
  std::vector<Diagram> basis;
  for (const auto& path : tree_colorings(s)) {
    // Build the co-vector E : v -> empty as a left-comb merge chain, then
    // flip it into a vector empty -> v. path[i] is the running color after
    // absorbing v[0..i]; path[n-1] == 0.
    Diagram e;
    e.bottom_colors = v;
    if (n == 1) {
      // A lone 0-colored point: split it into two 0-strands and cap.
      e.slices.push_back(Slice::vsplit(0, 0, 0, 0));
      e.slices.push_back(Slice::cap(0));
    } else if (n >= 2) {
      for (int i = 1; i + 1 < n; ++i)
        e.slices.push_back(Slice::vmerge(0, path[i - 1], v[i], path[i]));
      // Final fuse to 0 forces equal colors; realize it as a cap.
      e.slices.push_back(Slice::cap(0));
    }
    basis.push_back(vertical_flip(e));
  }
  return basis;
}

RatFn pair_hermitian(const Diagram& x, const Diagram& y) {
  if (!x.bottom_colors.empty() || !y.bottom_colors.empty())
    throw Error(ErrorCode::BoundaryMismatch,
                "pair_hermitian expects vectors with empty bottom boundary");
  Diagram conj = vertical_flip(mirror(x));
  return bracket(compose_vertical(y, conj));
}

GramMatrix gram_matrix(const std::vector<Diagram>& basis) {
  GramMatrix g;
  g.basis = basis;
  const size_t n = basis.size();
  g.entries.assign(n, std::vector<RatFn>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      g.entries[i][j] = pair_hermitian(basis[i], basis[j]);
  return g;
}

GramMatrix gram_matrix_catalan(int n) {
  std::vector<Diagram> basis;
  for (const auto& m : catalan_basis(n)) basis.push_back(matching_diagram(m));
  return gram_matrix(basis);
}

RatFn determinant(std::vector<std::vector<RatFn>> m) {
  const size_t n = m.size();
  RatFn det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return RatFn(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      RatFn f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

bool gram_det_degree_check(int n) {
  RatFn det = determinant(gram_matrix_catalan(n).entries);
  auto lp = det.as_laurent();
  if (!lp || lp->is_zero()) return false;
  // Degree k in d = -A^2 - A^-2 means top A-exponent 2k.
  return lp->max_exp() == 2L * n * catalan_number(n);
}

MorphismMatrix morphism_matrix(const Diagram& m, const std::vector<Diagram>& b1,
                               const std::vector<Diagram>& b2) {
  MorphismMatrix out;
  out.source.colors = m.bottom_colors;
  out.target.colors = m.top_colors;
  for (const auto& b : b1)
    if (b.top_colors != m.bottom_colors)
      throw Error(ErrorCode::BoundaryMismatch,
                  "source basis boundary does not match morphism bottom");
  for (const auto& b : b2)
    if (b.top_colors != m.top_colors)
      throw Error(ErrorCode::BoundaryMismatch,
                  "target basis boundary does not match morphism top");
  out.entries.assign(b2.size(), std::vector<RatFn>(b1.size()));
  std::vector<RatFn> self(b2.size());
  for (size_t i = 0; i < b2.size(); ++i) {
    self[i] = pair_hermitian(b2[i], b2[i]);
    if (self[i].is_zero())
      throw Error(ErrorCode::SingularBasis,
                  "target basis element pairs to zero with itself");
  }
  for (size_t j = 0; j < b1.size(); ++j) {
    Diagram mb = compose_vertical(b1[j], m);
    for (size_t i = 0; i < b2.size(); ++i)
      out.entries[i][j] = pair_hermitian(b2[i], mb) / self[i];
  }
  return out;
}

RatFn trace_morphism(const MorphismMatrix& m) {
  if (m.source.colors != m.target.colors)
    throw Error(ErrorCode::BoundaryMismatch,
                "trace requires an endomorphism matrix");
  RatFn t(0);
  for (size_t i = 0; i < m.entries.size(); ++i) t += m.entries[i][i];
  return t;
}

Diagram gated_closure(const Diagram& tangle) {
  if (tangle.bottom_colors != tangle.top_colors)
    throw Error(ErrorCode::BoundaryMismatch,
                "gated closure requires equal boundaries");
  const int n = static_cast<int>(tangle.bottom_colors.size());
  std::string id = "W";
  {
    auto ids = tangle.gate_ids();
    int k = 2;
    while (std::find(ids.begin(), ids.end(), id) != ids.end())
      id = "W_" + std::to_string(k++);
  }
  Diagram c;
  for (int i = 0; i < n; ++i)
    c.slices.push_back(Slice::cup(i, tangle.bottom_colors[i]));
  // The gate encircles the n nested return arcs on the right.
  c.slices.push_back(Slice::disk(id, n, n));
  for (const auto& s : tangle.slices) c.slices.push_back(s);
  for (int i = n - 1; i >= 0; --i) c.slices.push_back(Slice::cap(i));
  return c;
}

Laurent hp_projection(const Diagram& d) {
  if (!d.closed() || d.gate_count() != 1)
    throw Error(ErrorCode::NotSingleWormhole,
                "hp_projection requires a closed diagram with one disk gate");
  for (const auto& s : d.slices)
    if (s.kind == SliceKind::Cup && s.color != 1)
      throw Error(ErrorCode::ColorMismatch,
                  "hp_projection requires all colors 1");
  auto lp = bracket(d).as_laurent();
  if (!lp)
    throw Error(ErrorCode::NonLaurentResult,
                "bracket in one wormhole is not a Laurent polynomial");
  return *lp;
}

}  // namespace wht
