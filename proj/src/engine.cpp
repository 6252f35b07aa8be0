#include "wht/engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wht/recoupling.hpp"
#include "wht/tl.hpp"

namespace wht {

namespace {

// Primitive slices of the cabled (width-1) diagram. Proj inserts one
// Jones-Wenzl projector across strands pos..pos+n-1.
struct Atom {
  enum Kind { Cup, Cap, Cross, Proj } kind;
  int pos = 0;
  int sign = 0;  // Cross
  int n = 0;     // Proj
};

// Lowers a closed, disk-free colored diagram to cabled atoms. Each edge of
// the colored graph receives at least one projector: one per cup and one
// per vertex leg created by a merge/split. Extra projectors on an edge are
// absorbed by idempotence.
std::vector<Atom> compile_cabled(const Diagram& d) {
  if (!d.closed())
    throw Error(ErrorCode::NotClosed, "evaluation requires a closed diagram");
  std::vector<Atom> atoms;
  std::vector<int> colors;  // colored-strand widths
  auto base_of = [&colors](int strand) {
    return std::accumulate(colors.begin(), colors.begin() + strand, 0);
  };
  auto emit_proj = [&atoms](int base, int n) {
    if (n >= 2) atoms.push_back({Atom::Proj, base, 0, n});
  };
  for (const auto& s : d.slices) {
    switch (s.kind) {
      case SliceKind::Cup: {
        int base = base_of(s.pos), c = s.color;
        for (int k = 0; k < c; ++k) atoms.push_back({Atom::Cup, base + k, 0, 0});
        emit_proj(base, c);
        colors.insert(colors.begin() + s.pos, 2, c);
        break;
      }
      case SliceKind::Cap: {
        int base = base_of(s.pos), c = colors[s.pos];
        for (int k = c - 1; k >= 0; --k) atoms.push_back({Atom::Cap, base + k, 0, 0});
        colors.erase(colors.begin() + s.pos, colors.begin() + s.pos + 2);
        break;
      }
      case SliceKind::CrossPos:
      case SliceKind::CrossNeg: {
        int base = base_of(s.pos);
        int m = colors[s.pos], n = colors[s.pos + 1];
        int sign = s.kind == SliceKind::CrossPos ? +1 : -1;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < n; ++j)
            atoms.push_back({Atom::Cross, base + (m - 1 - i) + j, sign, 0});
        std::swap(colors[s.pos], colors[s.pos + 1]);
        break;
      }
      case SliceKind::VertexMerge: {
        int base = base_of(s.pos);
        int m = (s.a + s.b - s.c) / 2;
        for (int t = 0; t < m; ++t) atoms.push_back({Atom::Cap, base + s.a - 1 - t, 0, 0});
        emit_proj(base, s.c);
        colors.erase(colors.begin() + s.pos);
        colors[s.pos] = s.c;
        break;
      }
      case SliceKind::VertexSplit: {
        int base = base_of(s.pos);
        int m = (s.a + s.b - s.c) / 2, pl = (s.a + s.c - s.b) / 2;
        for (int k = 0; k < m; ++k) atoms.push_back({Atom::Cup, base + pl + k, 0, 0});
        emit_proj(base, s.a);
        emit_proj(base + s.a, s.b);
        colors[s.pos] = s.a;
        colors.insert(colors.begin() + s.pos + 1, s.b);
        break;
      }
      case SliceKind::DiskGate:
        throw Error(ErrorCode::HasDiskGates,
                    "disk gates must be reduced before evaluation");
    }
  }
  if (!colors.empty())
    throw Error(ErrorCode::Internal, "nonzero final width on closed diagram");
  return atoms;
}

// ---------------------------------------------------------------------------
// Brute-force state-sum evaluator.

struct BfState {
  std::vector<int> pts;  // cut point -> connectivity node
  std::vector<int> uf;
  int loops = 0;

  int fresh() {
    uf.push_back(static_cast<int>(uf.size()));
    return static_cast<int>(uf.size()) - 1;
  }
  int find(int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }
  void join_or_loop(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      ++loops;
    else
      uf[a] = b;
  }
};

// Applies a crossingless matching across cut points pos..pos+n_bottom-1.
void bf_apply_matching(BfState& st, int pos, const Matching& mu) {
  const int n = mu.n_bottom, nt = mu.n_top;
  std::vector<int> top_ids(static_cast<size_t>(nt), -1);
  for (int i = 0; i < n; ++i) {
    int q = mu.pair[static_cast<size_t>(i)];
    if (q < n) {
      if (q > i) st.join_or_loop(st.pts[pos + i], st.pts[pos + q]);
    } else {
      int t = n + nt - 1 - q;
      top_ids[static_cast<size_t>(t)] = st.pts[pos + i];
    }
  }
  for (int t = 0; t < nt; ++t) {
    if (top_ids[static_cast<size_t>(t)] >= 0) continue;
    int q = mu.pair[static_cast<size_t>(mu.top_index(t))];
    int u = n + nt - 1 - q;  // partner top strand
    int id = st.fresh();
    top_ids[static_cast<size_t>(t)] = id;
    top_ids[static_cast<size_t>(u)] = id;
  }
  st.pts.erase(st.pts.begin() + pos, st.pts.begin() + pos + n);
  st.pts.insert(st.pts.begin() + pos, top_ids.begin(), top_ids.end());
}

Matching cup_matching() {
  Matching m;
  m.n_bottom = 0;
  m.n_top = 2;
  m.pair = {1, 0};
  return m;
}

Matching cap_matching() {
  Matching m;
  m.n_bottom = 2;
  m.n_top = 0;
  m.pair = {1, 0};
  return m;
}

Matching turnback_matching() {
  // Bottom pair + top pair on two strands (the e generator of TL_2).
  Matching m;
  m.n_bottom = 2;
  m.n_top = 2;
  m.pair = {1, 0, 3, 2};
  return m;
}

void bf_run(const std::vector<Atom>& atoms, size_t ai, BfState st,
            const RatFn& weight, RatFn& acc) {
  for (size_t i = ai; i < atoms.size(); ++i) {
    const Atom& a = atoms[i];
    switch (a.kind) {
      case Atom::Cup:
        bf_apply_matching(st, a.pos, cup_matching());
        break;
      case Atom::Cap:
        bf_apply_matching(st, a.pos, cap_matching());
        break;
      case Atom::Cross: {
        const RatFn over = RatFn::monomial(a.sign);
        const RatFn under = RatFn::monomial(-a.sign);
        // Parallel smoothing: strands pass untouched.
        bf_run(atoms, i + 1, st, weight * over, acc);
        bf_apply_matching(st, a.pos, turnback_matching());
        bf_run(atoms, i + 1, std::move(st), weight * under, acc);
        return;
      }
      case Atom::Proj: {
        const TLElement& f = jones_wenzl(a.n);
        for (const auto& [mu, c] : f.combo()) {
          BfState branch = st;
          bf_apply_matching(branch, a.pos, mu);
          bf_run(atoms, i + 1, std::move(branch), weight * c, acc);
        }
        return;
      }
    }
  }
  RatFn v = weight;
  for (int l = 0; l < st.loops; ++l) v *= loop_value();
  acc += v;
}

// ---------------------------------------------------------------------------
// Transfer-matrix evaluator. State: non-crossing perfect pairing of the cut
// points (partner indices), with scalar coefficients; loops fold into the
// coefficients as they close.

using Cut = std::vector<int>;

struct Glued {
  Cut cut;
  int loops = 0;
};

// Glue matching mu across window pos..pos+mu.n_bottom-1 of pairing P.
Glued glue(const Cut& P, int pos, const Matching& mu) {
  const int w = static_cast<int>(P.size());
  const int n = mu.n_bottom, nt = mu.n_top;
  const int w2 = w - n + nt;
  Glued out;
  out.cut.assign(static_cast<size_t>(w2), -1);

  auto new_index_old = [&](int i) { return i < pos ? i : i - n + nt; };
  auto inside = [&](int i) { return i >= pos && i < pos + n; };

  std::vector<bool> seen(static_cast<size_t>(n), false);

  // Walk from an outside old point or a mu top strand to its partner.
  // Returns (is_top, index): old outside index or mu top strand.
  auto walk_from_old = [&](int start) -> std::pair<bool, int> {
    int cur = start;
    for (;;) {
      int q = P[static_cast<size_t>(cur)];
      if (!inside(q)) return {false, q};
      int b = q - pos;
      seen[static_cast<size_t>(b)] = true;
      int r = mu.pair[static_cast<size_t>(b)];
      if (r >= n) return {true, n + nt - 1 - r};
      seen[static_cast<size_t>(r)] = true;
      cur = pos + r;
    }
  };
  auto walk_from_top = [&](int t) -> std::pair<bool, int> {
    int r = mu.pair[static_cast<size_t>(mu.top_index(t))];
    if (r >= n) return {true, n + nt - 1 - r};
    seen[static_cast<size_t>(r)] = true;
    return walk_from_old(pos + r);
  };

  auto final_index = [&](bool is_top, int idx) {
    return is_top ? pos + idx : new_index_old(idx);
  };

  for (int i = 0; i < w; ++i) {
    if (inside(i)) continue;
    int a = new_index_old(i);
    if (out.cut[static_cast<size_t>(a)] >= 0) continue;
    auto [is_top, idx] = walk_from_old(i);
    int b = final_index(is_top, idx);
    out.cut[static_cast<size_t>(a)] = b;
    out.cut[static_cast<size_t>(b)] = a;
  }
  for (int t = 0; t < nt; ++t) {
    int a = pos + t;
    if (out.cut[static_cast<size_t>(a)] >= 0) continue;
    auto [is_top, idx] = walk_from_top(t);
    int b = final_index(is_top, idx);
    out.cut[static_cast<size_t>(a)] = b;
    out.cut[static_cast<size_t>(b)] = a;
  }

  // Unvisited window points sit on closed loops alternating P-chords and
  // mu bottom chords.
  for (int b = 0; b < n; ++b) {
    if (seen[static_cast<size_t>(b)]) continue;
    ++out.loops;
    int cur = b;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = true;
      int r = mu.pair[static_cast<size_t>(cur)];  // must be a bottom chord
      seen[static_cast<size_t>(r)] = true;
      cur = P[static_cast<size_t>(pos + r)] - pos;
    }
  }
  return out;
}

using State = std::map<Cut, RatFn>;

void state_add(State& st, const Cut& cut, const RatFn& coeff) {
  if (coeff.is_zero()) return;
  auto it = st.find(cut);
  if (it == st.end()) {
    st.emplace(cut, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) st.erase(it);
  }
}

void state_apply(State& st, int pos, const Matching& mu, const RatFn& scale) {
  State next;
  for (const auto& [cut, coeff] : st) {
    Glued g = glue(cut, pos, mu);
    RatFn c = coeff * scale;
    for (int l = 0; l < g.loops; ++l) c *= loop_value();
    state_add(next, g.cut, c);
  }
  st = std::move(next);
}

RatFn eval_atoms_transfer(const std::vector<Atom>& atoms) {
  State st;
  st.emplace(Cut{}, RatFn(1));
  for (const Atom& a : atoms) {
    switch (a.kind) {
      case Atom::Cup:
        state_apply(st, a.pos, cup_matching(), RatFn(1));
        break;
      case Atom::Cap:
        state_apply(st, a.pos, cap_matching(), RatFn(1));
        break;
      case Atom::Cross: {
        State parallel = st;
        for (auto& [cut, c] : parallel) c *= RatFn::monomial(a.sign);
        state_apply(st, a.pos, turnback_matching(), RatFn::monomial(-a.sign));
        for (const auto& [cut, c] : parallel) state_add(st, cut, c);
        break;
      }
      case Atom::Proj: {
        const TLElement& f = jones_wenzl(a.n);
        State next;
        for (const auto& [cut, coeff] : st) {
          for (const auto& [mu, fc] : f.combo()) {
            Glued g = glue(cut, a.pos, mu);
            RatFn c = coeff * fc;
            for (int l = 0; l < g.loops; ++l) c *= loop_value();
            state_add(next, g.cut, c);
          }
        }
        st = std::move(next);
        break;
      }
    }
  }
  RatFn v;
  for (const auto& [cut, c] : st) {
    if (!cut.empty())
      throw Error(ErrorCode::Internal, "transfer sweep left open strands");
    v += c;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Numeric transfer sweep with A specialized to a complex number.

using NState = std::map<Cut, std::complex<double>>;

void nstate_add(NState& st, const Cut& cut, const std::complex<double>& c) {
  if (c == std::complex<double>(0.0)) return;
  st[cut] += c;
}

void nstate_apply(NState& st, int pos, const Matching& mu,
                  const std::complex<double>& scale,
                  const std::complex<double>& d_at) {
  NState next;
  for (const auto& [cut, coeff] : st) {
    Glued g = glue(cut, pos, mu);
    std::complex<double> c = coeff * scale;
    for (int l = 0; l < g.loops; ++l) c *= d_at;
    nstate_add(next, g.cut, c);
  }
  st = std::move(next);
}

std::complex<double> eval_atoms_at(const std::vector<Atom>& atoms,
                                   const std::complex<double>& a) {
  const std::complex<double> d_at = -(a * a) - 1.0 / (a * a);
  NState st;
  st.emplace(Cut{}, std::complex<double>(1.0));
  for (const Atom& at : atoms) {
    switch (at.kind) {
      case Atom::Cup:
        nstate_apply(st, at.pos, cup_matching(), 1.0, d_at);
        break;
      case Atom::Cap:
        nstate_apply(st, at.pos, cap_matching(), 1.0, d_at);
        break;
      case Atom::Cross: {
        NState parallel = st;
        const std::complex<double> over = at.sign > 0 ? a : 1.0 / a;
        for (auto& [cut, c] : parallel) c *= over;
        nstate_apply(st, at.pos, turnback_matching(), 1.0 / over, d_at);
        for (const auto& [cut, c] : parallel) nstate_add(st, cut, c);
        break;
      }
      case Atom::Proj: {
        const TLElement& f = jones_wenzl(at.n);
        std::vector<std::pair<const Matching*, std::complex<double>>> combo;
        combo.reserve(f.combo().size());
        for (const auto& [mu, fc] : f.combo())
          combo.emplace_back(&mu, fc.evaluate(a));
        NState next;
        for (const auto& [cut, coeff] : st) {
          for (const auto& [mu, fc] : combo) {
            Glued g = glue(cut, at.pos, *mu);
            std::complex<double> c = coeff * fc;
            for (int l = 0; l < g.loops; ++l) c *= d_at;
            nstate_add(next, g.cut, c);
          }
        }
        st = std::move(next);
        break;
      }
    }
  }
  std::complex<double> v = 0.0;
  for (const auto& [cut, c] : st) {
    if (!cut.empty())
      throw Error(ErrorCode::Internal, "transfer sweep left open strands");
    v += c;
  }
  return v;
}

}  // namespace

RatFn eval_s3_bruteforce(const Diagram& d) {
  auto atoms = compile_cabled(d);
  RatFn acc;
  bf_run(atoms, 0, BfState{}, RatFn(1), acc);
  return acc;
}

RatFn eval_s3_transfer(const Diagram& d) {
  return eval_atoms_transfer(compile_cabled(d));
}

std::complex<double> eval_s3_at(const Diagram& d, const std::complex<double>& a) {
  return eval_atoms_at(compile_cabled(d), a);
}

namespace {

struct GateTerm {
  RatFn coeff;
  std::vector<Slice> gadget;
};

std::vector<GateTerm> gate_terms(const std::vector<int>& v, int p,
                                 FusionOrder order) {
  const int k = static_cast<int>(v.size());
  std::vector<GateTerm> out;
  if (k == 0) {
    out.push_back({RatFn(1), {}});
    return out;
  }
  if (k == 1) {
    if (v[0] == 0) out.push_back({RatFn(1), {}});
    return out;
  }
  if (order == FusionOrder::LeftComb) {
    // Path t_1 = v[0], t_{i+1} in adm(t_i, v[i]), t_k = 0.
    std::vector<int> path;  // t_2 .. t_k
    auto rec = [&](auto&& self, int i, int t, RatFn coeff) -> void {
      if (i == k) {
        if (t != 0) return;
        GateTerm g;
        g.coeff = coeff;
        int prev = v[0];
        for (int j = 1; j < k; ++j) {
          g.gadget.push_back(Slice::vmerge(p, prev, v[j], path[j - 1]));
          prev = path[j - 1];
        }
        for (int j = k - 1; j >= 1; --j) {
          int below = j >= 2 ? path[j - 2] : v[0];
          g.gadget.push_back(Slice::vsplit(p, path[j - 1], below, v[j]));
        }
        out.push_back(std::move(g));
        return;
      }
      for (int c = std::abs(t - v[i]); c <= t + v[i]; c += 2) {
        path.push_back(c);
        self(self, i + 1, c,
             coeff * (quantum_delta(c) / theta_net(t, v[i], c)));
        path.pop_back();
      }
    };
    rec(rec, 1, v[0], RatFn(1));
  } else {
    // Fold from the right: u_{k-1} = v[k-1], u_i in adm(v[i], u_{i+1}),
    // u_0 = 0.
    std::vector<int> us;  // u_{k-2} .. u_0
    auto rec = [&](auto&& self, int i, int u, RatFn coeff) -> void {
      if (i < 0) {
        if (u != 0) return;
        GateTerm g;
        g.coeff = coeff;
        int above = v[k - 1];
        for (int j = k - 2; j >= 0; --j) {
          int uj = us[static_cast<size_t>(k - 2 - j)];
          g.gadget.push_back(Slice::vmerge(p + j, v[j], above, uj));
          above = uj;
        }
        for (int j = 0; j <= k - 2; ++j) {
          int uj = us[static_cast<size_t>(k - 2 - j)];
          int above_j = j == k - 2 ? v[k - 1] : us[static_cast<size_t>(k - 3 - j)];
          g.gadget.push_back(Slice::vsplit(p + j, uj, v[j], above_j));
        }
        out.push_back(std::move(g));
        return;
      }
      for (int c = std::abs(v[i] - u); c <= v[i] + u; c += 2) {
        us.push_back(c);
        self(self, i - 1, c,
             coeff * (quantum_delta(c) / theta_net(v[i], u, c)));
        us.pop_back();
      }
    };
    rec(rec, k - 2, v[k - 1], RatFn(1));
  }
  return out;
}

void reduce_rec(const Diagram& d, const RatFn& coeff, FusionOrder order,
                WeightedDiagrams& out) {
  size_t gate_index = d.slices.size();
  for (size_t i = 0; i < d.slices.size(); ++i)
    if (d.slices[i].kind == SliceKind::DiskGate) {
      gate_index = i;
      break;
    }
  if (gate_index == d.slices.size()) {
    if (!coeff.is_zero()) out.terms.emplace_back(coeff, d);
    return;
  }
  auto profile = width_profile(d);
  const Slice& g = d.slices[gate_index];
  std::vector<int> v(profile[gate_index].begin() + g.pos,
                     profile[gate_index].begin() + g.pos + g.span);
  for (const GateTerm& t : gate_terms(v, g.pos, order)) {
    Diagram nd;
    nd.bottom_colors = d.bottom_colors;
    nd.top_colors = d.top_colors;
    nd.slices.assign(d.slices.begin(), d.slices.begin() + gate_index);
    for (const auto& s : t.gadget) nd.slices.push_back(s);
    nd.slices.insert(nd.slices.end(), d.slices.begin() + gate_index + 1,
                     d.slices.end());
    reduce_rec(nd, coeff * t.coeff, order, out);
  }
}

}  // namespace

WeightedDiagrams wormhole_reduce(const Diagram& d, FusionOrder order) {
  if (!d.closed())
    throw Error(ErrorCode::NotClosed, "wormhole_reduce requires a closed diagram");
  WeightedDiagrams out;
  reduce_rec(d, RatFn(1), order, out);
  return out;
}

RatFn bracket(const Diagram& d, FusionOrder order, bool use_oracle) {
  WeightedDiagrams terms = wormhole_reduce(d, order);
  RatFn v;
  for (const auto& [coeff, term] : terms.terms)
    v += coeff * (use_oracle ? eval_s3_bruteforce(term) : eval_s3_transfer(term));
  return v;
}

}  // namespace wht
