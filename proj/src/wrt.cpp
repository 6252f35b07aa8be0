#include "wht/wrt.hpp"

#include <cmath>

#include "wht/engine.hpp"
#include "wht/recoupling.hpp"

namespace wht {

std::complex<double> RootSpec::a() const {
  return std::polar(1.0, M_PI / (2.0 * r));
}

std::vector<std::pair<int, std::complex<double>>> omega_weights(
    const RootSpec& spec) {
  std::vector<std::pair<int, std::complex<double>>> w;
  const std::complex<double> a = spec.a();
  for (int i = 0; i <= spec.max_color(); ++i)
    w.emplace_back(i, quantum_delta(i).evaluate(a));
  return w;
}

namespace {

int max_diagram_color(const Diagram& d) {
  int m = 0;
  for (int c : d.bottom_colors) m = std::max(m, c);
  for (const auto& s : d.slices) {
    switch (s.kind) {
      case SliceKind::Cup: m = std::max(m, s.color); break;
      case SliceKind::VertexMerge:
      case SliceKind::VertexSplit:
        m = std::max({m, s.a, s.b, s.c});
        break;
      default: break;
    }
  }
  return m;
}

}  // namespace

std::complex<double> wrt_ratio(const Diagram& d, const RootSpec& spec,
                               const std::vector<std::complex<double>>* weights,
                               bool mirror_belts) {
  if (spec.r < 3)
    throw Error(ErrorCode::ColorOutOfRange, "root spec requires r >= 3");
  if (!d.closed())
    throw Error(ErrorCode::NotClosed, "wrt_ratio requires a closed diagram");
  const int k = spec.max_color();
  if (max_diagram_color(d) > k)
    throw Error(ErrorCode::ColorOutOfRange,
                "graph color exceeds the maximal color r - 2");
  const std::complex<double> a = spec.a();

  std::vector<std::complex<double>> w;
  std::vector<std::complex<double>> deltas;
  for (int i = 0; i <= k; ++i) deltas.push_back(quantum_delta(i).evaluate(a));
  if (weights) {
    if (static_cast<int>(weights->size()) != k + 1)
      throw Error(ErrorCode::ColorOutOfRange,
                  "weight vector must cover colors 0..r-2");
    w = *weights;
  } else {
    w = deltas;
  }

  std::complex<double> den_base = 0.0;
  double den_scale = 0.0;
  for (int i = 0; i <= k; ++i) {
    den_base += w[i] * deltas[i];
    den_scale += std::abs(w[i] * deltas[i]);
  }
  if (den_scale == 0.0 || std::abs(den_base) <= 1e-12 * den_scale)
    throw Error(ErrorCode::DenominatorZero,
                "omega-cabled unknot evaluates to zero at this root");

  const auto gates = d.gate_ids();
  const int g = static_cast<int>(gates.size());
  if (g == 0) return eval_s3_at(d, a);

  // Odometer over belt color assignments, lexicographic for reproducible
  // floating-point accumulation.
  std::complex<double> num = 0.0;
  std::vector<int> asg(static_cast<size_t>(g), 0);
  for (;;) {
    std::complex<double> coeff = 1.0;
    for (int j = 0; j < g; ++j) coeff *= w[asg[static_cast<size_t>(j)]];
    if (coeff != std::complex<double>(0.0)) {
      Diagram belted = d;
      for (int j = 0; j < g; ++j)
        belted = expand_gate_to_belt(belted, gates[static_cast<size_t>(j)],
                                     asg[static_cast<size_t>(j)], mirror_belts);
      num += coeff * eval_s3_at(belted, a);
    }
    int j = g - 1;
    while (j >= 0 && asg[static_cast<size_t>(j)] == k) {
      asg[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++asg[static_cast<size_t>(j)];
  }

  std::complex<double> den = 1.0;
  for (int j = 0; j < g; ++j) den *= den_base;
  return num / den;
}

std::vector<WrtRow> convergence_check(const Diagram& d, int r_lo, int r_hi,
                                      double tol) {
  std::vector<WrtRow> rows;
  RatFn exact = bracket(d);
  for (int r = r_lo; r <= r_hi; ++r) {
    WrtRow row;
    row.r = r;
    RootSpec spec{r};
    try {
      row.lhs = exact.evaluate(spec.a());
      row.rhs = wrt_ratio(d, spec);
      row.abs_err = std::abs(row.lhs - row.rhs);
      row.status = row.abs_err < tol ? "pass" : "fail";
    } catch (const Error& e) {
      row.status = "skip";
      row.reason = error_code_name(e.code());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wht
