#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wht/diagram.hpp"
#include "wht/ratfn.hpp"

namespace wht {

// Root of unity A_r = e^{i pi / 2r}; colors range over 0..k with k = r - 2.
struct RootSpec {
  int r = 5;

  std::complex<double> a() const;
  int max_color() const { return r - 2; }
};

// Lickorish's omega as a color-weighted sum: pairs (i, Delta_i(A_r)).
std::vector<std::pair<int, std::complex<double>>> omega_weights(
    const RootSpec& spec);

// Normalized WRT ratio Z_r(M, G) / Z_r(M): each disk gate is replaced by an
// omega-cabled belt (sum over belt colors weighted by the omega weights);
// the denominator is the same cabling of the empty graph. `weights`
// overrides the omega weights (size k + 1); `mirror_belts` flips belt
// chirality.
std::complex<double> wrt_ratio(
    const Diagram& d, const RootSpec& spec,
    const std::vector<std::complex<double>>* weights = nullptr,
    bool mirror_belts = false);

struct WrtRow {
  int r = 0;
  std::complex<double> lhs{0.0, 0.0};  // bracket(d) evaluated at A_r
  std::complex<double> rhs{0.0, 0.0};  // wrt_ratio
  double abs_err = 0.0;
  std::string status;  // "pass" | "fail" | "skip"
  std::string reason;  // skip reason, empty otherwise
};

// Compares the specialized exact bracket against wrt_ratio for each r in
// [r_lo, r_hi]; poles and undersized r are reported as skips, never thrown.
std::vector<WrtRow> convergence_check(const Diagram& d, int r_lo, int r_hi,
                                      double tol);

}  // namespace wht
