#pragma once

#include <complex>
#include <vector>

#include "wht/diagram.hpp"
#include "wht/ratfn.hpp"

namespace wht {

// Formal RatFn-combination of closed, disk-free diagrams; the output of
// wormhole reduction.
struct WeightedDiagrams {
  std::vector<std::pair<RatFn, Diagram>> terms;
};

enum class FusionOrder { LeftComb, RightComb };

// Kauffman bracket of a closed, disk-free colored diagram: every n-colored
// edge becomes an n-cable with one Jones-Wenzl insertion, vertices become
// the unique planar cable routings, CrossPos resolves as
// A*(parallel) + A^-1*(turn-back). Full state-sum expansion.
RatFn eval_s3_bruteforce(const Diagram& d);
// Same value via a bottom-to-top sweep with state keyed by boundary
// matchings of the cabled width.
RatFn eval_s3_transfer(const Diagram& d);

// Numeric transfer sweep of a closed, disk-free diagram with A specialized
// to a complex number. Same contraction as eval_s3_transfer with complex
// coefficients; used by the root-of-unity cross-check.
std::complex<double> eval_s3_at(const Diagram& d, const std::complex<double>& a);

// Fusion at every disk gate followed by the Lickorish discard: only fusion
// paths ending in color 0 survive. Gates pierced by a single nonzero color
// contribute nothing.
WeightedDiagrams wormhole_reduce(const Diagram& d,
                                 FusionOrder order = FusionOrder::LeftComb);

// The invariant <G>: wormhole reduction followed by bracket evaluation.
RatFn bracket(const Diagram& d, FusionOrder order = FusionOrder::LeftComb,
              bool use_oracle = false);

}  // namespace wht
