#pragma once

#include <utility>
#include <vector>

#include "wht/tl.hpp"

namespace wht {

struct AdmissibleTriple {
  int a = 0, b = 0, c = 0;
  bool ok() const;
};

// Parity + triangle test; exactly the constructibility of a trivalent vertex.
bool is_admissible(int a, int b, int c);

// Loop value of an n-colored unknot. Closed form, oracle-checked in tests
// against closure_value(jones_wenzl(n)).
const RatFn& quantum_delta(int n);

// Theta graph with edge colors a, b, c. Throws InadmissibleTriple.
const RatFn& theta_net(int a, int b, int c);

// All admissible c with Delta_c / theta(a, b, c).
std::vector<std::pair<int, RatFn>> fusion_coefficients(int a, int b);

// Scalar by which a positive kink multiplies an n-colored edge; defined as
// the bracket of a kinked n-colored unknot divided by Delta_n.
const RatFn& twist_coefficient(int n);

// Crossingless vertex matching from c bottom points to a+b top points,
// with internal strand counts (a+c-b)/2, (b+c-a)/2 and (a+b-c)/2 turn-backs.
Matching vertex_matching(int a, int b, int c);
// Projector-decorated vertex: c -> a+b resp. a+b -> c.
TLElement vertex_up(int a, int b, int c);
TLElement vertex_down(int a, int b, int c);

}  // namespace wht
