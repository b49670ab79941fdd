#pragma once

#include <string>
#include <vector>

#include "borcherds.hpp"
#include "q3series.hpp"
#include "solver.hpp"

namespace m24 {

// Truncated expansion of Phi_g^p over the window (bound_n, bound_m):
// (q1 zeta q2)^p prod_{d | n_g} prod_{(n,r,m)>0}
//   (1 - (q1^n zeta^r q2^m)^d)^{p c_{g,d}(4nm - r^2)}.
// Exponents are exact rationals; zeta-only factors must merge to nonnegative
// integers (std::domain_error otherwise, the sign that p is too small).
Q3Series expand_phi_power(const std::string& label, long p, long bound_n, long bound_m);

// Truncated expansion of prod_i B_{N_i}[p phi_i, n_i] over the same window:
// each row contributes cusp factors scaled by n_i N_c with exponents
// p (h_c/N_c) c(phi_c; 4nm - r^2), behind the summed leading monomial.
Q3Series expand_borcherds_side(const std::vector<SolutionRow>& rows, long p,
                               long bound_n, long bound_m);

// The per-class window used by the acceptance checks: at least 3, and large
// enough that the smallest nontrivial divisor layer contributes factors.
long acceptance_bound(const std::string& label);

}  // namespace m24
