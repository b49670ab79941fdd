#pragma once

#include <array>
#include <vector>

#include "jacobi.hpp"
#include "moonshine.hpp"

namespace m24 {

// A rescaled Borcherds product B_N[phi, n]: base level N, weak Jacobi form
// phi of weight 0 and index 1 at level N, rescaling n, total level nN.
struct BorcherdsSpec {
  long N = 1;
  long n = 1;
  JacobiForm01 phi;
};

// E(B_N[phi, n])(d) = sum over cusps with N_c = d/n of
// (h_c/N_c) (tc0, Pi_FE(2, N, c) tc2), at comparison level N.
EVector borcherds_evector(const BorcherdsSpec& spec);

// (e_{q1}, e_zeta, e_{q2}); for weak index-1 forms only l in {0, +-1}
// contribute, so e_{q1} = (n/24) sum_c h_c tc0 and
// e_zeta = e_{q2} = (n/2) sum_c h_c (tc0/12 + const(Pi_FE tc2)).
std::array<Rat, 3> borcherds_exponents(const BorcherdsSpec& spec);

// k = (1/2) sum_c (h_c/N_c) c(phi_c; 0), with the discriminant-0 coefficient
// assembled from the generator tables: (10/12) tc0 - 2 const(Pi_FE tc2).
Rat borcherds_weight(long N, const JacobiForm01& phi);

// Smallest p >= 1 making p (h_c/N_c) c(phi_c; Delta) integral for all specs,
// cusps, and Delta <= 0 (i.e. Delta in {-1, 0} for weak forms).
long minimal_power(const std::vector<BorcherdsSpec>& specs, long window_dmax = 37);

// Extra denominator (1 when everything is integral) that the exponents
// p (h_c/N_c) c(phi_c; Delta) still carry on the positive part of the
// coefficient window.  The level-23 class data is the one known source of
// a nontrivial value; the expansion identity itself is insensitive to it.
Int window_denominator(const std::vector<BorcherdsSpec>& specs, long p,
                       long window_dmax = 37);

}  // namespace m24
