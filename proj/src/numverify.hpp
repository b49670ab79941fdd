#pragma once

#include <complex>
#include <string>
#include <vector>

#include "modforms.hpp"
#include "qseries.hpp"

namespace m24 {

// Numerical validation of the embedded data: the projection matrices by
// averaging over translates of the slash action, the bases by checking the
// weight-2 transformation law directly.  Double precision throughout; the
// evaluation points are fixed per cusp/level so runs are reproducible.

// sum of the first `terms` stored terms of f at tau (Im tau > 0).
std::complex<double> eval_series(const QSeries& f, std::complex<double> tau,
                                 long terms);

// Max residual over the echelon basis of
//   (1/h_c) sum_{j mod h_c} (f |_2 gamma)(tau + j)  vs  the claimed
//   Pi_FE(2, N, c)-image evaluated at tau,
// with gamma = (1 0; e 1).  The evaluation point is chosen so every
// transformed point has Im >= 0.2; exact identity path at oo.
double verify_projection(int k, long N, const CuspData& cusp, long terms);

// Max residual of f(gamma tau) - (c tau + d)^k f(tau) over the echelon basis
// and a few small gamma in Gamma_0(N), evaluated on the isometric circle
// |c tau + d| = 1 where both sides converge equally fast.
double verify_modularity(int k, long N, long terms);

struct ResidualReport {
  std::string what;
  double residual = 0.0;
  double tolerance = 0.0;
  bool ok = false;
};

// Appendix-style full sweep: every stored projection matrix at tol_proj, and
// every stored basis at tol_mod.
std::vector<ResidualReport> numverify_all(long terms = 128, double tol_proj = 1e-8,
                                          double tol_mod = 1e-7);

}  // namespace m24
