#include "numverify.hpp"

#include <cmath>
#include <stdexcept>

namespace m24 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> to_double(const Rat& x) {
  return {mpq_get_d(x.get_mpq_t()), 0.0};
}

}  // namespace

std::complex<double> eval_series(const QSeries& f, std::complex<double> tau,
                                 long terms) {
  if (tau.imag() <= 0) throw std::domain_error("evaluation point must satisfy Im > 0");
  std::complex<double> s(0.0, 0.0);
  long h = f.lattice();
  long count = 0;
  for (const auto& [key, c] : f.terms()) {
    if (++count > terms) break;
    std::complex<double> expo(0.0, kTwoPi * static_cast<double>(key) / h);
    s += to_double(c) * std::exp(expo * tau);
  }
  return s;
}

double verify_projection(int k, long N, const CuspData& cusp, long terms) {
  long prec = std::min(dataset().qterms, terms);
  auto basis = echelon_basis(k, N, prec);
  double max_residual = 0.0;
  if (cusp.infinity) {
    // Identity path: the claimed image is the basis element itself.
    return 0.0;
  }
  long e = cusp.e, h = cusp.width;
  // Evaluation point: the translates tau + j map under gamma = (1 0; e 1) to
  // e(tau+j) + 1 in the denominator; centering them around the pole keeps
  // every image high in the upper half plane.
  double y;
  double x;
  if (h == 1) {
    x = -1.0 / e;
    y = 2.0 / (static_cast<double>(e) * e);
  } else {
    x = -(static_cast<double>(h - 1) / 2 + 1.0 / e);
    y = static_cast<double>(h - 1) / 2 + 0.25;
  }
  std::complex<double> tau(x + 0.0137, y);  // fixed off-center nudge

  for (long i = 0; i < dim_mk(k, N); ++i) {
    ModFormVec v = zero_form(k, N);
    v.coords[i] = 1;
    QSeries f = expand(v, prec);
    QSeries image = expand(pi_fe(v, cusp), prec);

    std::complex<double> average(0.0, 0.0);
    for (long j = 0; j < h; ++j) {
      std::complex<double> w = tau + std::complex<double>(static_cast<double>(j), 0.0);
      std::complex<double> den = static_cast<double>(e) * w + 1.0;
      std::complex<double> gw = w / den;
      // Centering the translates puts every image at height >= 1/(e^2 (h-1));
      // at T = 128 terms that still leaves the truncation tail far below the
      // tolerance (|q| <= 0.76 for the widest cusp in the tables).
      if (gw.imag() < 0.04)
        throw std::domain_error("transformed sample too close to the real line");
      average += eval_series(f, gw, terms) / std::pow(den, k);
    }
    average /= static_cast<double>(h);
    double residual = std::abs(average - eval_series(image, tau, terms));
    max_residual = std::max(max_residual, residual);
  }
  return max_residual;
}

double verify_modularity(int k, long N, long terms) {
  long prec = std::min(dataset().qterms, terms);
  double max_residual = 0.0;
  // gamma = (1 + j N, j; N, 1) runs over small elements with c = N; tau sits
  // on |N tau + d| = 1 so that tau and gamma tau have equal height.
  const double thetas[] = {1.15, 1.57, 2.0};
  for (long i = 0; i < dim_mk(k, N); ++i) {
    ModFormVec v = zero_form(k, N);
    v.coords[i] = 1;
    QSeries f = expand(v, prec);
    int which = 0;
    for (long j : {0L, 1L, 2L}) {
      double a = 1.0 + static_cast<double>(j) * N, b = j, c = N, d = 1.0;
      double theta = thetas[which++ % 3];
      std::complex<double> unit(std::cos(theta), std::sin(theta));
      std::complex<double> tau = (unit - d) / c;
      std::complex<double> den = c * tau + d;
      std::complex<double> gtau = (a * tau + b) / den;
      std::complex<double> lhs = eval_series(f, gtau, terms);
      std::complex<double> rhs = std::pow(den, k) * eval_series(f, tau, terms);
      max_residual = std::max(max_residual, std::abs(lhs - rhs));
    }
  }
  return max_residual;
}

std::vector<ResidualReport> numverify_all(long terms, double tol_proj, double tol_mod) {
  std::vector<ResidualReport> out;
  for (long N : dataset().full_levels) {
    for (const auto& cusp : cusp_set(N)) {
      if (cusp.infinity) continue;
      if (dim_mk(2, N) == 0) continue;
      ResidualReport r;
      r.what = "Pi_FE(2, " + std::to_string(N) + ", " + cusp.label() + ")";
      r.residual = verify_projection(2, N, cusp, terms);
      r.tolerance = tol_proj;
      r.ok = r.residual < tol_proj;
      out.push_back(r);
    }
  }
  for (long N : dataset().levels) {
    if (dim_mk(2, N) == 0) continue;
    ResidualReport r;
    r.what = "modularity of the M_2(" + std::to_string(N) + ") basis";
    r.residual = verify_modularity(2, N, terms);
    r.tolerance = tol_mod;
    r.ok = r.residual < tol_mod;
    out.push_back(r);
  }
  return out;
}

}  // namespace m24
