#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "numverify.hpp"

using namespace m24;

namespace {

const CuspData& cusp_by_label(long N, const std::string& label) {
  static std::vector<CuspData> cusps;
  cusps = cusp_set(N);
  for (const auto& c : cusps)
    if (c.label() == label) return c;
  throw std::runtime_error("no such cusp");
}

}  // namespace

TEST_CASE("eval_series basics") {
  QSeries one = QSeries::one(Rat(4));
  std::complex<double> tau(0.3, 1.1);
  CHECK(std::abs(eval_series(one, tau, 16) - std::complex<double>(1.0, 0.0)) < 1e-15);

  // q at tau = i is e^{-2 pi}
  QSeries q = QSeries::monomial(Rat(1), 1, 1, Rat(4));
  std::complex<double> qi = eval_series(q, {0.0, 1.0}, 4);
  CHECK(std::abs(qi - std::complex<double>(std::exp(-2 * M_PI), 0.0)) < 1e-15);

  // partial-sum oracle for a basis element
  QSeries f = echelon_basis_element(2, 2, 0, 64);
  std::complex<double> tau2(0.0, 2.0);
  std::complex<double> direct(0.0, 0.0);
  for (long n = 0; n < 64; ++n) {
    double c = mpq_get_d(f.coeff_int(n).get_mpq_t());
    direct += c * std::exp(std::complex<double>(0, 2 * M_PI * n) * tau2);
  }
  CHECK(std::abs(eval_series(f, tau2, 64) - direct) < 1e-12);
}

TEST_CASE("projection residuals are tiny at every tabulated matrix") {
  CHECK(verify_projection(2, 2, cusp_by_label(2, "oo"), 128) == 0.0);
  CHECK(verify_projection(2, 2, cusp_by_label(2, "0"), 128) < 1e-8);
  CHECK(verify_projection(2, 8, cusp_by_label(8, "1/2"), 128) < 1e-8);
  CHECK(verify_projection(2, 8, cusp_by_label(8, "1/4"), 128) < 1e-8);
  CHECK(verify_projection(2, 23, cusp_by_label(23, "0"), 128) < 1e-8);
}

TEST_CASE("modularity residuals validate the embedded bases") {
  CHECK(verify_modularity(2, 11, 128) < 1e-7);  // eta product row included
  CHECK(verify_modularity(2, 23, 128) < 1e-7);  // the theta-derived cusp forms
  CHECK(verify_modularity(2, 8, 128) < 1e-7);
}

TEST_CASE("residuals shrink as the truncation grows") {
  // level 23 has the slowest-converging sample points, so the T = 64
  // residual sits well above the double-precision floor
  double r64 = verify_modularity(2, 23, 64);
  double r128 = verify_modularity(2, 23, 128);
  CHECK(r64 > 0.0);
  CHECK(r128 / r64 < 1.0);
}

TEST_CASE("full sweep stays under tolerance") {
  auto reports = numverify_all(128);
  CHECK(reports.size() > 10);
  for (const auto& r : reports) CHECK_MESSAGE(r.ok, r.what);
}
