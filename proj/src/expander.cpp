#include "expander.hpp"

#include <stdexcept>

#include "arith.hpp"

namespace m24 {

namespace {

// Factors of one product layer: (1 - (q1^n zeta^r q2^m)^s)^{e(4nm - r^2)}
// for all (n, r, m) > 0 with s*n, s*m inside the window.
void push_layer_factors(std::vector<Factor3>& factors, long s,
                        const std::map<long, Rat>& disc, const Rat& scale,
                        long bound_n, long bound_m) {
  for (long n = 0; s * n <= bound_n; ++n) {
    for (long m = 0; s * m <= bound_m; ++m) {
      long rb = isqrt(4 * n * m + 1);
      for (long r = -rb; r <= rb; ++r) {
        if (!monomial3_positive(n, r, m)) continue;
        Rat c = scale * disc_lookup(disc, 4 * n * m - r * r);
        if (c == 0) continue;
        factors.push_back({s * n, s * r, s * m, c});
      }
    }
  }
}

}  // namespace

Q3Series expand_phi_power(const std::string& label, long p, long bound_n,
                          long bound_m) {
  const auto& row = class_row(label);
  std::vector<Factor3> factors;
  for (long d : divisors(row.order)) {
    // Layers beyond the window still own their zeta-only factor, so they are
    // never skipped outright.
    auto [m0, m2] = moebius_component(label, d);
    long dmax = std::max(4 * (bound_n / d) * (bound_m / d) + 1, 1L);
    auto disc = disc_table(m0, expand(m2, dmax / 4 + 2), dmax);
    push_layer_factors(factors, d, disc, Rat(p), bound_n, bound_m);
  }
  // Exponents are integral once scaled by p except for the level-23 class
  // data, which leaves rational exponents at positive discriminants; the
  // exp/log expansion handles those exactly, so only zeta-only factors
  // (inside series_log1p_product) insist on integrality.
  return series_log1p_product(factors, bound_n, bound_m).shifted(p, p, p);
}

Q3Series expand_borcherds_side(const std::vector<SolutionRow>& rows, long p,
                               long bound_n, long bound_m) {
  std::vector<Factor3> factors;
  std::array<Rat, 3> shift = {Rat(0), Rat(0), Rat(0)};
  for (const auto& row : rows) {
    JacobiForm01 scaled = Rat(p) * row.phi;
    auto e = borcherds_exponents({row.N, row.n, scaled});
    for (int i = 0; i < 3; ++i) shift[i] += e[i];
    for (const auto& cusp : cusp_set(row.N)) {
      long s = row.n * cusp.nc;
      long span = std::max(bound_n, bound_m);
      long dmax = (s <= span) ? 4 * (bound_n / s) * (bound_m / s) + 1 : 0;
      auto disc = cusp_disc_table(scaled, cusp, std::max(dmax, 1L));
      Rat scale = rat(cusp.width, cusp.nc);
      push_layer_factors(factors, s, disc, scale, bound_n, bound_m);
    }
  }
  Q3Series product = series_log1p_product(factors, bound_n, bound_m);
  // The leading monomial is the summed exponent triple; it must be integral
  // for the expansion to live on the integer lattice.
  return product.shifted(to_integer(shift[0]).get_si(), to_integer(shift[1]).get_si(),
                         to_integer(shift[2]).get_si());
}

long acceptance_bound(const std::string& label) {
  const auto& row = class_row(label);
  long smallest = 0;
  for (long d : divisors(row.order))
    if (d > 1) {
      smallest = d;
      break;
    }
  return std::max(3L, smallest);
}

}  // namespace m24
