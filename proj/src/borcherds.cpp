#include "borcherds.hpp"

#include <numeric>
#include <stdexcept>

namespace m24 {

EVector borcherds_evector(const BorcherdsSpec& spec) {
  if (spec.phi.level != spec.N)
    throw std::invalid_argument("Jacobi form level does not match the base level");
  if (spec.n < 1) throw std::invalid_argument("rescaling must be >= 1");
  EVector e;
  e.comparison_level = spec.N;
  for (const auto& cusp : cusp_set(spec.N)) {
    Rat scale = rat(cusp.width, cusp.nc);
    long d = spec.n * cusp.nc;
    auto [tc0, tc2] = cusp_taylor_pair(spec.phi, cusp);
    auto it = e.entries.find(d);
    if (it == e.entries.end()) {
      e.entries.emplace(d, std::make_pair(scale * tc0, scale * tc2));
    } else {
      it->second.first += scale * tc0;
      it->second.second = it->second.second + scale * tc2;
    }
  }
  return e;
}

std::array<Rat, 3> borcherds_exponents(const BorcherdsSpec& spec) {
  Rat e_q1(0), e_zeta(0);
  for (const auto& cusp : cusp_set(spec.N)) {
    auto [tc0, tc2] = cusp_taylor_pair(spec.phi, cusp);
    e_q1 += Rat(cusp.width) * tc0;
    e_zeta += Rat(cusp.width) * (tc0 / 12 + tc2.constant_term());
  }
  e_q1 *= rat(spec.n, 24);
  e_zeta *= rat(spec.n, 2);
  return {e_q1, e_zeta, e_zeta};
}

Rat borcherds_weight(long N, const JacobiForm01& phi) {
  if (phi.level != N)
    throw std::invalid_argument("Jacobi form level does not match the base level");
  Rat k(0);
  for (const auto& cusp : cusp_set(N)) {
    auto [tc0, tc2] = cusp_taylor_pair(phi, cusp);
    Rat c0 = rat(10, 12) * tc0 - 2 * tc2.constant_term();
    k += rat(cusp.width, cusp.nc) * c0;
  }
  return k / 2;
}

long minimal_power(const std::vector<BorcherdsSpec>& specs, long) {
  // The theorem's hypothesis constrains Delta <= 0 only, i.e. Delta in
  // {-1, 0} for weak index-1 forms.
  Int p(1);
  for (const auto& spec : specs) {
    for (const auto& cusp : cusp_set(spec.N)) {
      auto table = cusp_disc_table(spec.phi, cusp, 0);
      Rat scale = rat(cusp.width, cusp.nc);
      for (long d : {-1L, 0L}) {
        Rat v = scale * disc_lookup(table, d);
        p = lcm(p, Int(v.get_den()));
      }
    }
  }
  if (!p.fits_slong_p()) throw std::overflow_error("minimal power out of range");
  return p.get_si();
}

Int window_denominator(const std::vector<BorcherdsSpec>& specs, long p,
                       long window_dmax) {
  Int extra(1);
  for (const auto& spec : specs) {
    for (const auto& cusp : cusp_set(spec.N)) {
      auto table = cusp_disc_table(spec.phi, cusp, window_dmax);
      Rat scale = rat(cusp.width, cusp.nc);
      for (const auto& [d, c] : table) {
        Rat v = Rat(p) * scale * c;
        extra = lcm(extra, Int(v.get_den()));
      }
    }
  }
  return extra;
}

}  // namespace m24
