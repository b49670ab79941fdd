#pragma once

#include <map>
#include <utility>

#include "modforms.hpp"
#include "qseries.hpp"
#include "qzseries.hpp"
#include "rat.hpp"

namespace m24 {

// A weak Jacobi form of weight 0 and index 1 on Gamma_0(N), stored as its
// Taylor pair: phi = tc0 * phi_{0,1}/12 + tc2 * phi_{-2,1}.  tc0 is the
// coordinate in the one-dimensional M_0(N), so it equals chi(g) for the
// twisted genera without any extra factor of 12.
struct JacobiForm01 {
  long level = 1;
  Rat tc0;
  ModFormVec tc2;  // weight 2 at `level`

  friend JacobiForm01 operator+(const JacobiForm01& a, const JacobiForm01& b);
  friend JacobiForm01 operator*(const Rat& s, const JacobiForm01& a);
};

enum class Generator { phi_0_1, phi_m2_1 };

// Integer Fourier coefficients c(4n - r^2) of the index-1 generators, keyed
// by discriminant; weak forms, so c(D) = 0 below D = -1.  Computed from the
// Jacobi theta closed forms: phi_{-2,1} as the squared odd theta over eta^6
// and phi_{0,1} as four times the sum of the three even theta-quotient
// squares.
std::map<long, Int> generator_coeffs(Generator which, long d_max);

// Coefficient lookup with the weak support convention (0 off-support).
Int generator_coeff(Generator which, long d);

// Full Fourier expansion sum c(n, r) q^n zeta^r of phi up to q^{n_max}.
QZSeries fourier_qz(const JacobiForm01& phi, long n_max);

// Taylor pair of the projected cusp expansion: tc0 is constant across cusps,
// tc2 projects through Pi_FE(2, N, c).
std::pair<Rat, ModFormVec> cusp_taylor_pair(const JacobiForm01& phi,
                                            const CuspData& cusp);

// Discriminant-indexed coefficients c(phi_c; D) for -1 <= D <= d_max,
// assembled from the generator tables and the projected tc2 expansion.
std::map<long, Rat> cusp_disc_table(const JacobiForm01& phi, const CuspData& cusp,
                                    long d_max);

// Same, from an explicit Taylor pair given by a q-expansion of the
// weight-2 part.
std::map<long, Rat> disc_table(const Rat& tc0, const QSeries& tc2_expansion,
                               long d_max);

inline Rat disc_lookup(const std::map<long, Rat>& table, long d) {
  auto it = table.find(d);
  return it == table.end() ? Rat(0) : it->second;
}

}  // namespace m24
