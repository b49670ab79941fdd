#pragma once

#include <string>
#include <vector>

#include "dataset.hpp"
#include "qseries.hpp"
#include "rat.hpp"

namespace m24 {

// A cusp of Gamma_0(N), represented by f/e with e | N (the cusp oo is the
// class of 1/N).  Width and N_c follow from the denominator alone:
// h = N / gcd(e^2, N) and N_c = N / e.
struct CuspData {
  long f = 1, e = 1;
  long width = 1;
  long nc = 1;
  bool infinity = false;

  std::string key() const;   // "f/e", used for the projection tables
  std::string label() const; // "oo" or "f/e"
};

// Cusps of Gamma_0(N)\H for the supported levels, oo first, then by
// increasing denominator.  Each denominator e | N carries
// phi(gcd(e, N/e)) cusps f/e with f coprime to e.
std::vector<CuspData> cusp_set(long N);

// Index of Gamma_0(N) in SL_2(Z).
long gamma0_index(long N);

bool level_supported(long N);       // cusp data + projection matrices + basis
bool basis_level(long N);           // at least a stored echelon basis

long dim_mk(int k, long N);

// A modular form of weight k in {0, 2} as coordinates in the echelon basis
// of M_k(Gamma_0(N)).  Because the basis is in reduced echelon form, the
// coordinates coincide with the first dim Fourier coefficients.
struct ModFormVec {
  int k = 2;
  long N = 1;
  std::vector<Rat> coords;

  bool is_zero() const;
  Rat constant_term() const;
  friend ModFormVec operator+(const ModFormVec& a, const ModFormVec& b);
  friend ModFormVec operator*(const Rat& s, const ModFormVec& a);
  friend bool operator==(const ModFormVec& a, const ModFormVec& b);
};

ModFormVec zero_form(int k, long N);

// Echelon basis element i (0-based) truncated below q^prec.  prec must not
// exceed the embedded data length.
QSeries echelon_basis_element(int k, long N, long i, long prec);
std::vector<QSeries> echelon_basis(int k, long N, long prec);

// q-expansion of a coordinate vector.
QSeries expand(const ModFormVec& v, long prec);

// Coordinates at a level N that M divides, with the full embedded expansion
// checked against the target span.
ModFormVec embed_level(const ModFormVec& v, long target_level);

// Pi_FE(k, N, c) applied to coordinates: the projection of the cusp
// expansion at c onto integral exponents, as a matrix on echelon
// coordinates.  Identity at oo and for k = 0.
ModFormVec pi_fe(const ModFormVec& v, const CuspData& cusp);

// The raw matrix (k = 2 only; identity at oo).
std::vector<std::vector<Rat>> pi_fe_matrix(int k, long N, const CuspData& cusp);

}  // namespace m24
