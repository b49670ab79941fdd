#include "modforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arith.hpp"

namespace m24 {

std::string CuspData::key() const { return std::to_string(f) + "/" + std::to_string(e); }

std::string CuspData::label() const {
  if (infinity) return "oo";
  if (e == 1) return std::to_string(f);
  return key();
}

bool level_supported(long N) {
  const auto& fl = dataset().full_levels;
  return std::find(fl.begin(), fl.end(), N) != fl.end();
}

bool basis_level(long N) {
  return dataset().bases_k2.count(N) > 0;
}

std::vector<CuspData> cusp_set(long N) {
  if (!level_supported(N))
    throw std::invalid_argument("unsupported level " + std::to_string(N));
  std::vector<CuspData> cusps;
  for (long e : divisors(N)) {
    long g = std::gcd(e, N / e);
    for (long f0 = 0; f0 < g; ++f0) {
      // Smallest nonnegative representative of f0 mod g coprime to e.
      long rep = -1;
      for (long f = f0; f <= f0 + e * g; f += g) {
        if (std::gcd(f, e) == 1) {
          rep = f;
          break;
        }
      }
      if (rep < 0) continue;
      CuspData c;
      c.f = rep;
      c.e = e;
      c.width = N / std::gcd(e * e, N);
      c.nc = N / e;
      c.infinity = (e == N);
      cusps.push_back(c);
    }
  }
  // oo first, then by increasing denominator and numerator.
  std::sort(cusps.begin(), cusps.end(), [](const CuspData& a, const CuspData& b) {
    if (a.infinity != b.infinity) return a.infinity;
    if (a.e != b.e) return a.e < b.e;
    return a.f < b.f;
  });
  return cusps;
}

long gamma0_index(long N) {
  long idx = N;
  long n = N;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    idx = idx / p * (p + 1);
    while (n % p == 0) n /= p;
  }
  if (n > 1) idx = idx / n * (n + 1);
  return idx;
}

long dim_mk(int k, long N) {
  if (k == 0) return 1;
  if (k == 2) {
    auto it = dataset().bases_k2.find(N);
    if (it == dataset().bases_k2.end())
      throw std::invalid_argument("no stored basis for level " + std::to_string(N));
    return static_cast<long>(it->second.size());
  }
  throw std::invalid_argument("only weights 0 and 2 are supported");
}

bool ModFormVec::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Rat ModFormVec::constant_term() const {
  // Echelon normalization: the first coordinate is the 0th Fourier
  // coefficient.
  return coords.empty() ? Rat(0) : coords[0];
}

ModFormVec operator+(const ModFormVec& a, const ModFormVec& b) {
  if (a.k != b.k || a.N != b.N)
    throw std::invalid_argument("modular form addition across spaces");
  ModFormVec r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

ModFormVec operator*(const Rat& s, const ModFormVec& a) {
  ModFormVec r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

bool operator==(const ModFormVec& a, const ModFormVec& b) {
  return a.k == b.k && a.N == b.N && a.coords == b.coords;
}

ModFormVec zero_form(int k, long N) {
  ModFormVec v;
  v.k = k;
  v.N = N;
  v.coords.assign(dim_mk(k, N), Rat(0));
  return v;
}

QSeries echelon_basis_element(int k, long N, long i, long prec) {
  if (k == 0) {
    if (i != 0) throw std::out_of_range("M_0 is one-dimensional");
    return QSeries::one(Rat(prec));
  }
  if (k != 2) throw std::invalid_argument("only weights 0 and 2 are supported");
  const auto& rows = dataset().bases_k2.at(N);
  if (i < 0 || i >= static_cast<long>(rows.size()))
    throw std::out_of_range("basis index out of range");
  if (prec > dataset().qterms)
    throw std::out_of_range("requested precision exceeds embedded data length");
  QSeries f = QSeries::zero(1, Rat(prec));
  for (long n = 0; n < prec; ++n) f.set_coeff(Rat(n), rows[i][n]);
  return f;
}

std::vector<QSeries> echelon_basis(int k, long N, long prec) {
  std::vector<QSeries> out;
  for (long i = 0; i < dim_mk(k, N); ++i)
    out.push_back(echelon_basis_element(k, N, i, prec));
  return out;
}

QSeries expand(const ModFormVec& v, long prec) {
  QSeries f = QSeries::zero(1, Rat(prec));
  if (v.k == 0) {
    if (!v.coords.empty() && v.coords[0] != 0) f.set_coeff(Rat(0), v.coords[0]);
    return f;
  }
  const auto& rows = dataset().bases_k2.at(v.N);
  if (v.coords.size() != rows.size())
    throw std::invalid_argument("coordinate length does not match the space dimension");
  if (prec > dataset().qterms)
    throw std::out_of_range("requested precision exceeds embedded data length");
  for (long n = 0; n < prec; ++n) {
    Rat c(0);
    for (size_t i = 0; i < rows.size(); ++i)
      if (v.coords[i] != 0) c += v.coords[i] * rows[i][n];
    if (c != 0) f.set_coeff(Rat(n), c);
  }
  return f;
}

ModFormVec embed_level(const ModFormVec& v, long target_level) {
  if (target_level % v.N)
    throw std::invalid_argument("embedding target must be a multiple of the level");
  if (v.k == 0 || v.N == target_level) {
    ModFormVec r = v;
    r.N = target_level;
    return r;
  }
  long qterms = dataset().qterms;
  QSeries f = expand(v, qterms);
  long d = dim_mk(2, target_level);
  ModFormVec r;
  r.k = 2;
  r.N = target_level;
  for (long i = 0; i < d; ++i) r.coords.push_back(f.coeff_int(i));
  // The echelon coordinates are the leading coefficients; the rest of the
  // expansion must then agree, otherwise the form does not lie in the span.
  QSeries g = expand(r, qterms);
  if (!agree(f, g))
    throw std::runtime_error("embedding failure: expansion not in the target span");
  return r;
}

std::vector<std::vector<Rat>> pi_fe_matrix(int k, long N, const CuspData& cusp) {
  long d = dim_mk(k, N);
  if (cusp.infinity || k == 0) {
    std::vector<std::vector<Rat>> id(d, std::vector<Rat>(d, Rat(0)));
    for (long i = 0; i < d; ++i) id[i][i] = 1;
    return id;
  }
  const auto& by_level = dataset().pi_fe_k2;
  auto lvl = by_level.find(N);
  if (lvl == by_level.end())
    throw std::invalid_argument("no projection matrices for level " + std::to_string(N));
  auto it = lvl->second.find(cusp.key());
  if (it == lvl->second.end())
    throw std::invalid_argument("no projection matrix for cusp " + cusp.key() +
                                " at level " + std::to_string(N));
  return it->second;
}

ModFormVec pi_fe(const ModFormVec& v, const CuspData& cusp) {
  if (cusp.infinity || v.k == 0) return v;
  auto m = pi_fe_matrix(v.k, v.N, cusp);
  ModFormVec r = zero_form(v.k, v.N);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0 && v.coords[j] != 0) r.coords[i] += m[i][j] * v.coords[j];
  return r;
}

}  // namespace m24
