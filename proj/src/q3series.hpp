#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rat.hpp"

namespace m24 {

// Dense Laurent polynomial in zeta.
struct ZPoly {
  long rmin = 0;
  std::vector<Rat> c;  // c[i] multiplies zeta^{rmin + i}

  bool is_zero() const { return c.empty(); }
  Rat coeff(long r) const;
  void add(long r, const Rat& v);
  void trim();
};

// dst += scale * a * b
void zp_addmul(ZPoly& dst, const ZPoly& a, const ZPoly& b, const Rat& scale);

// Truncated three-variable expansion in (q1, zeta, q2).  Stored per
// (q1, q2)-cell as a Laurent polynomial in zeta; the window covers relative
// degrees 0..bound_n in q1 and 0..bound_m in q2 on top of a global monomial
// offset (off_n, off_r, off_m), so a leading factor like (q1 zeta q2)^p is
// an offset, not data.  zeta degrees are unconstrained (they stay finite for
// every product of admissible factors).
class Q3Series {
 public:
  Q3Series() : bound_n_(0), bound_m_(0) {}
  Q3Series(long bound_n, long bound_m);

  static Q3Series one(long bound_n, long bound_m);

  long bound_n() const { return bound_n_; }
  long bound_m() const { return bound_m_; }
  long off_n() const { return off_n_; }
  long off_r() const { return off_r_; }
  long off_m() const { return off_m_; }

  // Coefficient at absolute exponents (n, r, m).
  Rat coeff(long n, long r, long m) const;
  // Accumulate at window-relative exponents.
  void add_term_rel(long n, long r, long m, const Rat& v);

  Q3Series shifted(long dn, long dr, long dm) const;

  friend Q3Series operator+(const Q3Series& f, const Q3Series& g);
  friend Q3Series operator*(const Q3Series& f, const Q3Series& g);

  const std::map<std::pair<long, long>, ZPoly>& cells() const { return cells_; }
  ZPoly& cell(long n, long m) { return cells_[{n, m}]; }
  void prune();

  struct Mismatch {
    long n, r, m;
    Rat lhs, rhs;
  };

  // Exact comparison over the full stored window.  Requires identical
  // bounds and offsets (throws std::invalid_argument otherwise); returns the
  // first differing exponent in (n, m, r) order, or nullopt when equal.
  friend std::optional<Mismatch> compare(const Q3Series& a, const Q3Series& b);

 private:
  long bound_n_, bound_m_;
  long off_n_ = 0, off_r_ = 0, off_m_ = 0;
  std::map<std::pair<long, long>, ZPoly> cells_;
};

struct Factor3 {
  long n, r, m;  // monomial x = q1^n zeta^r q2^m
  Rat c;         // factor (1 - x)^c
};

// Truncated expansion of prod_i (1 - x_i)^{c_i} over the window
// (bound_n, bound_m), computed as exp(sum c_i log(1 - x_i)).
//
// Every monomial must be positive in the lexicographic sense n > 0, or
// n == 0 and m > 0, or n == m == 0 and r < 0; otherwise the product has no
// formal expansion and the factor is rejected.  Factors in zeta alone are
// multiplied out binomially, which requires their merged exponents to be
// nonnegative integers.
Q3Series series_log1p_product(const std::vector<Factor3>& factors, long bound_n,
                              long bound_m);

bool monomial3_positive(long n, long r, long m);

}  // namespace m24
