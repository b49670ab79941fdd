#include "q3series.hpp"

#include <stdexcept>

namespace m24 {

Rat ZPoly::coeff(long r) const {
  long i = r - rmin;
  if (i < 0 || i >= static_cast<long>(c.size())) return Rat(0);
  return c[i];
}

void ZPoly::add(long r, const Rat& v) {
  if (v == 0) return;
  if (c.empty()) {
    rmin = r;
    c.emplace_back(v);
    return;
  }
  if (r < rmin) {
    c.insert(c.begin(), rmin - r, Rat(0));
    rmin = r;
  } else if (r >= rmin + static_cast<long>(c.size())) {
    c.resize(r - rmin + 1, Rat(0));
  }
  c[r - rmin] += v;
}

void ZPoly::trim() {
  size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  size_t tail = c.size();
  while (tail > lead && c[tail - 1] == 0) --tail;
  if (lead == tail) {
    c.clear();
    rmin = 0;
    return;
  }
  if (lead > 0) c.erase(c.begin(), c.begin() + lead);
  c.resize(tail - lead);
  rmin += static_cast<long>(lead);
}

void zp_addmul(ZPoly& dst, const ZPoly& a, const ZPoly& b, const Rat& scale) {
  if (a.c.empty() || b.c.empty() || scale == 0) return;
  long lo = a.rmin + b.rmin;
  long hi = lo + static_cast<long>(a.c.size() + b.c.size()) - 2;
  if (dst.c.empty()) {
    dst.rmin = lo;
    dst.c.assign(hi - lo + 1, Rat(0));
  } else {
    if (lo < dst.rmin) {
      dst.c.insert(dst.c.begin(), dst.rmin - lo, Rat(0));
      dst.rmin = lo;
    }
    if (hi >= dst.rmin + static_cast<long>(dst.c.size()))
      dst.c.resize(hi - dst.rmin + 1, Rat(0));
  }
  std::vector<Rat> sa(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) sa[i] = scale * a.c[i];
  static thread_local Rat scratch;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (sa[i] == 0) continue;
    long base = a.rmin + static_cast<long>(i) + b.rmin - dst.rmin;
    mpq_srcptr lhs = sa[i].get_mpq_t();
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      mpq_mul(scratch.get_mpq_t(), lhs, b.c[j].get_mpq_t());
      mpq_ptr d = dst.c[base + j].get_mpq_t();
      mpq_add(d, d, scratch.get_mpq_t());
    }
  }
}

Q3Series::Q3Series(long bound_n, long bound_m) : bound_n_(bound_n), bound_m_(bound_m) {
  if (bound_n < 0 || bound_m < 0)
    throw std::invalid_argument("window bounds must be >= 0");
}

Q3Series Q3Series::one(long bound_n, long bound_m) {
  Q3Series f(bound_n, bound_m);
  f.cells_[{0, 0}].add(0, Rat(1));
  return f;
}

Rat Q3Series::coeff(long n, long r, long m) const {
  long rn = n - off_n_, rm = m - off_m_;
  if (rn < 0 || rn > bound_n_ || rm < 0 || rm > bound_m_)
    throw std::out_of_range("exponent outside stored window");
  auto it = cells_.find({rn, rm});
  if (it == cells_.end()) return Rat(0);
  return it->second.coeff(r - off_r_);
}

void Q3Series::add_term_rel(long n, long r, long m, const Rat& v) {
  if (n < 0 || n > bound_n_ || m < 0 || m > bound_m_)
    throw std::out_of_range("exponent outside stored window");
  cells_[{n, m}].add(r, v);
}

Q3Series Q3Series::shifted(long dn, long dr, long dm) const {
  Q3Series f = *this;
  f.off_n_ += dn;
  f.off_r_ += dr;
  f.off_m_ += dm;
  return f;
}

void Q3Series::prune() {
  for (auto it = cells_.begin(); it != cells_.end();) {
    it->second.trim();
    it = it->second.is_zero() ? cells_.erase(it) : std::next(it);
  }
}

Q3Series operator+(const Q3Series& f, const Q3Series& g) {
  if (f.off_n_ != g.off_n_ || f.off_r_ != g.off_r_ || f.off_m_ != g.off_m_)
    throw std::invalid_argument("offset mismatch in Q3Series addition");
  Q3Series r(std::min(f.bound_n_, g.bound_n_), std::min(f.bound_m_, g.bound_m_));
  r.off_n_ = f.off_n_;
  r.off_r_ = f.off_r_;
  r.off_m_ = f.off_m_;
  for (const auto* src : {&f, &g})
    for (const auto& [nm, zp] : src->cells_) {
      if (nm.first > r.bound_n_ || nm.second > r.bound_m_) continue;
      for (size_t i = 0; i < zp.c.size(); ++i)
        r.cells_[nm].add(zp.rmin + static_cast<long>(i), zp.c[i]);
    }
  r.prune();
  return r;
}

Q3Series operator*(const Q3Series& f, const Q3Series& g) {
  Q3Series r(std::min(f.bound_n_, g.bound_n_), std::min(f.bound_m_, g.bound_m_));
  r.off_n_ = f.off_n_ + g.off_n_;
  r.off_r_ = f.off_r_ + g.off_r_;
  r.off_m_ = f.off_m_ + g.off_m_;
  static const Rat kOne(1);
  for (const auto& [nm1, zp1] : f.cells_) {
    if (nm1.first > r.bound_n_ || nm1.second > r.bound_m_) continue;
    for (const auto& [nm2, zp2] : g.cells_) {
      long n = nm1.first + nm2.first, m = nm1.second + nm2.second;
      if (n > r.bound_n_ || m > r.bound_m_) continue;
      zp_addmul(r.cells_[{n, m}], zp1, zp2, kOne);
    }
  }
  r.prune();
  return r;
}

std::optional<Q3Series::Mismatch> compare(const Q3Series& a, const Q3Series& b) {
  if (a.bound_n_ != b.bound_n_ || a.bound_m_ != b.bound_m_ ||
      a.off_n_ != b.off_n_ || a.off_r_ != b.off_r_ || a.off_m_ != b.off_m_)
    throw std::invalid_argument("Q3Series comparison needs identical bounds");
  for (long n = 0; n <= a.bound_n_; ++n) {
    for (long m = 0; m <= a.bound_m_; ++m) {
      auto ia = a.cells_.find({n, m});
      auto ib = b.cells_.find({n, m});
      long lo = 0, hi = -1;
      if (ia != a.cells_.end() && !ia->second.c.empty()) {
        lo = ia->second.rmin;
        hi = ia->second.rmin + static_cast<long>(ia->second.c.size()) - 1;
      }
      if (ib != b.cells_.end() && !ib->second.c.empty()) {
        long lo2 = ib->second.rmin;
        long hi2 = ib->second.rmin + static_cast<long>(ib->second.c.size()) - 1;
        if (hi < lo) {
          lo = lo2;
          hi = hi2;
        } else {
          lo = std::min(lo, lo2);
          hi = std::max(hi, hi2);
        }
      }
      for (long rr = lo; rr <= hi; ++rr) {
        Rat ca = ia == a.cells_.end() ? Rat(0) : ia->second.coeff(rr);
        Rat cb = ib == b.cells_.end() ? Rat(0) : ib->second.coeff(rr);
        if (ca != cb)
          return Q3Series::Mismatch{n + a.off_n_, rr + a.off_r_, m + a.off_m_, ca, cb};
      }
    }
  }
  return std::nullopt;
}

bool monomial3_positive(long n, long r, long m) {
  if (n > 0) return true;
  if (n == 0 && m > 0) return true;
  return n == 0 && m == 0 && r < 0;
}

namespace {

// (1 - zeta^r)^e for integer e >= 0, as a ZPoly.
ZPoly zeta_binomial(long r, const Int& e) {
  if (e < 0) throw std::domain_error("negative zeta-only exponent");
  if (!e.fits_slong_p()) throw std::overflow_error("zeta-only exponent too large");
  long ee = e.get_si();
  ZPoly p;
  p.add(0, Rat(1));
  for (long k = 0; k < ee; ++k) {
    ZPoly q;
    for (size_t i = 0; i < p.c.size(); ++i) {
      long rr = p.rmin + static_cast<long>(i);
      q.add(rr, p.c[i]);
      q.add(rr + r, -p.c[i]);
    }
    q.trim();
    p = std::move(q);
  }
  return p;
}

}  // namespace

Q3Series series_log1p_product(const std::vector<Factor3>& factors, long bound_n,
                              long bound_m) {
  std::map<std::tuple<long, long, long>, Rat> merged;
  for (const auto& f : factors) {
    if (!monomial3_positive(f.n, f.r, f.m))
      throw std::domain_error("factor monomial is not positive; no formal expansion");
    merged[{f.n, f.r, f.m}] += f.c;
  }

  // zeta-only factors multiply out exactly; everything else goes through
  // exp(log).
  ZPoly zeta_part;
  zeta_part.add(0, Rat(1));
  Q3Series logsum(bound_n, bound_m);
  for (const auto& [mono, c] : merged) {
    if (c == 0) continue;
    auto [n, r, m] = mono;
    if (n == 0 && m == 0) {
      if (!is_integer(c))
        throw std::domain_error("zeta-only factor with non-integral exponent");
      ZPoly factor = zeta_binomial(r, to_integer(c));
      ZPoly out;
      zp_addmul(out, zeta_part, factor, Rat(1));
      out.trim();
      zeta_part = std::move(out);
      continue;
    }
    // c * log(1 - x) = -c * sum_{k>=1} x^k / k over the window.
    for (long k = 1; k * n <= bound_n && k * m <= bound_m; ++k)
      logsum.add_term_rel(k * n, k * r, k * m, -c / k);
  }
  logsum.prune();

  // exp by the Euler-grading recurrence w*F_w = sum_u u * S_u * F_{w-u},
  // where the grade of a cell (n, m) is n + m and S has no grade-0 part.
  Q3Series result = Q3Series::one(bound_n, bound_m);
  for (long w = 1; w <= bound_n + bound_m; ++w) {
    std::map<std::pair<long, long>, ZPoly> acc;
    for (const auto& [nm1, zp1] : logsum.cells()) {
      long u = nm1.first + nm1.second;
      if (u < 1 || u > w) continue;
      Rat scale(u, w);
      scale.canonicalize();
      for (const auto& [nm2, zp2] : result.cells()) {
        if (nm2.first + nm2.second != w - u) continue;
        long n = nm1.first + nm2.first, m = nm1.second + nm2.second;
        if (n > bound_n || m > bound_m) continue;
        zp_addmul(acc[{n, m}], zp1, zp2, scale);
      }
    }
    for (auto& [nm, zp] : acc) {
      zp.trim();
      if (zp.is_zero()) continue;
      for (size_t i = 0; i < zp.c.size(); ++i)
        result.cell(nm.first, nm.second).add(zp.rmin + static_cast<long>(i), zp.c[i]);
    }
  }
  result.prune();

  if (!(zeta_part.c.size() == 1 && zeta_part.rmin == 0 && zeta_part.c[0] == 1)) {
    Q3Series zf(bound_n, bound_m);
    zf.cell(0, 0) = zeta_part;
    result = result * zf;
  }
  return result;
}

}  // namespace m24
