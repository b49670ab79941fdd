#include "jacobi.hpp"

#include <mutex>
#include <stdexcept>

#include "arith.hpp"

namespace m24 {

JacobiForm01 operator+(const JacobiForm01& a, const JacobiForm01& b) {
  if (a.level != b.level)
    throw std::invalid_argument("Jacobi form addition across levels");
  return {a.level, a.tc0 + b.tc0, a.tc2 + b.tc2};
}

JacobiForm01 operator*(const Rat& s, const JacobiForm01& a) {
  return {a.level, s * a.tc0, s * a.tc2};
}

namespace {

// The generators come from theta quotients.  Everything below lives on the
// q-lattice h = 8 with the leading q^{1/4} of the odd/even half-integral
// thetas cancelled up front, so that all denominators stay units:
//
//   phi_{-2,1} = (odd theta)^2 / eta^6,
//   phi_{0,1}  = 4 [ (th2(z)/th2)^2 + (th3(z)/th3)^2 + (th4(z)/th4)^2 ].

struct GeneratorTables {
  std::map<long, Int> g0;  // phi_{0,1}
  std::map<long, Int> g2;  // phi_{-2,1}
  long d_max = -2;
};

GeneratorTables g_tables;
std::mutex g_tables_mutex;

// Only ζ-exponents up to this size ever leave the raw series; the full
// range is recovered from the discriminant relation c(n, r) = c(4n - r^2).
constexpr long kZetaBound = 4;

// (odd theta)^2 with the overall q^{1/4} removed and with/without the
// alternating sign: sum over k1, k2 of s^{k1+k2} q^{((2k1+1)^2+(2k2+1)^2-2)/8}
// zeta^{k1+k2+1}.
QZSeries odd_theta_square(long key_prec, bool alternating) {
  QZSeries f = QZSeries::zero(8, rat(key_prec, 8));
  long bound = isqrt(key_prec + 2) / 2 + 2;
  for (long k1 = -bound; k1 <= bound; ++k1) {
    long w1 = (2 * k1 + 1) * (2 * k1 + 1) - 1;
    if (w1 >= key_prec) continue;
    for (long k2 = -bound; k2 <= bound; ++k2) {
      if (std::abs(k1 + k2 + 1) > kZetaBound) continue;
      long w2 = (2 * k2 + 1) * (2 * k2 + 1) - 1;
      if (w1 + w2 >= key_prec) continue;
      long s = alternating && ((k1 + k2) % 2 != 0) ? -1 : 1;
      f.add_term(w1 + w2, k1 + k2 + 1, Rat(s));
    }
  }
  return f;
}

// (even theta)^2: sum over k1, k2 of s^{k1+k2} q^{(4k1^2+4k2^2)/8} zeta^{k1+k2}.
QZSeries even_theta_square(long key_prec, bool alternating) {
  QZSeries f = QZSeries::zero(8, rat(key_prec, 8));
  long bound = isqrt(key_prec / 4) + 2;
  for (long k1 = -bound; k1 <= bound; ++k1) {
    long w1 = 4 * k1 * k1;
    if (w1 >= key_prec) continue;
    for (long k2 = -bound; k2 <= bound; ++k2) {
      if (std::abs(k1 + k2) > kZetaBound) continue;
      long w2 = 4 * k2 * k2;
      if (w1 + w2 >= key_prec) continue;
      long s = alternating && ((k1 + k2) % 2 != 0) ? -1 : 1;
      f.add_term(w1 + w2, k1 + k2, Rat(s));
    }
  }
  return f;
}

// z = 0 specializations of the squares above, same key conventions.
QSeries theta_square_at_zero(long key_prec, bool odd, bool alternating) {
  QSeries f = QSeries::zero(8, rat(key_prec, 8));
  long bound = isqrt(key_prec + 2) + 2;
  for (long k1 = -bound; k1 <= bound; ++k1) {
    long w1 = odd ? (2 * k1 + 1) * (2 * k1 + 1) - 1 : 4 * k1 * k1;
    if (w1 < 0 || w1 >= key_prec) continue;
    for (long k2 = -bound; k2 <= bound; ++k2) {
      long w2 = odd ? (2 * k2 + 1) * (2 * k2 + 1) - 1 : 4 * k2 * k2;
      if (w2 < 0 || w1 + w2 >= key_prec) continue;
      long s = alternating && ((k1 + k2) % 2 != 0) ? -1 : 1;
      Rat prev = f.coeff(rat(w1 + w2, 8));
      f.set_coeff(rat(w1 + w2, 8), prev + s);
    }
  }
  return f;
}

void extract_table(const QZSeries& phi, long d_max, std::map<long, Int>& out,
                   const char* name) {
  for (long d = -1; d <= d_max; ++d) {
    long res = ((d % 4) + 4) % 4;
    if (res == 1 || res == 2) continue;
    long n = (res == 0) ? d / 4 : (d + 1) / 4;
    long r = (res == 0) ? 0 : 1;
    Rat c = phi.coeff_int(n, r);
    if (!is_integer(c))
      throw std::logic_error(std::string(name) + ": non-integral Fourier coefficient");
    // Spot-check that the coefficient only depends on 4n - r^2.
    if (n + r + 1 <= d_max / 4 && phi.coeff_int(n + r + 1, r + 2) != c)
      throw std::logic_error(std::string(name) + ": coefficient not a function of 4n - r^2");
    out[d] = to_integer(c);
  }
}

void compute_tables(long d_max) {
  long n_prec = d_max / 4 + 2;
  long key_prec = 8 * n_prec;

  QZSeries odd_sq = odd_theta_square(key_prec, /*alternating=*/true);
  QSeries euler6_inv = euler_product(n_prec + 1).pow(6).with_lattice(8).inverse();
  QZSeries phi_m2 = odd_sq.times(euler6_inv);

  QZSeries t2_sq = odd_theta_square(key_prec, /*alternating=*/false);
  QZSeries t3_sq = even_theta_square(key_prec, /*alternating=*/false);
  QZSeries t4_sq = even_theta_square(key_prec, /*alternating=*/true);

  QSeries t2_const = theta_square_at_zero(key_prec, true, false);
  QSeries t3_const = theta_square_at_zero(key_prec, false, false);
  QSeries t4_const = theta_square_at_zero(key_prec, false, true);

  QZSeries sum = t2_sq.times(t2_const.inverse());
  sum += t3_sq.times(t3_const.inverse());
  sum += t4_sq.times(t4_const.inverse());
  QZSeries phi_0 = Rat(4) * sum;

  QZSeries phi0_int = phi_0.truncated(Rat(n_prec)).integral_part_strict();
  QZSeries phim2_int = phi_m2.truncated(Rat(n_prec)).integral_part_strict();

  GeneratorTables t;
  t.d_max = d_max;
  extract_table(phi0_int, d_max, t.g0, "phi_{0,1}");
  extract_table(phim2_int, d_max, t.g2, "phi_{-2,1}");

  // Initial terms: zeta - 2 + zeta^{-1} and zeta + 10 + zeta^{-1}.
  if (t.g2.at(-1) != 1 || t.g2.at(0) != -2 || t.g0.at(-1) != 1 || t.g0.at(0) != 10)
    throw std::logic_error("generator construction disagrees with the initial terms");

  g_tables = std::move(t);
}

const GeneratorTables& tables_for(long d_max) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  if (g_tables.d_max < d_max) compute_tables(std::max(d_max, 2 * std::max(g_tables.d_max, 16L)));
  return g_tables;
}

Int table_lookup(const std::map<long, Int>& t, long d) {
  auto it = t.find(d);
  return it == t.end() ? Int(0) : it->second;
}

}  // namespace

std::map<long, Int> generator_coeffs(Generator which, long d_max) {
  const auto& t = tables_for(std::max(d_max, 0L));
  std::map<long, Int> out;
  const auto& src = (which == Generator::phi_0_1) ? t.g0 : t.g2;
  for (const auto& [d, c] : src)
    if (d <= d_max) out[d] = c;
  return out;
}

Int generator_coeff(Generator which, long d) {
  if (d < -1) return 0;
  const auto& t = tables_for(d);
  return table_lookup((which == Generator::phi_0_1) ? t.g0 : t.g2, d);
}

QZSeries fourier_qz(const JacobiForm01& phi, long n_max) {
  const auto& t = tables_for(4 * n_max + 1);
  QSeries u = expand(phi.tc2, n_max);
  QZSeries f = QZSeries::zero(1, Rat(n_max));
  for (long n = 0; n < n_max; ++n) {
    long rb = isqrt(4 * n + 1);
    for (long r = -rb; r <= rb; ++r) {
      long d = 4 * n - r * r;
      Rat c = phi.tc0 * rat(1, 12) * Rat(table_lookup(t.g0, d));
      for (long j = 0; j <= n; ++j) {
        long dd = 4 * (n - j) - r * r;
        if (dd < -1) break;
        Int g2c = table_lookup(t.g2, dd);
        if (g2c != 0) c += u.coeff_int(j) * Rat(g2c);
      }
      if (c != 0) f.add_term(n, r, c);
    }
  }
  return f;
}

std::pair<Rat, ModFormVec> cusp_taylor_pair(const JacobiForm01& phi,
                                            const CuspData& cusp) {
  return {phi.tc0, pi_fe(phi.tc2, cusp)};
}

std::map<long, Rat> disc_table(const Rat& tc0, const QSeries& tc2_expansion,
                               long d_max) {
  const auto& t = tables_for(d_max);
  std::map<long, Rat> out;
  for (long d = -1; d <= d_max; ++d) {
    long res = ((d % 4) + 4) % 4;
    if (res == 1 || res == 2) continue;
    Rat c = tc0 * rat(1, 12) * Rat(table_lookup(t.g0, d));
    for (long j = 0; 4 * j <= d + 1; ++j) {
      Int g2c = table_lookup(t.g2, d - 4 * j);
      if (g2c != 0) c += tc2_expansion.coeff_int(j) * Rat(g2c);
    }
    out[d] = c;
  }
  return out;
}

std::map<long, Rat> cusp_disc_table(const JacobiForm01& phi, const CuspData& cusp,
                                    long d_max) {
  ModFormVec projected = pi_fe(phi.tc2, cusp);
  QSeries u = expand(projected, d_max / 4 + 2);
  return disc_table(phi.tc0, u, d_max);
}

}  // namespace m24
