#include "arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace m24 {

long sigma1(long n) {
  if (n <= 0) throw std::domain_error("sigma1 needs n >= 1");
  long s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

std::vector<long> divisors(long n) {
  if (n <= 0) throw std::domain_error("divisors needs n >= 1");
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    ds.push_back(d);
    if (d != n / d) ds.push_back(n / d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int moebius(long n) {
  if (n <= 0) throw std::domain_error("moebius needs n >= 1");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

long isqrt(long n) {
  if (n < 0) throw std::domain_error("isqrt needs n >= 0");
  long r = static_cast<long>(std::max(0.0, std::sqrt(static_cast<double>(n))));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace m24
