#pragma once

#include <vector>

namespace m24 {

// sigma_1(n): sum of positive divisors.
long sigma1(long n);

std::vector<long> divisors(long n);

// Moebius function.
int moebius(long n);

// Largest r >= 0 with r*r <= n.
long isqrt(long n);

}  // namespace m24
