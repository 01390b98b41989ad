#pragma once

#include <span>

#include "partsum/rational.hpp"

namespace partsum {

BigInt factorial(unsigned long n);

/// C(n, k), extended with C(n, k) = 0 for k < 0 or k > n.
BigInt binomial(unsigned long n, long long k);

/// (sum parts)! / prod(parts[i]!); the empty product is 1.
BigInt multinomial(std::span<const unsigned> parts);

/// m!! with 0!! = (-1)!! = 1. Rejects m < -1.
BigInt double_factorial(long m);

}  // namespace partsum
