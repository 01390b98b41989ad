#include "partsum/combinatorics.hpp"

#include <stdexcept>

namespace partsum {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(std::span<const unsigned> parts) {
    unsigned long total = 0;
    for (unsigned p : parts) total += p;
    BigInt r = factorial(total);
    for (unsigned p : parts) {
        if (p < 2) continue;
        BigInt f = factorial(p);
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
    }
    return r;
}

BigInt double_factorial(long m) {
    if (m < -1) throw std::domain_error("double_factorial: m < -1");
    if (m <= 0) return 1;  // (-1)!! = 0!! = 1
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

}  // namespace partsum
