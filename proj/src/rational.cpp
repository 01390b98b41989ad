#include "partsum/rational.hpp"

namespace partsum {

Rational pow2(long exponent) {
    BigInt shifted;
    if (exponent >= 0) {
        mpz_mul_2exp(shifted.get_mpz_t(), BigInt(1).get_mpz_t(),
                     static_cast<unsigned long>(exponent));
        return Rational(shifted);
    }
    mpz_mul_2exp(shifted.get_mpz_t(), BigInt(1).get_mpz_t(),
                 static_cast<unsigned long>(-exponent));
    return Rational(BigInt(1), shifted);
}

}  // namespace partsum
