#include "partsum/weights.hpp"

#include "partsum/combinatorics.hpp"

namespace partsum {

BigInt chain_weight(std::span<const unsigned> parts) {
    BigInt product = 1;
    BigInt factor;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        unsigned upper = parts[i];
        unsigned lower = i + 1 < parts.size() ? parts[i + 1] : 0;
        if (lower == 0 || lower == upper) continue;  // C(m,0) = C(m,m) = 1
        mpz_bin_uiui(factor.get_mpz_t(), upper, lower);
        product *= factor;
    }
    return product;
}

BigInt chain_weight(const PaddedPartition& lambda) {
    return chain_weight(lambda.lambda());
}

BigInt multinomial_weight(std::span<const unsigned> t) { return multinomial(t); }

Rational rational_weight(std::span<const unsigned> parts, WeightKind kind) {
    BigInt num = 1;
    BigInt den = 1;
    BigInt power;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        unsigned exponent = parts[i];
        if (exponent == 0) break;  // weakly decreasing: the rest are zero too
        unsigned long index = i + 1;
        long base = kind == WeightKind::W1 ? std::abs(2 * static_cast<long>(index) - 3)
                                           : 2 * static_cast<long>(index) - 1;
        if (base != 1) {
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(base), exponent);
            num *= power;
        }
        if (index != 1) {
            mpz_ui_pow_ui(power.get_mpz_t(), index, exponent);
            den *= power;
        }
    }
    return Rational(num, den);
}

Rational rational_weight(const PaddedPartition& lambda, WeightKind kind) {
    return rational_weight(lambda.lambda(), kind);
}

int largest_part_sign(std::span<const unsigned> parts) {
    unsigned largest = parts.empty() ? 0 : parts.front();
    return largest % 2 == 1 ? 1 : -1;
}

int largest_part_sign(const PaddedPartition& lambda) {
    return largest_part_sign(lambda.lambda());
}

}  // namespace partsum
