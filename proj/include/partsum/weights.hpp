#pragma once

#include <span>

#include "partsum/partitions.hpp"
#include "partsum/rational.hpp"

namespace partsum {

/// Per-part rational weight families. At padded index i (1-based) the
/// numerator base is |2i-3| for W1 (1, 1, 3, 5, ...) and 2i-1 for W2
/// (1, 3, 5, ...); the denominator base is i for both.
enum class WeightKind { W1, W2 };

/// B(lambda) = C(lambda_1, lambda_2) C(lambda_2, lambda_3) ... C(lambda_n, 0).
/// The span overload treats entries past the end as zero, so a bare
/// partition and its padded form give the same value.
BigInt chain_weight(std::span<const unsigned> parts);
BigInt chain_weight(const PaddedPartition& lambda);

/// Multinomial of (t_1, ..., t_n) with top index k = sum t_i.
BigInt multinomial_weight(std::span<const unsigned> t);

/// prod_i base(i)^lambda_i / i^lambda_i for the chosen weight family.
/// Numerator and denominator are accumulated separately and canonicalized
/// once at the end.
Rational rational_weight(std::span<const unsigned> parts, WeightKind kind);
Rational rational_weight(const PaddedPartition& lambda, WeightKind kind);

/// (-1)^(1 + lambda_1): +1 when the largest part is odd, -1 when even.
int largest_part_sign(std::span<const unsigned> parts);
int largest_part_sign(const PaddedPartition& lambda);

}  // namespace partsum
