#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partsum/partitions.hpp"
#include "partsum/rational.hpp"
#include "partsum/weights.hpp"

namespace partsum {

enum class IdentityId {
    T1_1, T1_2, T1_3,
    T1A_1, T1A_2, T1A_3, T1A_4, T1A_5, T1A_6,
    T2_1, T2_2,
    T4_1, T4_2,
    C_1, C_2,
    C1_1, C1_2, C1_3, C1_4,
    C2_1, C2_2,
    Fine, Delta,
};

inline constexpr std::array<IdentityId, 23> kAllIdentities = {
    IdentityId::T1_1, IdentityId::T1_2, IdentityId::T1_3,
    IdentityId::T1A_1, IdentityId::T1A_2, IdentityId::T1A_3,
    IdentityId::T1A_4, IdentityId::T1A_5, IdentityId::T1A_6,
    IdentityId::T2_1, IdentityId::T2_2,
    IdentityId::T4_1, IdentityId::T4_2,
    IdentityId::C_1, IdentityId::C_2,
    IdentityId::C1_1, IdentityId::C1_2, IdentityId::C1_3, IdentityId::C1_4,
    IdentityId::C2_1, IdentityId::C2_2,
    IdentityId::Fine, IdentityId::Delta,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// True for the 21 ids evaluated as weighted sums over the partitions of n
/// (everything except FINE and DELTA).
bool is_partition_sum(IdentityId id);

enum class Filter { All, OddLargest, EvenLargest };
enum class ScalarFactor { None, NOverLargest, LargestOverNPlus1, OnePlusLargest };
enum class Relation { Equal, Less, Greater };

std::string_view relation_symbol(Relation r);

/// One registry row: which partitions contribute, the per-partition term
/// shape, the comparison direction, and the smallest n the statement covers.
struct IdentitySpec {
    IdentityId id;
    std::string_view name;
    Filter filter;
    bool alternating;                   // (-1)^(1+lambda_1) factor
    std::optional<WeightKind> weight;
    ScalarFactor scalar;
    Relation relation;
    unsigned valid_from;
};

/// Registry row for a partition-sum id; rejects FINE and DELTA.
const IdentitySpec& identity_spec(IdentityId id);

enum class Verdict { Pass, Fail, EqualityAtBoundary };

std::string_view verdict_name(Verdict v);

struct VerificationResult {
    IdentityId id;
    unsigned n = 0;
    std::optional<unsigned> k;          // set for FINE results only
    Rational lhs;
    Rational rhs;
    Relation relation = Relation::Equal;
    Verdict verdict = Verdict::Fail;
    std::uint64_t term_count = 0;
};

/// Exact sum of the id's term over all padded partitions of n passing the
/// id's filter. Serial reference implementation.
Rational evaluate_lhs(IdentityId id, unsigned n);

/// OpenMP kernel: same sum, reduced over strata of the largest part.
/// Exact rational addition makes the result independent of the schedule.
Rational evaluate_lhs_parallel(IdentityId id, unsigned n, unsigned threads);

/// Closed-form right-hand side from the registry.
Rational expected_rhs(IdentityId id, unsigned n);

/// The single term a partition contributes to id's sum at this n, or
/// nullopt when the partition does not pass the id's filter.
std::optional<Rational> term_value(IdentityId id, unsigned n,
                                   const PaddedPartition& lambda);

/// Evaluates lhs against rhs. For "=" the verdict is PASS iff equal; for
/// strict relations an exact tie is reported as EQUALITY_AT_BOUNDARY.
VerificationResult verify(IdentityId id, unsigned n, unsigned threads = 1);

/// Sum of multinomials over the partitions of n with exactly k parts
/// against C(n-1, k-1). For n <= kFineCrossCheckMax the value is also
/// cross-checked against a brute-force count of the compositions of n
/// with k parts; a mismatch there fails the verdict.
VerificationResult verify_fine(unsigned n, unsigned k);

inline constexpr unsigned kFineCrossCheckMax = 20;

/// sum_{k=0}^{n} -1/(2k-1) C(2k,k) C(2n-2k,n-k) against [n = 0].
VerificationResult verify_delta(unsigned n);

struct ScanReport {
    std::vector<IdentityId> ids;        // deduplicated, registry order
    unsigned n_min = 0;
    unsigned n_max = 0;
    std::vector<VerificationResult> results;  // ordered by (id, n, k)
    std::vector<std::string> notices;   // clipped or skipped ids
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t boundary = 0;
};

/// One result per (id, n) pair, FINE expanding to its (n, k) grid. Ids whose
/// valid_from exceeds n_min are clipped with a notice rather than rejected.
/// Tasks are distributed over an OpenMP pool of `workers` threads; the
/// report is identical for any worker count.
ScanReport scan(std::span<const IdentityId> ids, unsigned n_min, unsigned n_max,
                unsigned workers);

}  // namespace partsum
