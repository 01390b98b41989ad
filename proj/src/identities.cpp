#include "partsum/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "partsum/combinatorics.hpp"

namespace partsum {

namespace {

constexpr std::array<std::string_view, 23> kNames = {
    "T1.1", "T1.2", "T1.3",
    "T1A.1", "T1A.2", "T1A.3", "T1A.4", "T1A.5", "T1A.6",
    "T2.1", "T2.2",
    "T4.1", "T4.2",
    "C.1", "C.2",
    "C1.1", "C1.2", "C1.3", "C1.4",
    "C2.1", "C2.2",
    "FINE", "DELTA",
};

constexpr std::array<IdentitySpec, 21> kRegistry = {{
    {IdentityId::T1_1, "T1.1", Filter::All, false, std::nullopt, ScalarFactor::None, Relation::Equal, 1},
    {IdentityId::T1_2, "T1.2", Filter::All, false, std::nullopt, ScalarFactor::NOverLargest, Relation::Equal, 1},
    {IdentityId::T1_3, "T1.3", Filter::All, false, std::nullopt, ScalarFactor::LargestOverNPlus1, Relation::Equal, 1},
    {IdentityId::T1A_1, "T1A.1", Filter::OddLargest, false, std::nullopt, ScalarFactor::None, Relation::Equal, 2},
    {IdentityId::T1A_2, "T1A.2", Filter::EvenLargest, false, std::nullopt, ScalarFactor::None, Relation::Equal, 2},
    {IdentityId::T1A_3, "T1A.3", Filter::OddLargest, false, std::nullopt, ScalarFactor::NOverLargest, Relation::Equal, 2},
    {IdentityId::T1A_4, "T1A.4", Filter::EvenLargest, false, std::nullopt, ScalarFactor::NOverLargest, Relation::Equal, 2},
    {IdentityId::T1A_5, "T1A.5", Filter::OddLargest, false, std::nullopt, ScalarFactor::LargestOverNPlus1, Relation::Equal, 2},
    {IdentityId::T1A_6, "T1A.6", Filter::EvenLargest, false, std::nullopt, ScalarFactor::LargestOverNPlus1, Relation::Equal, 2},
    {IdentityId::T2_1, "T2.1", Filter::All, false, WeightKind::W1, ScalarFactor::NOverLargest, Relation::Equal, 1},
    {IdentityId::T2_2, "T2.2", Filter::All, true, WeightKind::W2, ScalarFactor::NOverLargest, Relation::Equal, 1},
    {IdentityId::T4_1, "T4.1", Filter::All, false, WeightKind::W1, ScalarFactor::None, Relation::Equal, 1},
    {IdentityId::T4_2, "T4.2", Filter::All, true, WeightKind::W2, ScalarFactor::None, Relation::Equal, 1},
    {IdentityId::C_1, "C.1", Filter::All, false, WeightKind::W1, ScalarFactor::LargestOverNPlus1, Relation::Equal, 1},
    {IdentityId::C_2, "C.2", Filter::All, true, WeightKind::W2, ScalarFactor::LargestOverNPlus1, Relation::Equal, 1},
    {IdentityId::C1_1, "C1.1", Filter::OddLargest, false, WeightKind::W1, ScalarFactor::NOverLargest, Relation::Greater, 2},
    {IdentityId::C1_2, "C1.2", Filter::EvenLargest, false, WeightKind::W1, ScalarFactor::NOverLargest, Relation::Less, 2},
    {IdentityId::C1_3, "C1.3", Filter::OddLargest, false, WeightKind::W2, ScalarFactor::NOverLargest, Relation::Greater, 2},
    {IdentityId::C1_4, "C1.4", Filter::EvenLargest, false, WeightKind::W2, ScalarFactor::NOverLargest, Relation::Greater, 2},
    {IdentityId::C2_1, "C2.1", Filter::All, false, WeightKind::W1, ScalarFactor::OnePlusLargest, Relation::Equal, 2},
    {IdentityId::C2_2, "C2.2", Filter::All, true, WeightKind::W2, ScalarFactor::OnePlusLargest, Relation::Equal, 2},
}};

bool passes_filter(Filter filter, unsigned largest) {
    switch (filter) {
        case Filter::All: return true;
        case Filter::OddLargest: return largest % 2 == 1;
        case Filter::EvenLargest: return largest % 2 == 0;
    }
    return false;
}

/// Term of one partition (bare parts, trailing zeros implied), or nullopt
/// when the filter rejects it.
std::optional<Rational> make_term(const IdentitySpec& spec, unsigned n,
                                  std::span<const unsigned> parts) {
    unsigned largest = parts.front();
    if (!passes_filter(spec.filter, largest)) return std::nullopt;
    BigInt num = chain_weight(parts);
    BigInt den = 1;
    switch (spec.scalar) {
        case ScalarFactor::None:
            break;
        case ScalarFactor::NOverLargest:
            num *= n;
            den *= largest;
            break;
        case ScalarFactor::LargestOverNPlus1:
            num *= largest;
            den *= n + 1;
            break;
        case ScalarFactor::OnePlusLargest:
            num *= 1 + largest;
            break;
    }
    if (spec.weight) {
        Rational w = rational_weight(parts, *spec.weight);
        num *= w.numerator();
        den *= w.denominator();
    }
    if (spec.alternating && largest % 2 == 0) num = -num;
    return Rational(num, den);
}

struct Accum {
    Rational sum;
    std::uint64_t terms = 0;
};

Accum eval_serial(const IdentitySpec& spec, unsigned n) {
    Accum acc;
    PartitionStream stream(n);
    while (stream.next()) {
        if (auto term = make_term(spec, n, stream.parts())) {
            acc.sum += *term;
            ++acc.terms;
        }
    }
    return acc;
}

Accum eval_parallel(const IdentitySpec& spec, unsigned n, unsigned threads) {
    Accum total;
    if (threads == 0) threads = 1;
#pragma omp parallel num_threads(static_cast<int>(threads))
    {
        Accum local;
        std::vector<unsigned> buf;
        buf.reserve(n);
        // Stratify on the largest part: partitions of n starting with m are
        // m followed by a partition of n-m into parts <= m.
#pragma omp for schedule(dynamic) nowait
        for (long m = 1; m <= static_cast<long>(n); ++m) {
            PartitionStream tail(n - static_cast<unsigned>(m),
                                 static_cast<unsigned>(m));
            while (tail.next()) {
                buf.clear();
                buf.push_back(static_cast<unsigned>(m));
                buf.insert(buf.end(), tail.parts().begin(), tail.parts().end());
                if (auto term = make_term(spec, n, buf)) {
                    local.sum += *term;
                    ++local.terms;
                }
            }
        }
#pragma omp critical
        {
            total.sum += local.sum;
            total.terms += local.terms;
        }
    }
    return total;
}

unsigned scan_valid_from(IdentityId id) {
    if (id == IdentityId::Fine) return 1;
    if (id == IdentityId::Delta) return 0;
    return identity_spec(id).valid_from;
}

void require_in_range(IdentityId id, unsigned n) {
    unsigned from = scan_valid_from(id);
    if (n < from)
        throw std::out_of_range(std::string(identity_name(id)) +
                                ": n below valid range (n >= " +
                                std::to_string(from) + ")");
}

Verdict verdict_for(Relation relation, const Rational& lhs, const Rational& rhs) {
    switch (relation) {
        case Relation::Equal:
            return lhs == rhs ? Verdict::Pass : Verdict::Fail;
        case Relation::Less:
            if (lhs < rhs) return Verdict::Pass;
            return lhs == rhs ? Verdict::EqualityAtBoundary : Verdict::Fail;
        case Relation::Greater:
            if (lhs > rhs) return Verdict::Pass;
            return lhs == rhs ? Verdict::EqualityAtBoundary : Verdict::Fail;
    }
    return Verdict::Fail;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
    return kNames[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<IdentityId>(i);
    return std::nullopt;
}

bool is_partition_sum(IdentityId id) {
    return id != IdentityId::Fine && id != IdentityId::Delta;
}

std::string_view relation_symbol(Relation r) {
    switch (r) {
        case Relation::Equal: return "=";
        case Relation::Less: return "<";
        case Relation::Greater: return ">";
    }
    return "?";
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::EqualityAtBoundary: return "EQUALITY_AT_BOUNDARY";
    }
    return "?";
}

const IdentitySpec& identity_spec(IdentityId id) {
    if (!is_partition_sum(id))
        throw std::invalid_argument("identity_spec: no registry row for FINE/DELTA");
    return kRegistry[static_cast<std::size_t>(id)];
}

Rational evaluate_lhs(IdentityId id, unsigned n) {
    if (!is_partition_sum(id))
        throw std::invalid_argument("evaluate_lhs: use verify_fine/verify_delta");
    require_in_range(id, n);
    return eval_serial(identity_spec(id), n).sum;
}

Rational evaluate_lhs_parallel(IdentityId id, unsigned n, unsigned threads) {
    if (!is_partition_sum(id))
        throw std::invalid_argument("evaluate_lhs_parallel: use verify_fine/verify_delta");
    require_in_range(id, n);
    return eval_parallel(identity_spec(id), n, threads).sum;
}

Rational expected_rhs(IdentityId id, unsigned n) {
    require_in_range(id, n);
    long ln = static_cast<long>(n);
    switch (id) {
        case IdentityId::T1_1:
        case IdentityId::T2_1:
        case IdentityId::T2_2:
        case IdentityId::T1A_3:
        case IdentityId::C1_4:
            return pow2(ln - 1);
        case IdentityId::T1_2:
            return Rational(BigInt((BigInt(1) << n) - 1));
        case IdentityId::T1_3:
        case IdentityId::T1A_1:
        case IdentityId::T1A_2:
        case IdentityId::C1_1:
        case IdentityId::C1_2:
            return pow2(ln - 2);
        case IdentityId::T1A_4:
            return Rational(BigInt((BigInt(1) << (n - 1)) - 1));
        case IdentityId::T1A_5:
        case IdentityId::T1A_6:
            return pow2(ln - 3);
        case IdentityId::T4_1:
            return Rational(double_factorial(2 * ln - 1), factorial(n));
        case IdentityId::T4_2:
            return Rational(double_factorial(std::abs(2 * ln - 3)), factorial(n));
        case IdentityId::C_1:
            return Rational(double_factorial(2 * ln) - double_factorial(2 * ln - 1),
                            factorial(n + 1));
        case IdentityId::C_2:
            return Rational(-double_factorial(2 * ln - 3), factorial(n + 1));
        case IdentityId::C1_3:
        case IdentityId::C2_1:
            return pow2(ln);
        case IdentityId::C2_2:
            return Rational(0);
        case IdentityId::Fine:
        case IdentityId::Delta:
            throw std::invalid_argument("expected_rhs: use verify_fine/verify_delta");
    }
    throw std::invalid_argument("expected_rhs: unknown identity");
}

std::optional<Rational> term_value(IdentityId id, unsigned n,
                                   const PaddedPartition& lambda) {
    if (!is_partition_sum(id))
        throw std::invalid_argument("term_value: FINE/DELTA have no partition terms");
    require_in_range(id, n);
    if (lambda.n() != n)
        throw std::invalid_argument("term_value: partition of the wrong n");
    return make_term(identity_spec(id), n, lambda.lambda());
}

VerificationResult verify(IdentityId id, unsigned n, unsigned threads) {
    if (!is_partition_sum(id))
        throw std::invalid_argument("verify: use verify_fine/verify_delta");
    require_in_range(id, n);
    const IdentitySpec& spec = identity_spec(id);
    Accum acc = threads > 1 ? eval_parallel(spec, n, threads) : eval_serial(spec, n);
    VerificationResult result;
    result.id = id;
    result.n = n;
    result.lhs = acc.sum;
    result.rhs = expected_rhs(id, n);
    result.relation = spec.relation;
    result.verdict = verdict_for(spec.relation, result.lhs, result.rhs);
    result.term_count = acc.terms;
    return result;
}

VerificationResult verify_fine(unsigned n, unsigned k) {
    if (n < 1) throw std::invalid_argument("verify_fine: n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("verify_fine: need 1 <= k <= n");
    Rational lhs;
    std::uint64_t terms = 0;
    std::vector<unsigned> t(n);
    PartitionStream stream(n);
    while (stream.next()) {
        auto parts = stream.parts();
        if (parts.size() != k) continue;
        std::fill(t.begin(), t.end(), 0u);
        for (unsigned part : parts) ++t[part - 1];
        lhs += Rational(multinomial_weight(t));
        ++terms;
    }
    VerificationResult result;
    result.id = IdentityId::Fine;
    result.n = n;
    result.k = k;
    result.lhs = lhs;
    result.rhs = Rational(binomial(n - 1, static_cast<long long>(k) - 1));
    result.relation = Relation::Equal;
    result.verdict = verdict_for(Relation::Equal, result.lhs, result.rhs);
    result.term_count = terms;
    if (result.verdict == Verdict::Pass && n <= kFineCrossCheckMax) {
        // Independent route: FINE(n, k) counts the compositions of n with
        // exactly k parts.
        BigInt count = 0;
        CompositionStream comps(n);
        while (comps.next())
            if (comps.parts().size() == k) ++count;
        if (Rational(count) != lhs) result.verdict = Verdict::Fail;
    }
    return result;
}

VerificationResult verify_delta(unsigned n) {
    Rational lhs;
    for (unsigned k = 0; k <= n; ++k) {
        BigInt num = -(binomial(2 * k, k) * binomial(2 * (n - k), n - k));
        lhs += Rational(num, BigInt(2 * static_cast<long>(k) - 1));
    }
    VerificationResult result;
    result.id = IdentityId::Delta;
    result.n = n;
    result.lhs = lhs;
    result.rhs = Rational(n == 0 ? 1 : 0);
    result.relation = Relation::Equal;
    result.verdict = verdict_for(Relation::Equal, result.lhs, result.rhs);
    result.term_count = n + 1;
    return result;
}

ScanReport scan(std::span<const IdentityId> ids, unsigned n_min, unsigned n_max,
                unsigned workers) {
    if (n_max < n_min) throw std::out_of_range("scan: n_max < n_min");
    if (workers == 0) workers = 1;

    ScanReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    for (IdentityId id : kAllIdentities)
        if (std::find(ids.begin(), ids.end(), id) != ids.end())
            report.ids.push_back(id);
    if (report.ids.empty()) throw std::invalid_argument("scan: no identities given");

    struct Task {
        IdentityId id;
        unsigned n;
    };
    std::vector<Task> tasks;
    for (IdentityId id : report.ids) {
        unsigned from = scan_valid_from(id);
        unsigned lo = std::max(n_min, from);
        if (lo > n_max) {
            report.notices.push_back(std::string(identity_name(id)) +
                                     " skipped: defined from n=" + std::to_string(from));
            continue;
        }
        if (lo > n_min)
            report.notices.push_back(std::string(identity_name(id)) +
                                     " clipped to n=" + std::to_string(lo) +
                                     " (defined from n=" + std::to_string(from) + ")");
        for (unsigned n = lo; n <= n_max; ++n) tasks.push_back({id, n});
    }

    std::vector<std::vector<VerificationResult>> slots(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(workers))
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
        const Task& task = tasks[static_cast<std::size_t>(i)];
        auto& out = slots[static_cast<std::size_t>(i)];
        if (task.id == IdentityId::Fine) {
            for (unsigned k = 1; k <= task.n; ++k) out.push_back(verify_fine(task.n, k));
        } else if (task.id == IdentityId::Delta) {
            out.push_back(verify_delta(task.n));
        } else {
            out.push_back(verify(task.id, task.n));
        }
    }

    for (auto& slot : slots)
        for (auto& r : slot) {
            switch (r.verdict) {
                case Verdict::Pass: ++report.pass; break;
                case Verdict::Fail: ++report.fail; break;
                case Verdict::EqualityAtBoundary: ++report.boundary; break;
            }
            report.results.push_back(std::move(r));
        }
    return report;
}

}  // namespace partsum
