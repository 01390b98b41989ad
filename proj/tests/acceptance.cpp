// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. All comparisons are exact; time budgets are
// wall-clock. Expects the CLI binary path as argv[1] (used by the
// determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "partsum/combinatorics.hpp"
#include "partsum/identities.hpp"
#include "partsum/partitions.hpp"
#include "partsum/rational.hpp"
#include "partsum/report.hpp"
#include "partsum/series.hpp"
#include "partsum/weights.hpp"

using namespace partsum;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int g_failures = 0;

void run(int number, const std::string& title, double time_budget_s,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (time_budget_s > 0)
        c.require(elapsed < time_budget_s,
                  "runtime " + std::to_string(elapsed) + "s exceeds budget " +
                      std::to_string(time_budget_s) + "s");
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", number,
                c.ok ? "PASS" : "FAIL", title.c_str(), elapsed,
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++g_failures;
}

std::string run_command(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    pclose(pipe);
    return output;
}

const std::vector<IdentityId> kConjectureIds = {
    IdentityId::C_1,  IdentityId::C_2,  IdentityId::C1_1, IdentityId::C1_2,
    IdentityId::C1_3, IdentityId::C1_4, IdentityId::C2_1, IdentityId::C2_2,
};

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path = argc > 1 ? argv[1] : "";

    run(1, "golden n=5 values for the three plain chains", 1.0, [](Criterion& c) {
        c.require(evaluate_lhs(IdentityId::T1_1, 5) == Rational(16), "T1.1(5) != 16");
        c.require(evaluate_lhs(IdentityId::T1_2, 5) == Rational(31), "T1.2(5) != 31");
        c.require(evaluate_lhs(IdentityId::T1_3, 5) == Rational(8), "T1.3(5) != 8");
    });

    run(2, "plain chain suite, n = 1..40, single worker", 60.0, [](Criterion& c) {
        std::vector<IdentityId> ids = {IdentityId::T1_1, IdentityId::T1_2,
                                       IdentityId::T1_3};
        ScanReport report = scan(ids, 1, 40, 1);
        c.require(report.results.size() == 120, "expected 120 results");
        c.require(report.pass == 120, "non-PASS verdicts present");
    });

    run(3, "parity-split suite, n = 2..40, honest n=2 verdicts", 120.0,
        [](Criterion& c) {
            std::vector<IdentityId> first = {IdentityId::T1A_1, IdentityId::T1A_2,
                                             IdentityId::T1A_3, IdentityId::T1A_4};
            ScanReport a = scan(first, 2, 40, 2);
            c.require(a.pass == 4 * 39, "T1A.1-4 not all PASS on 2..40");

            std::vector<IdentityId> second = {IdentityId::T1A_5, IdentityId::T1A_6};
            ScanReport b = scan(second, 3, 40, 2);
            c.require(b.pass == 2 * 38, "T1A.5-6 not all PASS on 3..40");

            VerificationResult odd = verify(IdentityId::T1A_5, 2);
            VerificationResult even = verify(IdentityId::T1A_6, 2);
            c.require(odd.verdict == Verdict::Fail && odd.lhs == Rational(1, 3) &&
                          odd.rhs == Rational(1, 2),
                      "T1A.5(2) must report lhs 1/3 vs rhs 1/2 as FAIL");
            c.require(even.verdict == Verdict::Fail && even.lhs == Rational(2, 3) &&
                          even.rhs == Rational(1, 2),
                      "T1A.6(2) must report lhs 2/3 vs rhs 1/2 as FAIL");
        });

    run(4, "weighted chain suite, n = 1..30, with the n=5 term table", 120.0,
        [](Criterion& c) {
            std::vector<IdentityId> ids = {IdentityId::T2_1, IdentityId::T2_2};
            ScanReport report = scan(ids, 1, 30, 2);
            c.require(report.pass == 60, "T2.1/T2.2 not all PASS on 1..30");

            const std::vector<Rational> w1_terms = {
                Rational(1),      Rational(5, 2),   Rational(5, 4),  Rational(5, 2),
                Rational(5, 4),   Rational(25, 8),  Rational(35, 8)};
            const std::vector<Rational> w2_terms = {
                Rational(1),      Rational(-15, 2), Rational(45, 4), Rational(25, 2),
                Rational(-75, 4), Rational(-175, 8), Rational(315, 8)};
            PartitionStream stream(5);
            std::size_t i = 0;
            while (stream.next()) {
                PaddedPartition lambda = pad(stream.current(), 5);
                c.require(term_value(IdentityId::T2_1, 5, lambda) == w1_terms.at(i),
                          "T2.1 term " + std::to_string(i));
                c.require(term_value(IdentityId::T2_2, 5, lambda) == w2_terms.at(i),
                          "T2.2 term " + std::to_string(i));
                ++i;
            }
            c.require(i == 7, "expected the seven partitions of 5");
        });

    run(5, "double-factorial ratio suite, n = 1..30", 120.0, [](Criterion& c) {
        for (unsigned n = 1; n <= 30; ++n) {
            VerificationResult one = verify(IdentityId::T4_1, n);
            VerificationResult two = verify(IdentityId::T4_2, n);
            long ln = static_cast<long>(n);
            c.require(one.verdict == Verdict::Pass &&
                          one.rhs == Rational(double_factorial(2 * ln - 1), factorial(n)),
                      "T4.1 at n=" + std::to_string(n));
            c.require(two.verdict == Verdict::Pass &&
                          two.rhs == Rational(double_factorial(std::abs(2 * ln - 3)),
                                              factorial(n)),
                      "T4.2 at n=" + std::to_string(n));
        }
    });

    run(6, "multinomial row sums for 1 <= k <= n <= 12 vs composition counts",
        10.0, [](Criterion& c) {
            for (unsigned n = 1; n <= 12; ++n) {
                std::vector<unsigned> per_k(n + 1, 0);
                CompositionStream comps(n);
                while (comps.next()) ++per_k.at(comps.parts().size());
                for (unsigned k = 1; k <= n; ++k) {
                    VerificationResult r = verify_fine(n, k);
                    c.require(r.verdict == Verdict::Pass,
                              "FINE(" + std::to_string(n) + "," + std::to_string(k) + ")");
                    c.require(r.lhs == Rational(static_cast<long>(per_k[k])),
                              "FINE composition cross-check at n=" + std::to_string(n));
                }
            }
        });

    run(7, "delta convolution, n = 0..40", 30.0, [](Criterion& c) {
        for (unsigned n = 0; n <= 40; ++n)
            c.require(verify_delta(n).verdict == Verdict::Pass,
                      "DELTA(" + std::to_string(n) + ")");
    });

    run(8, "series oracle at order 40", 5.0, [](Criterion& c) {
        unsigned order = 40;
        TruncatedSeries central = gf_central(order);
        TruncatedSeries weighted = gf_n_central(order);
        TruncatedSeries invodd = gf_invodd_central(order);
        for (unsigned n = 0; n <= order; ++n) {
            BigInt cb = binomial(2 * n, n);
            c.require(central[n] == Rational(cb), "central coefficient " + std::to_string(n));
            c.require(weighted[n] == Rational(BigInt(n) * cb),
                      "weighted coefficient " + std::to_string(n));
            c.require(invodd[n] == Rational(cb, BigInt(2 * static_cast<long>(n) - 1)),
                      "odd-reciprocal coefficient " + std::to_string(n));
        }
        c.require(check_logderiv_plain(order).ok, "plain log-derivative chain");
        c.require(check_logderiv_alternating(order).ok, "alternating log-derivative chain");
        c.require(central * -invodd == TruncatedSeries::one(order), "delta product");
    });

    run(9, "conjecture scan, n = 2..30", 240.0, [](Criterion& c) {
        ScanReport report = scan(kConjectureIds, 2, 30, 2);
        std::ostringstream anomalies;
        for (const VerificationResult& r : report.results) {
            bool c1 = r.id == IdentityId::C1_1 || r.id == IdentityId::C1_2 ||
                      r.id == IdentityId::C1_3 || r.id == IdentityId::C1_4;
            if (!c1) {
                c.require(r.verdict == Verdict::Pass,
                          std::string(identity_name(r.id)) + " at n=" +
                              std::to_string(r.n));
            } else if (r.n >= 3) {
                c.require(r.verdict == Verdict::Pass,
                          std::string(identity_name(r.id)) + " at n=" +
                              std::to_string(r.n));
            } else {
                c.require(r.verdict != Verdict::Pass,
                          std::string(identity_name(r.id)) +
                              " at n=2 expected to miss its strict bound");
                anomalies << " " << identity_name(r.id) << "(2)="
                          << verdict_name(r.verdict);
            }
        }
        if (c.ok && anomalies.tellp() > 0)
            c.detail = "n=2 anomalies surfaced:" + anomalies.str();
    });

    run(10, "property suites: involution, chain=multinomial, bisection, linkage",
        60.0, [](Criterion& c) {
            for (unsigned n = 0; n <= 12; ++n) {
                PartitionStream stream(n);
                while (stream.next()) {
                    Partition p = stream.current();
                    c.require(conjugate(conjugate(p)) == p, "involution");
                    if (n >= 1)
                        c.require(chain_weight(pad(conjugate(p), n)) ==
                                      multinomial_weight(multiplicities(p)),
                                  "chain/multinomial at n=" + std::to_string(n));
                }
            }
            for (unsigned n = 2; n <= 15; ++n) {
                c.require(evaluate_lhs(IdentityId::T1A_1, n) +
                                  evaluate_lhs(IdentityId::T1A_2, n) ==
                              evaluate_lhs(IdentityId::T1_1, n),
                          "bisection of the plain sum");
                c.require(evaluate_lhs(IdentityId::T1A_3, n) +
                                  evaluate_lhs(IdentityId::T1A_4, n) ==
                              evaluate_lhs(IdentityId::T1_2, n),
                          "bisection of the n/largest sum");
                c.require(evaluate_lhs(IdentityId::T1A_5, n) +
                                  evaluate_lhs(IdentityId::T1A_6, n) ==
                              evaluate_lhs(IdentityId::T1_3, n),
                          "bisection of the largest/(n+1) sum");
                Rational np1(static_cast<long>(n) + 1);
                c.require(evaluate_lhs(IdentityId::C2_1, n) ==
                              evaluate_lhs(IdentityId::T4_1, n) +
                                  np1 * evaluate_lhs(IdentityId::C_1, n),
                          "linkage, W1 family");
                c.require(evaluate_lhs(IdentityId::C2_2, n) ==
                              evaluate_lhs(IdentityId::T4_2, n) +
                                  np1 * evaluate_lhs(IdentityId::C_2, n),
                          "linkage, W2 family");
            }
        });

    run(11, "deterministic JSON output across worker counts", 300.0,
        [&cli_path](Criterion& c) {
            if (cli_path.empty()) {
                c.require(false, "CLI path missing (pass it as argv[1])");
                return;
            }
            std::string base = cli_path +
                               " verify --id all --n-max 20 --format json --workers ";
            std::string one = run_command(base + "1");
            std::string eight = run_command(base + "8");
            c.require(!one.empty(), "no output from the CLI");
            c.require(one == eight, "outputs differ between workers 1 and 8");
        });

    std::printf("%s: %d of 11 criteria passed\n", g_failures == 0 ? "OK" : "FAILED",
                11 - g_failures);
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
