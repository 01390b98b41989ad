// Compares the serial reference evaluator with the OpenMP kernel, and a
// single-worker scan with a full-width one.

#include <omp.h>

#include <cstdio>
#include <vector>

#include "partsum/identities.hpp"
#include "partsum/partitions.hpp"

using namespace partsum;

int main() {
    unsigned threads = static_cast<unsigned>(omp_get_max_threads());
    std::printf("threads available: %u\n\n", threads);

    std::printf("%-6s %-4s %10s %12s %12s %8s\n", "id", "n", "p(n)", "serial[s]",
                "parallel[s]", "speedup");
    for (unsigned n : {30u, 36u, 40u, 44u}) {
        for (IdentityId id : {IdentityId::T1_1, IdentityId::T2_2}) {
            double t0 = omp_get_wtime();
            Rational serial = evaluate_lhs(id, n);
            double t1 = omp_get_wtime();
            Rational parallel = evaluate_lhs_parallel(id, n, threads);
            double t2 = omp_get_wtime();
            if (serial != parallel) {
                std::printf("MISMATCH at %s n=%u\n", identity_name(id).data(), n);
                return 1;
            }
            std::printf("%-6s %-4u %10s %12.4f %12.4f %8.2f\n",
                        identity_name(id).data(), n,
                        partition_count(n).get_str().c_str(), t1 - t0, t2 - t1,
                        (t1 - t0) / (t2 - t1));
        }
    }

    std::vector<IdentityId> ids = {IdentityId::T1_1, IdentityId::T1_2,
                                   IdentityId::T1_3, IdentityId::T2_1,
                                   IdentityId::T2_2};
    std::printf("\nscan of %zu identities over n = 1..38\n", ids.size());
    double t0 = omp_get_wtime();
    ScanReport one = scan(ids, 1, 38, 1);
    double t1 = omp_get_wtime();
    ScanReport wide = scan(ids, 1, 38, threads);
    double t2 = omp_get_wtime();
    std::printf("  workers=1: %.4f s   workers=%u: %.4f s   speedup %.2f\n",
                t1 - t0, threads, t2 - t1, (t1 - t0) / (t2 - t1));
    bool same = one.results.size() == wide.results.size();
    for (std::size_t i = 0; same && i < one.results.size(); ++i)
        same = one.results[i].lhs == wide.results[i].lhs &&
               one.results[i].verdict == wide.results[i].verdict;
    std::printf("  reports identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
