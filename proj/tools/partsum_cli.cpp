// partsum: exact verification of partition-indexed identities from the
// command line. Subcommands: verify, scan, partitions, series-check.

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "partsum/combinatorics.hpp"
#include "partsum/identities.hpp"
#include "partsum/partitions.hpp"
#include "partsum/rational.hpp"
#include "partsum/report.hpp"
#include "partsum/series.hpp"

namespace {

using namespace partsum;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

ReportFormat parse_format(const std::string& name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw CLI::ValidationError("--format", "expected table, csv or json");
}

std::string valid_id_list() {
    std::string out;
    for (IdentityId id : kAllIdentities) {
        if (!out.empty()) out += ", ";
        out += identity_name(id);
    }
    return out;
}

std::vector<IdentityId> resolve_ids(const std::vector<std::string>& names) {
    std::vector<IdentityId> ids;
    for (const std::string& name : names) {
        if (name == "all") {
            ids.assign(kAllIdentities.begin(), kAllIdentities.end());
            return ids;
        }
        auto id = identity_from_name(name);
        if (!id) {
            throw std::invalid_argument("unknown identity '" + name +
                                        "'; valid ids: " + valid_id_list());
        }
        ids.push_back(*id);
    }
    return ids;
}

std::string render_parts(std::span<const unsigned> parts) {
    std::string out;
    for (unsigned part : parts) {
        if (!out.empty()) out += "+";
        out += std::to_string(part);
    }
    return out;
}

int run_report(const ScanReport& report, ReportFormat format) {
    std::cout << render_report(report, format);
    return report_exit_status(report);
}

int cmd_verify(const std::vector<std::string>& id_names, unsigned n_min,
               unsigned n_max, unsigned workers, ReportFormat format) {
    std::vector<IdentityId> ids = resolve_ids(id_names);
    return run_report(scan(ids, n_min, n_max, workers), format);
}

int cmd_scan_conjectures(unsigned n_max, unsigned workers, ReportFormat format) {
    std::vector<IdentityId> ids = {
        IdentityId::C_1, IdentityId::C_2,  IdentityId::C1_1, IdentityId::C1_2,
        IdentityId::C1_3, IdentityId::C1_4, IdentityId::C2_1, IdentityId::C2_2,
    };
    return run_report(scan(ids, 2, n_max, workers), format);
}

int cmd_partitions(unsigned n, bool show_ferrers, bool show_conjugate) {
    if (n == 0) {
        std::cout << "(empty partition)\n";
        return kExitPass;
    }
    PartitionStream stream(n);
    while (stream.next()) {
        Partition p = stream.current();
        std::cout << render_parts(p.parts());
        if (show_conjugate)
            std::cout << "  (conjugate: " << render_parts(conjugate(p).parts()) << ")";
        std::cout << "\n";
        if (show_ferrers) std::cout << ferrers(p) << "\n";
    }
    return kExitPass;
}

void print_witness(const SeriesCheck& check) {
    std::cout << "  witness coefficients:";
    for (const Rational& c : check.coefficients) std::cout << " " << c.str();
    std::cout << "\n";
    if (check.first_mismatch)
        std::cout << "  first mismatch at index " << *check.first_mismatch << "\n";
}

int cmd_series_check(unsigned order) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
        all_ok = all_ok && ok;
    };

    TruncatedSeries central = gf_central(order);
    TruncatedSeries weighted = gf_n_central(order);
    TruncatedSeries invodd = gf_invodd_central(order);

    // coefficient spot checks against the ratio recurrence of C(2n, n)
    bool tables_ok = central[0] == Rational(1) && invodd[0] == Rational(-1) &&
                     weighted[0] == Rational(0);
    for (unsigned n = 0; n + 1 <= order && tables_ok; ++n) {
        Rational next = central[n] * Rational(2 * (2 * static_cast<long>(n) + 1),
                                              static_cast<long>(n) + 1);
        tables_ok = central[n + 1] == next &&
                    weighted[n + 1] == Rational(static_cast<long>(n) + 1) * next &&
                    invodd[n + 1] * Rational(2 * static_cast<long>(n) + 1) == next;
    }
    report("coefficient tables (order " + std::to_string(order) + ")", tables_ok);

    SeriesCheck plain = check_logderiv_plain(order);
    report("log-derivative chain, plain", plain.ok);
    if (!plain.ok) print_witness(plain);

    SeriesCheck alternating = check_logderiv_alternating(order);
    report("log-derivative chain, alternating", alternating.ok);
    if (!alternating.ok) print_witness(alternating);

    TruncatedSeries product = central * -invodd;
    bool delta_ok = product == TruncatedSeries::one(order);
    report("delta product", delta_ok);
    if (!delta_ok) {
        SeriesCheck witness;
        witness.coefficients.assign(product.coefficients().begin(),
                                    product.coefficients().end());
        print_witness(witness);
    }

    return all_ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition-identity verifier"};
    app.require_subcommand(1);

    unsigned workers_default = static_cast<unsigned>(std::max(1, omp_get_max_threads()));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify identities over a range of n");
    std::vector<std::string> id_names{"all"};
    unsigned n_min = 1, n_max = 0, workers = workers_default;
    std::string format_name = "table";
    verify_cmd->add_option("--id", id_names, "identity id (repeatable) or 'all'")
        ->capture_default_str();
    verify_cmd->add_option("--n-min", n_min, "smallest n")->capture_default_str();
    verify_cmd->add_option("--n-max", n_max, "largest n")->required();
    verify_cmd->add_option("--workers", workers, "worker threads");
    verify_cmd->add_option("--format", format_name, "table, csv or json")
        ->capture_default_str();

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "scan the conjectured identities");
    unsigned scan_n_max = 0, scan_workers = workers_default;
    std::string scan_format_name = "table";
    scan_cmd->add_option("--n-max", scan_n_max, "largest n")
        ->required()
        ->check(CLI::Range(2u, std::numeric_limits<unsigned>::max()));
    scan_cmd->add_option("--workers", scan_workers, "worker threads");
    scan_cmd->add_option("--format", scan_format_name, "table, csv or json")
        ->capture_default_str();

    // partitions
    auto* partitions_cmd = app.add_subcommand("partitions", "list the partitions of n");
    unsigned part_n = 0;
    bool show_ferrers = false, show_conjugate = false;
    partitions_cmd->add_option("--n", part_n, "the integer to partition")->required();
    partitions_cmd->add_flag("--ferrers", show_ferrers, "print Ferrers diagrams");
    partitions_cmd->add_flag("--conjugate", show_conjugate, "print conjugates");

    // series-check
    auto* series_cmd = app.add_subcommand("series-check", "run the series oracle");
    unsigned order = 0;
    series_cmd->add_option("--order", order, "truncation order")
        ->required()
        ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify_cmd)
            return cmd_verify(id_names, n_min, n_max, workers, parse_format(format_name));
        if (*scan_cmd)
            return cmd_scan_conjectures(scan_n_max, scan_workers,
                                        parse_format(scan_format_name));
        if (*partitions_cmd)
            return cmd_partitions(part_n, show_ferrers, show_conjugate);
        if (*series_cmd)
            return cmd_series_check(order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
