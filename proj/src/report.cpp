#include "partsum/report.hpp"

#include <json.hpp>

#include <array>
#include <sstream>

namespace partsum {

namespace {

using Json = nlohmann::ordered_json;

std::string k_field(const VerificationResult& r) {
    return r.k ? std::to_string(*r.k) : std::string();
}

std::string render_json(const ScanReport& report) {
    Json doc;
    Json run;
    Json id_list = Json::array();
    for (IdentityId id : report.ids) id_list.push_back(std::string(identity_name(id)));
    run["ids"] = std::move(id_list);
    run["n_min"] = report.n_min;
    run["n_max"] = report.n_max;
    doc["run"] = std::move(run);

    Json results = Json::array();
    for (const auto& r : report.results) {
        Json rec;
        rec["id"] = std::string(identity_name(r.id));
        rec["n"] = r.n;
        if (r.k) rec["k"] = *r.k;
        rec["lhs"] = r.lhs.str();
        rec["rhs"] = r.rhs.str();
        rec["relation"] = std::string(relation_symbol(r.relation));
        rec["verdict"] = std::string(verdict_name(r.verdict));
        rec["terms"] = r.term_count;
        results.push_back(std::move(rec));
    }
    doc["results"] = std::move(results);

    Json summary;
    summary["pass"] = report.pass;
    summary["fail"] = report.fail;
    summary["boundary"] = report.boundary;
    doc["summary"] = std::move(summary);

    if (!report.notices.empty()) doc["notices"] = report.notices;
    return doc.dump(2) + "\n";
}

std::string render_csv(const ScanReport& report) {
    std::ostringstream out;
    for (const auto& notice : report.notices) out << "# " << notice << "\n";
    out << "id,n,k,lhs,rhs,relation,verdict,terms\n";
    for (const auto& r : report.results) {
        out << identity_name(r.id) << ',' << r.n << ',' << k_field(r) << ','
            << r.lhs.str() << ',' << r.rhs.str() << ','
            << relation_symbol(r.relation) << ',' << verdict_name(r.verdict)
            << ',' << r.term_count << "\n";
    }
    out << "# summary: pass=" << report.pass << " fail=" << report.fail
        << " boundary=" << report.boundary << "\n";
    return out.str();
}

std::string render_table(const ScanReport& report) {
    constexpr std::size_t kCols = 8;
    std::array<std::string, kCols> header = {"id",       "n",       "k",
                                             "lhs",      "rhs",     "relation",
                                             "verdict",  "terms"};
    std::vector<std::array<std::string, kCols>> rows;
    for (const auto& r : report.results)
        rows.push_back({std::string(identity_name(r.id)), std::to_string(r.n),
                        k_field(r), r.lhs.str(), r.rhs.str(),
                        std::string(relation_symbol(r.relation)),
                        std::string(verdict_name(r.verdict)),
                        std::to_string(r.term_count)});

    std::array<std::size_t, kCols> width{};
    for (std::size_t c = 0; c < kCols; ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < kCols; ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    for (const auto& notice : report.notices) out << "notice: " << notice << "\n";
    auto emit = [&](const std::array<std::string, kCols>& row) {
        for (std::size_t c = 0; c < kCols; ++c) {
            out << row[c];
            if (c + 1 < kCols)
                out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    out << "summary: pass=" << report.pass << " fail=" << report.fail
        << " boundary=" << report.boundary << "\n";
    return out.str();
}

}  // namespace

std::string render_report(const ScanReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return render_json(report);
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Table: return render_table(report);
    }
    return {};
}

int report_exit_status(const ScanReport& report) {
    return report.fail == 0 && report.boundary == 0 ? 0 : 1;
}

}  // namespace partsum
