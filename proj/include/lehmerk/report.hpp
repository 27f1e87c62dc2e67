#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lehmerk/classify.hpp"
#include "lehmerk/theorems.hpp"

namespace lehmerk {

inline constexpr const char* kCsvHeader =
    "d,squarefree,phi,phiK,splitting,irreducible,divides,realizable,normal,lehmer,strongly_lehmer";

inline std::string csv_row(const ClassificationRecord& r) {
    std::ostringstream out;
    out << r.d << ',' << int(r.squarefree) << ',' << r.phi << ',' << r.phi_k << ','
        << (r.splitting ? to_string(*r.splitting) : "") << ',' << int(r.irreducible) << ','
        << int(r.divides) << ',' << int(r.realizable) << ',' << int(r.normal) << ','
        << int(r.lehmer) << ',' << int(r.strongly_lehmer);
    return out.str();
}

inline std::string records_to_csv(const std::vector<ClassificationRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : records) {
        out += csv_row(r);
        out += '\n';
    }
    return out;
}

inline nlohmann::json record_to_json(const ClassificationRecord& r) {
    nlohmann::json j{{"d", r.d},
                     {"squarefree", r.squarefree},
                     {"phi", r.phi},
                     {"phiK", r.phi_k},
                     {"splitting", r.splitting ? nlohmann::json(to_string(*r.splitting))
                                              : nlohmann::json(nullptr)},
                     {"irreducible", r.irreducible},
                     {"divides", r.divides},
                     {"realizable", r.realizable},
                     {"normal", r.normal},
                     {"lehmer", r.lehmer},
                     {"strongly_lehmer", r.strongly_lehmer}};
    return j;
}

inline std::string records_to_jsonl(const std::vector<ClassificationRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += record_to_json(r).dump();
        out += '\n';
    }
    return out;
}

inline std::string records_to_table(const std::vector<ClassificationRecord>& records) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "d" << std::setw(4) << "sf" << std::setw(10) << "phi"
        << std::setw(14) << "phiK" << std::setw(10) << "split" << std::setw(6) << "irr"
        << std::setw(6) << "div" << std::setw(6) << "real" << std::setw(6) << "norm"
        << std::setw(8) << "lehmer" << "strong" << '\n';
    for (const auto& r : records) {
        out << std::left << std::setw(8) << r.d << std::setw(4) << int(r.squarefree)
            << std::setw(10) << r.phi << std::setw(14) << r.phi_k << std::setw(10)
            << (r.splitting ? to_string(*r.splitting) : "-") << std::setw(6)
            << int(r.irreducible) << std::setw(6) << int(r.divides) << std::setw(6)
            << int(r.realizable) << std::setw(6) << int(r.normal) << std::setw(8)
            << int(r.lehmer) << int(r.strongly_lehmer) << '\n';
    }
    return out.str();
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

inline std::string format_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite;
    if (report.field_m) {
        out << " over " << (*report.field_m == 1 ? "Q" : "Q(sqrt(" + std::to_string(*report.field_m) + "))");
    }
    out << ", bound " << report.bound << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
        << report.checked << " checked, " << report.failures.size() << " failures, "
        << std::fixed << std::setprecision(3) << report.elapsed.count() << "s)";
    for (const auto& witness : report.failures) {
        out << '\n';
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i > 0) out << ' ';
            out << witness[i];
        }
    }
    return out.str();
}

} // namespace lehmerk
