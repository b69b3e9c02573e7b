#include "dualcat/report.hpp"

#include <algorithm>
#include <sstream>

namespace dualcat::verify {

nlohmann::ordered_json to_json(const VerificationRecord& rec) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rec.params) params[name] = value.str();
    nlohmann::ordered_json j;
    j["statement"] = rec.statement;
    j["p"] = rec.p;
    j["e"] = rec.e;
    j["params"] = std::move(params);
    j["lhs"] = rec.lhs;
    j["rhs"] = rec.rhs;
    j["pass"] = rec.pass;
    if (rec.skipped())
        j["skip_reason"] = rec.skip_reason;
    else
        j["skip_reason"] = nullptr;
    return j;
}

nlohmann::ordered_json to_json(const SweepResult& result) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& rec : result.records) records.push_back(to_json(rec));
    nlohmann::ordered_json j;
    j["records"] = std::move(records);
    j["summary"] = {{"passed", result.summary.passed},
                    {"failed", result.summary.failed},
                    {"skipped", result.summary.skipped}};
    return j;
}

namespace {

std::string params_cell(const VerificationRecord& rec) {
    std::string cell;
    for (const auto& [name, value] : rec.params) {
        if (!cell.empty()) cell += ';';
        cell += name + "=" + value.str();
    }
    return cell;
}

}  // namespace

std::string to_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    out << "statement,p,e,params,lhs,rhs,pass,skip_reason\n";
    for (const auto& rec : records) {
        out << rec.statement << ',' << rec.p << ',' << rec.e << ',' << params_cell(rec) << ','
            << rec.lhs << ',' << rec.rhs << ',' << (rec.pass ? "true" : "false") << ','
            << rec.skip_reason << '\n';
    }
    return out.str();
}

std::string to_table(const std::vector<VerificationRecord>& records) {
    const std::vector<std::string> headers = {"statement", "p",   "e",    "params",
                                              "lhs",       "rhs", "pass", "skip_reason"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& rec : records) {
        rows.push_back({rec.statement, std::to_string(rec.p), std::to_string(rec.e),
                        params_cell(rec), std::to_string(rec.lhs), std::to_string(rec.rhs),
                        rec.skipped() ? "skip" : (rec.pass ? "pass" : "FAIL"), rec.skip_reason});
    }
    std::vector<size_t> width(headers.size());
    for (size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    };
    emit(headers);
    for (const auto& row : rows) emit(row);
    return out.str();
}

std::string summary_line(const SweepSummary& summary) {
    std::ostringstream out;
    out << "passed " << summary.passed << ", failed " << summary.failed << ", skipped "
        << summary.skipped;
    return out.str();
}

}  // namespace dualcat::verify
