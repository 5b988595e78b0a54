#include "qv/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace qv {

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results,
                                   const Rational& order) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    size_t pass = 0, fail = 0, insufficient = 0;
    double total_ms = 0.0;
    for (const auto& r : results) {
        nlohmann::ordered_json c;
        c["id"] = r.id;
        c["group"] = r.group;
        c["kind"] = kind_name(r.kind);
        c["verdict"] = verdict_name(r.verdict);
        c["certified_order"] = rat_str(r.certified_order);
        if (r.first_failure) {
            c["first_failure"] = {{"exponent", rat_str(r.first_failure->exponent)},
                                  {"residual", r.first_failure->residual.str()}};
        } else {
            c["first_failure"] = nullptr;
        }
        if (!r.error.empty()) c["error"] = r.error;
        c["elapsed_ms"] = r.elapsed_ms;
        checks.push_back(std::move(c));
        total_ms += r.elapsed_ms;
        switch (r.verdict) {
            case Verdict::Pass: ++pass; break;
            case Verdict::Fail: ++fail; break;
            case Verdict::InsufficientPrecision: ++insufficient; break;
        }
    }
    nlohmann::ordered_json doc;
    doc["tool"] = "qverify";
    doc["version"] = kToolVersion;
    doc["requested_order"] = rat_str(order);
    doc["checks"] = std::move(checks);
    doc["summary"] = {{"total", results.size()},
                      {"pass", pass},
                      {"fail", fail},
                      {"insufficient_precision", insufficient}};
    doc["timing"] = {{"total_ms", total_ms}};
    return doc;
}

void print_results_table(std::ostream& out, const std::vector<CheckResult>& results) {
    size_t pass = 0, fail = 0, insufficient = 0;
    for (const auto& r : results) {
        out << std::left << std::setw(34) << r.id << " " << std::setw(4) << r.group << " "
            << std::setw(22) << verdict_name(r.verdict) << " order>=" << std::setw(6)
            << rat_str(r.certified_order) << " " << std::fixed << std::setprecision(1)
            << std::setw(8) << r.elapsed_ms << " ms";
        if (r.first_failure)
            out << "  first failure at q^(" << rat_str(r.first_failure->exponent)
                << "), residual " << r.first_failure->residual.str();
        if (!r.error.empty()) out << "  error: " << r.error;
        out << "\n";
        switch (r.verdict) {
            case Verdict::Pass: ++pass; break;
            case Verdict::Fail: ++fail; break;
            case Verdict::InsufficientPrecision: ++insufficient; break;
        }
    }
    out << results.size() << " checks: " << pass << " pass, " << fail << " fail, "
        << insufficient << " insufficient precision\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.verdict != Verdict::Pass) return false;
    return !results.empty();
}

nlohmann::ordered_json registry_map_json() {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& c : registry()) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["group"] = c.group;
        e["kind"] = kind_name(c.kind);
        e["statement"] = c.statement;
        e["note"] = c.note;
        entries.push_back(std::move(e));
    }
    nlohmann::ordered_json doc;
    doc["tool"] = "qverify";
    doc["version"] = kToolVersion;
    doc["entries"] = std::move(entries);
    return doc;
}

nlohmann::ordered_json series_json(const PuiseuxSeries& s) {
    nlohmann::ordered_json doc;
    doc["field"] = field_tag_name(s.field());
    doc["denom"] = s.denom();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (size_t k = 0; k < s.coeffs().size(); ++k) {
        if (s.coeffs()[k].is_zero()) continue;
        terms.push_back({s.min_exp_units() + static_cast<int64_t>(k), s.coeffs()[k].str()});
    }
    doc["terms"] = std::move(terms);
    doc["trunc"] = s.trunc_units();
    return doc;
}

std::string registry_map_markdown() {
    std::ostringstream out;
    out << "# Check registry\n\n";
    out << "| id | group | kind | certified statement | note |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& c : registry()) {
        auto escape = [](const std::string& s) {
            std::string t;
            for (char ch : s) {
                if (ch == '|') t += "\\|";
                else t += ch;
            }
            return t;
        };
        out << "| " << c.id << " | " << c.group << " | " << kind_name(c.kind) << " | "
            << escape(c.statement) << " | " << escape(c.note) << " |\n";
    }
    return out.str();
}

}  // namespace qv
