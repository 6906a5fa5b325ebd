#include "rainbow/json_io.hpp"

#include <json.hpp>

namespace rainbow {

namespace {

using nlohmann::json;

json grid_rows(const LatinRectangle& rect) {
    json rows = json::array();
    for (int r = 0; r < rect.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < rect.cols(); ++c) row.push_back(rect.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Found: return "found";
    case Verdict::ExhaustedNone: return "exhausted-none";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

json stats_json(const SearchStats& stats) {
    return json{{"nodes", stats.nodes},
                {"prunes_rainbow", stats.prunes_rainbow},
                {"prunes_canonical", stats.prunes_canonical},
                {"wall_ms", stats.wall_ms}};
}

} // namespace

std::string certificate_json(const CycleCertificate& cert) {
    json j{{"k", cert.k()},
           {"a_vertices", cert.a_vertices},
           {"b_vertices", cert.b_vertices},
           {"colors", cert.colors}};
    return j.dump();
}

std::string classification_json(const Classification3x3& cls) {
    json j{{"distinct_count", cls.distinct_count},
           {"has_intercalate", cls.has_intercalate},
           {"has_tripled_element", cls.has_tripled_element},
           {"two_lines_on_3_symbols", cls.two_lines_on_3_symbols},
           {"rainbow_c6_free", cls.rainbow_c6_free}};
    return j.dump();
}

std::string grid_json(const LatinRectangle& rect) {
    json j{{"m", rect.rows()}, {"n", rect.cols()}, {"grid", grid_rows(rect)}};
    return j.dump();
}

std::string search_outcome_json(const SearchOutcome& outcome) {
    json j{{"verdict", verdict_name(outcome.verdict)}, {"stats", stats_json(outcome.stats)}};
    j["witness"] = outcome.witness ? grid_rows(*outcome.witness) : json(nullptr);
    return j.dump();
}

std::string fmc_report_json(const FmcReport& report) {
    json pairs = json::array();
    for (const FmcEntry& e : report.pairs) {
        json entry{{"m", e.m},
                   {"n", e.n},
                   {"k", e.k},
                   {"member", e.member},
                   {"provenance", e.provenance}};
        if (e.witness) entry["witness"] = grid_rows(*e.witness);
        pairs.push_back(std::move(entry));
    }
    json undecided = json::array();
    for (auto [m, n] : report.undecided) undecided.push_back(json{{"m", m}, {"n", n}});
    json j{{"k", report.k},
           {"max_m", report.max_m},
           {"max_n", report.max_n},
           {"budget_exceeded", report.budget_exceeded},
           {"undecided", std::move(undecided)},
           {"pairs", std::move(pairs)}};
    return j.dump(2);
}

std::string size7_report_json(const Size7ClassReport& report) {
    json j{{"classes_total", report.classes_total},
           {"classes_with_intercalate", report.classes_with_intercalate},
           {"classes_rainbow_free", report.classes_rainbow_free},
           {"violations", report.violations}};
    return j.dump();
}

std::string size6_report_json(const Size6ClassReport& report) {
    json j{{"classes_total", report.classes_total},
           {"classes_with_two_lines", report.classes_with_two_lines},
           {"classes_with_tripled", report.classes_with_tripled},
           {"classes_with_intercalate", report.classes_with_intercalate},
           {"classes_rainbow_free", report.classes_rainbow_free},
           {"free_without_condition", report.free_without_condition},
           {"violations", report.violations}};
    return j.dump();
}

std::string k37_report_json(const K37StructureReport& report) {
    json j{{"classes_total", report.classes_total},
           {"violations_column_triple", report.violations_column_triple},
           {"violations_disjoint_columns", report.violations_disjoint_columns},
           {"complete", report.complete},
           {"stats", stats_json(report.stats)}};
    return j.dump();
}

} // namespace rainbow
