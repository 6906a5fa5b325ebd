#include <doctest.h>

#include <json.hpp>
#include <string>

#include "rainbowforbid.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    rf_string_free(s);
    return out;
}

} // namespace

TEST_CASE("grid parse, format, and accessors") {
    rf_grid* g = nullptr;
    REQUIRE(rf_grid_parse("2 3\n0 1 2\n2 0 1\n", &g) == RF_OK);
    CHECK(rf_grid_rows(g) == 2);
    CHECK(rf_grid_cols(g) == 3);
    CHECK(rf_grid_cell(g, 1, 0) == 2);
    CHECK(take(rf_grid_format(g)) == "2 3\n0 1 2\n2 0 1\n");
    rf_grid_free(g);
}

TEST_CASE("error statuses and messages") {
    rf_grid* g = nullptr;
    CHECK(rf_grid_parse("garbage", &g) == RF_ERR_PARSE);
    CHECK(std::string(rf_last_error()).size() > 0);

    CHECK(rf_grid_parse("2 2\n0 1\n0 1\n", &g) == RF_ERR_VALIDATE);

    const int cells[4] = {0, 1, 1, 0};
    CHECK(rf_grid_create(2, 2, cells, &g) == RF_OK);
    rf_grid_free(g);

    CHECK(rf_construct_l2xm(4, 8, &g) == RF_ERR_PARAM); // k even
    CHECK(rf_construct_km8(9, &g) == RF_ERR_PARAM);
}

TEST_CASE("constructions and cycle detection through the C API") {
    rf_grid* km8 = nullptr;
    REQUIRE(rf_construct_km8(8, &km8) == RF_OK);
    rf_certificate* cert = nullptr;
    REQUIRE(rf_find_rainbow_cycle(km8, 3, &cert) == RF_OK);
    CHECK(cert == nullptr);
    long long count = -1;
    REQUIRE(rf_count_rainbow_cycles(km8, 3, &count) == RF_OK);
    CHECK(count == 0);
    rf_grid_free(km8);

    rf_grid* c24 = nullptr;
    REQUIRE(rf_grid_parse("2 4\n0 1 2 3\n1 0 3 2\n", &c24) == RF_OK);
    REQUIRE(rf_find_rainbow_cycle(c24, 2, &cert) == RF_OK);
    REQUIRE(cert != nullptr);
    CHECK(rf_certificate_k(cert) == 2);
    auto j = nlohmann::json::parse(take(rf_certificate_json(cert)));
    CHECK(j["k"] == 2);
    CHECK(j["a_vertices"] == nlohmann::json::array({0, 1}));
    CHECK(j["b_vertices"] == nlohmann::json::array({0, 2}));
    CHECK(j["colors"] == nlohmann::json::array({0, 1, 3, 2}));
    rf_certificate_free(cert);
    rf_grid_free(c24);
}

TEST_CASE("constructive finder and random colorings") {
    rf_grid* g = nullptr;
    REQUIRE(rf_construct_random(3, 9, 42, &g) == RF_OK);
    rf_certificate* cert = nullptr;
    REQUIRE(rf_constructive_find(g, 3, &cert) == RF_OK);
    REQUIRE(cert != nullptr);
    rf_certificate_free(cert);
    rf_grid_free(g);

    // same seed, same coloring
    rf_grid* g1 = nullptr;
    rf_grid* g2 = nullptr;
    REQUIRE(rf_construct_random(3, 9, 7, &g1) == RF_OK);
    REQUIRE(rf_construct_random(3, 9, 7, &g2) == RF_OK);
    CHECK(take(rf_grid_format(g1)) == take(rf_grid_format(g2)));
    rf_grid_free(g1);
    rf_grid_free(g2);
}

TEST_CASE("classification of a 3x3 view") {
    rf_grid* k37 = nullptr;
    REQUIRE(rf_construct_k37(&k37) == RF_OK);
    const int rows[3] = {0, 1, 2};
    const int cols[3] = {0, 1, 2};
    char* json_out = nullptr;
    REQUIRE(rf_classify_3x3(k37, rows, cols, &json_out) == RF_OK);
    auto j = nlohmann::json::parse(take(json_out));
    CHECK(j.contains("distinct_count"));
    CHECK(j.contains("has_intercalate"));
    CHECK(j.contains("has_tripled_element"));
    CHECK(j.contains("two_lines_on_3_symbols"));
    CHECK(j.contains("rainbow_c6_free"));
    CHECK(j["rainbow_c6_free"] == true);
    rf_grid_free(k37);
}

TEST_CASE("membership search outcomes") {
    rf_search_outcome* out = nullptr;
    REQUIRE(rf_decide_membership(3, 7, 3, 0, 1, &out) == RF_OK);
    CHECK(rf_search_verdict(out) == RF_VERDICT_FOUND);
    REQUIRE(rf_search_witness(out) != nullptr);
    CHECK(rf_grid_rows(rf_search_witness(out)) == 3);
    CHECK(rf_search_nodes(out) > 0);
    rf_search_outcome_free(out);

    REQUIRE(rf_decide_membership(4, 7, 3, 0, 2, &out) == RF_OK);
    CHECK(rf_search_verdict(out) == RF_VERDICT_EXHAUSTED_NONE);
    CHECK(rf_search_witness(out) == nullptr);
    rf_search_outcome_free(out);

    CHECK(rf_decide_membership(4, 7, 3, 1, 1, &out) == RF_ERR_BUDGET);
    CHECK(rf_search_verdict(out) == RF_VERDICT_BUDGET_EXCEEDED);
    rf_search_outcome_free(out);

    CHECK(rf_decide_membership(1, 4, 2, 0, 1, &out) == RF_ERR_PARAM);
}

TEST_CASE("fmc report and verifiers") {
    rf_fmc_report* report = nullptr;
    REQUIRE(rf_compute_fmc(3, 8, 9, 0, 1, &report) == RF_OK);
    CHECK(rf_fmc_report_budget_exceeded(report) == 0);
    auto j = nlohmann::json::parse(take(rf_fmc_report_json(report)));
    int members = 0;
    for (const auto& p : j["pairs"])
        if (p["member"] == true) ++members;
    CHECK(members == 11);
    rf_fmc_report_free(report);

    rf_verify_report* v = nullptr;
    REQUIRE(rf_verify_size7(&v) == RF_OK);
    CHECK(rf_verify_violations(v) == 0);
    rf_verify_report_free(v);
    REQUIRE(rf_verify_size6(&v) == RF_OK);
    CHECK(rf_verify_violations(v) == 0);
    rf_verify_report_free(v);
    REQUIRE(rf_verify_k37(0, 1, &v) == RF_OK);
    CHECK(rf_verify_violations(v) == 0);
    rf_verify_report_free(v);
}
