// Command-line front end for the rainbowforbid library. Subcommands:
//   construct  emit a forbidding coloring (or a seeded random one)
//   check      rainbow-cycle detection on a grid file
//   search     exhaustive membership search for (m, n, k)
//   fmc        the full FMC(2k) table with provenance
//   verify     the 3x3 classification and 3x7 structure verifiers
//
// Exit codes: 0 success / rainbow-free / clean verdict; 1 check found a
// rainbow cycle; 2 bad usage or parameters; 3 parse or validation error;
// 4 node budget exceeded (partial output still written); 5 internal error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rainbowforbid.h"

namespace {

constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

int exit_code_for(rf_status status) {
    switch (status) {
    case RF_OK: return 0;
    case RF_ERR_VALIDATE:
    case RF_ERR_PARSE: return kExitParse;
    case RF_ERR_PARAM: return kExitUsage;
    case RF_ERR_BUDGET: return kExitBudget;
    case RF_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

int fail(rf_status status) {
    std::cerr << "error: " << rf_last_error() << "\n";
    return exit_code_for(status);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    rf_string_free(s);
    return out;
}

bool read_input(const std::string& path, std::string& text) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
        return true;
    }
    std::ifstream in(path);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return true;
    }
    std::ofstream out(path);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

struct GridHandle {
    rf_grid* grid = nullptr;
    ~GridHandle() { rf_grid_free(grid); }
};

uint64_t default_budget_from_env() {
    const char* env = std::getenv("RAINBOW_FORBID_BUDGET");
    if (!env || !*env) return 0; // library default
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
    std::cerr << "warning: ignoring malformed RAINBOW_FORBID_BUDGET\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colorings of K_{m,n} forbidding multicolored cycles"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    std::string out_path;
    uint64_t budget = default_budget_from_env();
    int threads = 1;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--budget", budget, "node budget for searches");
    app.add_option("--threads", threads, "worker threads for searches");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a coloring as a grid file");
    std::string kind;
    int c_k = 3, c_m = -1, c_n = -1;
    uint64_t seed = 0;
    construct->add_option("--kind", kind, "l2xm | km8 | k37 | random")
        ->required()
        ->check(CLI::IsMember({"l2xm", "km8", "k37", "random"}));
    construct->add_option("--k", c_k, "cycle half-length parameter (l2xm)");
    construct->add_option("--m", c_m, "number of rows");
    construct->add_option("--n", c_n, "number of columns (random)");
    construct->add_option("--seed", seed, "RNG seed (random)");

    // check
    auto* check = app.add_subcommand("check", "search a grid file for a rainbow 2k-cycle");
    std::string in_path;
    int k = 3;
    check->add_option("--in", in_path, "grid file, or - for stdin")->required();
    check->add_option("--k", k, "cycle half-length")->required();

    // search
    auto* search = app.add_subcommand("search", "exhaustive (m, n, k) membership search");
    int s_m = 0, s_n = 0, s_k = 0;
    search->add_option("--m", s_m)->required();
    search->add_option("--n", s_n)->required();
    search->add_option("--k", s_k)->required();

    // fmc
    auto* fmc = app.add_subcommand("fmc", "determine the FMC(2k) table");
    int f_k = 3, max_m = -1, max_n = -1;
    fmc->add_option("--k", f_k, "cycle half-length")->required();
    fmc->add_option("--max-m", max_m, "largest m (default 2k+2)");
    fmc->add_option("--max-n", max_n, "largest n (default 5k-6)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the classification verifiers");
    std::string which = "all";
    verify->add_option("--which", which, "all | size7 | size6 | k37")
        ->check(CLI::IsMember({"all", "size7", "size6", "k37"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    const bool json = format == "json";

    if (construct->parsed()) {
        GridHandle g;
        rf_status status = RF_OK;
        if (kind == "l2xm") {
            if (c_m < 0) c_m = 2 * c_k;
            status = rf_construct_l2xm(c_k, c_m, &g.grid);
        } else if (kind == "km8") {
            if (c_m < 0) c_m = 8;
            status = rf_construct_km8(c_m, &g.grid);
        } else if (kind == "k37") {
            status = rf_construct_k37(&g.grid);
        } else {
            if (c_m < 0 || c_n < 0) {
                std::cerr << "error: --kind random requires --m and --n\n";
                return kExitUsage;
            }
            status = rf_construct_random(c_m, c_n, seed, &g.grid);
        }
        if (status != RF_OK) return fail(status);
        std::string body = take_string(json ? rf_grid_json(g.grid) : rf_grid_format(g.grid));
        if (!write_output(out_path, body)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInternal;
        }
        return 0;
    }

    if (check->parsed()) {
        std::string text;
        if (!read_input(in_path, text)) {
            std::cerr << "error: cannot read " << in_path << "\n";
            return kExitParse;
        }
        GridHandle g;
        rf_status status = rf_grid_parse(text.c_str(), &g.grid);
        if (status != RF_OK) return fail(status);

        rf_certificate* cert = nullptr;
        status = rf_find_rainbow_cycle(g.grid, k, &cert);
        if (status != RF_OK) return fail(status);

        if (!cert) {
            if (json)
                std::cout << "{\"verdict\":\"RAINBOW-FREE\",\"certificate\":null}\n";
            else
                std::cout << "RAINBOW-FREE\n";
            return 0;
        }
        std::string cert_json = take_string(rf_certificate_json(cert));
        rf_certificate_free(cert);
        if (json)
            std::cout << "{\"verdict\":\"FOUND\",\"certificate\":" << cert_json << "}\n";
        else
            std::cout << "FOUND\n" << cert_json << "\n";
        if (!out_path.empty() && !write_output(out_path, cert_json)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInternal;
        }
        return kExitFound;
    }

    if (search->parsed()) {
        rf_search_outcome* outcome = nullptr;
        rf_status status = rf_decide_membership(s_m, s_n, s_k, budget, threads, &outcome);
        if (status != RF_OK && status != RF_ERR_BUDGET) return fail(status);

        std::string body;
        if (json) {
            body = take_string(rf_search_outcome_json(outcome));
        } else {
            std::ostringstream text_out;
            switch (rf_search_verdict(outcome)) {
            case RF_VERDICT_FOUND:
                text_out << "FOUND\n" << take_string(rf_grid_format(rf_search_witness(outcome)));
                break;
            case RF_VERDICT_EXHAUSTED_NONE: text_out << "EXHAUSTED-NONE\n"; break;
            case RF_VERDICT_BUDGET_EXCEEDED: text_out << "BUDGET-EXCEEDED\n"; break;
            }
            text_out << "stats nodes=" << rf_search_nodes(outcome)
                     << " prunes_rainbow=" << rf_search_prunes_rainbow(outcome)
                     << " prunes_canonical=" << rf_search_prunes_canonical(outcome)
                     << " wall_ms=" << rf_search_wall_ms(outcome) << "\n";
            body = text_out.str();
        }
        rf_search_outcome_free(outcome);
        if (!write_output(out_path, body)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInternal;
        }
        return status == RF_ERR_BUDGET ? kExitBudget : 0;
    }

    if (fmc->parsed()) {
        if (max_m < 0) max_m = 2 * f_k + 2;
        if (max_n < 0) max_n = 5 * f_k - 6;
        rf_fmc_report* report = nullptr;
        rf_status status = rf_compute_fmc(f_k, max_m, max_n, budget, threads, &report);
        if (status != RF_OK && status != RF_ERR_BUDGET) return fail(status);

        std::string report_json = take_string(rf_fmc_report_json(report));
        bool exceeded = rf_fmc_report_budget_exceeded(report) != 0;
        rf_fmc_report_free(report);
        if (!write_output(out_path, report_json)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInternal;
        }
        return exceeded ? kExitBudget : 0;
    }

    if (verify->parsed()) {
        bool budget_hit = false, violations = false, internal = false;
        std::ostringstream json_body;
        auto run_one = [&](const char* name, rf_status status, rf_verify_report* report) {
            if (status != RF_OK && status != RF_ERR_BUDGET) {
                std::cerr << "error: " << name << ": " << rf_last_error() << "\n";
                internal = true;
                return;
            }
            std::string body = take_string(rf_verify_report_json(report));
            if (json) {
                if (json_body.tellp() > 0) json_body << ",";
                json_body << "\"" << name << "\":" << body;
            } else {
                std::cout << name << " " << body << "\n";
            }
            if (rf_verify_violations(report) != 0) violations = true;
            if (status == RF_ERR_BUDGET) budget_hit = true;
            rf_verify_report_free(report);
        };

        rf_verify_report* report = nullptr;
        if (which == "all" || which == "size7") {
            rf_status status = rf_verify_size7(&report);
            run_one("size7", status, report);
        }
        if (!internal && (which == "all" || which == "size6")) {
            rf_status status = rf_verify_size6(&report);
            run_one("size6", status, report);
        }
        if (!internal && (which == "all" || which == "k37")) {
            rf_status status = rf_verify_k37(budget, threads, &report);
            run_one("k37", status, report);
        }
        if (internal) return kExitInternal;
        if (json) std::cout << "{" << json_body.str() << "}\n";
        if (violations) return kExitInternal;
        return budget_hit ? kExitBudget : 0;
    }

    return kExitUsage;
}
