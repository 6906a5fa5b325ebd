// Acceptance suite: one line per criterion, every expected value pinned.
// Criteria 6 and 9 drive the CLI binary; point RAINBOW_FORBID_CLI at it
// (ctest sets this automatically).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <sys/wait.h>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/constructive.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/fmc.hpp"
#include "rainbow/product.hpp"
#include "rainbow/random_gen.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Harness {
    int failures = 0;

    void run(int id, const std::string& label, double limit_seconds,
             const std::function<void()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = error.empty();
        if (pass && limit_seconds > 0 && seconds > limit_seconds) {
            pass = false;
            error = "exceeded the " + std::to_string(limit_seconds) + " s limit";
        }
        if (!pass) ++failures;
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label << " ("
             << seconds << " s)";
        if (!error.empty()) line << " -- " << error;
        std::cout << line.str() << std::endl;
    }
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args, const fs::path& scratch) {
    const char* cli = std::getenv("RAINBOW_FORBID_CLI");
    require(cli && *cli, "RAINBOW_FORBID_CLI is not set");
    fs::path out_file = scratch / "cli-stdout.txt";
    std::string command = "'" + std::string(cli) + "' " + args + " > '" + out_file.string() +
                          "' 2> '" + (scratch / "cli-stderr.txt").string() + "'";
    int raw = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

const std::vector<std::pair<int, int>> kFmc6{{3, 6}, {4, 6}, {5, 6}, {6, 6}, {3, 7},
                                             {3, 8}, {4, 8}, {5, 8}, {6, 8}, {7, 8}, {8, 8}};

} // namespace

int main() {
    Harness h;
    fs::path scratch = fs::temp_directory_path() /
                       ("rainbow-forbid-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(scratch);

    h.run(1, "FMC(4) emptiness at (2,4) and (2,5), brute force agreeing", 1.0, [&] {
        SearchOutcome a = decide_membership(2, 4, 2);
        require(a.verdict == Verdict::ExhaustedNone, "(2,4,2) must exhaust with no witness");
        SearchOutcome b = decide_membership(2, 5, 2);
        require(b.verdict == Verdict::ExhaustedNone, "(2,5,2) must exhaust with no witness");

        long long grids = 0;
        bool some_free = false;
        oracle::all_rectangles(2, 4, [&](const std::vector<std::vector<int>>& g) {
            ++grids;
            if (!oracle::has_rainbow_c4(g)) some_free = true;
            return true;
        });
        require(grids == 216, "2x4 brute force must visit 216 rectangles");
        require(!some_free, "brute force found a rainbow-C4-free coloring");
    });

    h.run(2, "doubled-block colorings forbid C6 at (6,6) and C10 at (10,10)", 300.0, [&] {
        auto t0 = std::chrono::steady_clock::now();
        EdgeColoring c66 = to_coloring(l2xm_coloring(3, 6));
        long long cycles = 0;
        bool rainbow = false;
        for_each_cycle(c66, 3, false, [&](const CycleCertificate& cyc) {
            ++cycles;
            std::set<int> colors(cyc.colors.begin(), cyc.colors.end());
            if (colors.size() == 6) rainbow = true;
            return true;
        });
        require(cycles == 2400, "K_{6,6} has 2400 six-cycles by enumeration");
        require(cycles == static_cast<long long>(total_cycle_count(6, 6, 3)),
                "enumeration must match the closed form");
        require(!rainbow, "l2xm_coloring(3,6) must have zero rainbow C6");
        require(!find_rainbow_cycle(c66, 3).has_value(), "DFS must agree");
        double part1 =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(part1 < 1.0, "the (6,6) check must finish inside 1 s");

        EdgeColoring c1010 = to_coloring(l2xm_coloring(5, 10));
        require(!find_rainbow_cycle(c1010, 5).has_value(),
                "l2xm_coloring(5,10) must forbid rainbow C10");
    });

    h.run(3, "constructive finder: 10000 x K_{3,9} and 1000 x K_{4,14}", 60.0, [&] {
        std::mt19937_64 rng(20'240'001);
        for (int i = 0; i < 10'000; ++i) {
            EdgeColoring col = to_coloring(random_rectangle(3, 9, rng));
            CycleCertificate cert = constructive_find(col, 3);
            require(is_valid_certificate(col, cert), "K_{3,9} certificate failed validation");
            if (i % 100 == 0)
                require(find_rainbow_cycle(col, 3).has_value(), "DFS disagrees on presence");
        }
        for (int i = 0; i < 1'000; ++i) {
            EdgeColoring col = to_coloring(random_rectangle(4, 14, rng));
            CycleCertificate cert = constructive_find(col, 4);
            require(is_valid_certificate(col, cert), "K_{4,14} certificate failed validation");
        }
    });

    h.run(4, "seven-symbol 3x3 classes: rainbow-free iff intercalate", 60.0, [&] {
        Size7ClassReport report = verify_size7_classes();
        require(report.violations == 0, "biconditional violated");
        require(report.classes_total == 6, "expected 6 isotopy classes at |L| = 7");
    });

    h.run(5, "six-symbol 3x3 classes: sufficient conditions hold", 60.0, [&] {
        Size6ClassReport report = verify_size6_classes();
        require(report.violations == 0, "a sufficient condition was violated");
        require(report.classes_total == 10, "expected 10 isotopy classes at |L| = 6");
    });

    h.run(6, "the K_{8,8} XOR coloring is RAINBOW-FREE via the CLI, 18816 cycles", 1.0, [&] {
        long long cycles = 0;
        EdgeColoring c88 = to_coloring(km8_coloring(8));
        for_each_cycle(c88, 3, false, [&](const CycleCertificate&) {
            ++cycles;
            return true;
        });
        require(cycles == 18816, "K_{8,8} has 18816 six-cycles by enumeration");
        require(cycles == static_cast<long long>(total_cycle_count(8, 8, 3)),
                "enumeration must match the closed form");

        fs::path grid_file = scratch / "km8.grid";
        std::ofstream(grid_file) << km8_coloring(8).format();
        CommandResult check = run_cli("check --in '" + grid_file.string() + "' --k 3", scratch);
        require(check.exit_code == 0, "cmd_check must exit 0 on a forbidding coloring");
        require(check.output.find("RAINBOW-FREE") != std::string::npos,
                "cmd_check must print RAINBOW-FREE");
    });

    h.run(7, "(3,7) witness found; every free 3x7 class has the column-triple structure", 1800.0, [&] {
        SearchOutcome out = decide_membership(3, 7, 3);
        require(out.verdict == Verdict::Found, "(3,7,3) must be Found");
        require(canonical_form(*out.witness) == k37_coloring(),
                "the witness must rederive the frozen constant");
        K37StructureReport report = verify_k37_structure();
        require(report.complete, "class enumeration must finish");
        require(report.classes_total == 1, "exactly one rainbow-free (3,7) class exists");
        require(report.violations_column_triple == 0, "a class lacks an order-3 column triple");
        require(report.violations_disjoint_columns == 0,
                "a class lacks two disjoint column symbol sets");
    });

    h.run(8, "(4,7,3) exhausts with no witness", 1800.0, [&] {
        SearchOutcome out = decide_membership(4, 7, 3);
        require(out.verdict != Verdict::BudgetExceeded, "search must not run out of budget");
        require(out.verdict == Verdict::ExhaustedNone, "(4,7,3) must exhaust with no witness");
    });

    h.run(9, "end to end: fmc --k 3 reproduces the FMC(6) table", 300.0, [&] {
        fs::path report_file = scratch / "fmc.json";
        CommandResult fmc =
            run_cli("fmc --k 3 --out '" + report_file.string() + "'", scratch);
        require(fmc.exit_code == 0, "fmc --k 3 must exit 0");

        std::ifstream in(report_file);
        nlohmann::json j = nlohmann::json::parse(in);
        require(j["budget_exceeded"] == false, "report must be complete");

        std::vector<std::pair<int, int>> members;
        for (const auto& p : j["pairs"]) {
            int m = p["m"], n = p["n"];
            std::string prov = p["provenance"];
            if (p["member"] == true) {
                members.emplace_back(m, n);
                require(p.contains("witness"), "members must carry a witness grid");
                if (n == 6) require(prov == provenance::kConstructionL2xM, "bad (m,6) provenance");
                if (n == 7) require(prov == provenance::kSearchWitness, "bad (3,7) provenance");
                if (n == 8) require(prov == provenance::kConstructionKm8, "bad (m,8) provenance");
            } else if (n == 9 && m == 3) {
                require(prov.find("theorem bound") != std::string::npos,
                        "(3,9) must cite the 5k-6 bound");
            }
        }
        require(members == kFmc6, "the member set must equal the known FMC(6)");
    });

    h.run(10, "property suites: isotopy, round trip, certificates, parity, threads", 300.0, [&] {
        std::mt19937_64 rng(77);

        // 1000 random isotopies leave rainbow counts unchanged
        for (int trial = 0; trial < 100; ++trial) {
            int n = 3 + static_cast<int>(rng() % 3);
            LatinRectangle r = random_rectangle(3, n, rng);
            long long count = count_rainbow_cycles(to_coloring(r), 3);
            for (int i = 0; i < 10; ++i) {
                Isotopy iso = random_isotopy(3, n, rng);
                LatinRectangle moved = apply_isotopy(r, iso.row_perm, iso.col_perm, iso.sym_perm);
                require(count_rainbow_cycles(to_coloring(moved), 3) == count,
                        "rainbow count changed under isotopy");
            }
        }

        // round-trip identity
        for (int i = 0; i < 1'000; ++i) {
            int m = 2 + static_cast<int>(rng() % 3);
            int n = m + static_cast<int>(rng() % 4);
            LatinRectangle r = random_rectangle(m, n, rng);
            require(to_coloring(r).to_rectangle() == r, "round trip failed");
        }

        // certificate re-validation on every Found path
        for (auto [m, n] : {std::pair{3, 6}, {3, 7}, {3, 8}}) {
            SearchOutcome out = decide_membership(m, n, 3);
            require(out.verdict == Verdict::Found && out.witness.has_value(), "expected Found");
            require(!oracle::has_rainbow_c6(oracle::to_grid(*out.witness)),
                    "witness fails the independent rainbow check");
        }
        for (int i = 0; i < 50; ++i) {
            EdgeColoring col = to_coloring(random_rectangle(3, 9, rng));
            auto cert = find_rainbow_cycle(col, 3);
            require(cert.has_value(), "K_{3,9} always contains a rainbow C6");
            require(is_valid_certificate(col, *cert), "DFS certificate failed validation");
        }

        // parity invariants over every cycle of 2k-by-2k colorings
        EdgeColoring c66 = to_coloring(l2xm_coloring(3, 6));
        for_each_cycle(c66, 3, false, [&](const CycleCertificate& cyc) {
            require(quadrant_profile(c66, cyc, 3).parity_ok(), "parity violated in K_{6,6}");
            return true;
        });
        for (int i = 0; i < 20; ++i) {
            EdgeColoring c44 = to_coloring(random_rectangle(4, 4, rng));
            for_each_cycle(c44, 2, false, [&](const CycleCertificate& cyc) {
                require(quadrant_profile(c44, cyc, 2).parity_ok(), "parity violated in K_{4,4}");
                return true;
            });
        }

        // one and two threads agree everywhere it matters
        SearchOptions two{.node_budget = 1'000'000'000ULL, .threads = 2};
        require(decide_membership(3, 7, 3).witness == decide_membership(3, 7, 3, two).witness,
                "witness depends on thread count");
        require(decide_membership(4, 7, 3).verdict == decide_membership(4, 7, 3, two).verdict,
                "verdict depends on thread count");
        require(collect_free_classes(3, 7, 3).classes == collect_free_classes(3, 7, 3, two).classes,
                "collection depends on thread count");
        require(compute_fmc(3, 8, 9).member_set() == compute_fmc(3, 8, 9, two).member_set(),
                "fmc member set depends on thread count");
    });

    std::error_code ec;
    fs::remove_all(scratch, ec);

    if (h.failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << h.failures << " acceptance criteria failed" << std::endl;
    return 1;
}
