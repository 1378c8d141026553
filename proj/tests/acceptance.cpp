// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Takes the CLI binary as argv[1] so the byte-exact checks go
// through the real command-line surface.

#include "qshuffle/golden_data.hpp"
#include "qshuffle/render.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/transition.hpp"
#include "qshuffle/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qshuffle;

namespace {

std::string g_cli_path;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult result;
    const std::string command = "'" + g_cli_path + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool suite_passes(const std::string& name, SuiteOptions options, std::string& detail) {
    const auto report = run_suite(name, options);
    if (report.passed()) return true;
    for (const auto& check : report.checks)
        if (!check.pass) {
            detail = name + ": " + check.name + " (" + check.counterexample + ")";
            return false;
        }
    return false;
}

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

std::string composition_text(const Composition& I) { return I.str(); }

// -- criterion bodies -------------------------------------------------------

bool golden_matrices(std::string& detail) {
    if (!suite_passes("golden-matrices", {}, detail)) return false;
    const auto data = nlohmann::json::parse(golden::kGoldenMatricesJson);
    for (const auto& kind : {std::string("y"), std::string("c"), std::string("d")})
        for (const auto& block : data.at(kind)) {
            const int n = block.at("n").get<int>();
            const int k = block.at("k").get<int>();
            TransitionMatrix expected(compositions_of(n, k));
            for (int i = 0; i < expected.dim(); ++i)
                for (int j = 0; j < expected.dim(); ++j)
                    expected.at(i, j) =
                        rational_from_string(block.at("entries")[i][j].get<std::string>());
            const auto cli = run_cli("matrices --n " + std::to_string(n) + " --k " +
                                     std::to_string(k) + " --kind " + kind);
            if (cli.exit_code != 0 || cli.output != matrix_text(expected)) {
                detail = "CLI output for " + kind + " n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " is not byte-identical";
                return false;
            }
        }
    return true;
}

bool worked_products(std::string& detail) {
    LinearCombination<Composition> quasi_expected;
    quasi_expected.add_term(comp({2, 1, 1, 2}), 2);
    quasi_expected.add_term(comp({2, 1, 2, 1}), 1);
    quasi_expected.add_term(comp({2, 1, 3}), 1);
    quasi_expected.add_term(comp({2, 2, 2}), 1);
    quasi_expected.add_term(comp({1, 2, 1, 2}), 1);
    quasi_expected.add_term(comp({1, 2, 2, 1}), 2);
    quasi_expected.add_term(comp({1, 2, 3}), 1);
    quasi_expected.add_term(comp({1, 4, 1}), 1);
    quasi_expected.add_term(comp({3, 1, 2}), 1);
    quasi_expected.add_term(comp({3, 2, 1}), 1);
    quasi_expected.add_term(comp({3, 3}), 1);
    if (quasi_shuffle(comp({2, 1}), comp({1, 2})) != quasi_expected) {
        detail = "M product differs from the eleven-term expansion";
        return false;
    }

    LinearCombination<Composition> z1_expected;
    z1_expected.add_term(comp({1, 2, 1}), 1);
    z1_expected.add_term(comp({2, 1, 1}), 3);
    if (z_product(comp({1}), comp({2, 1})) != z1_expected) {
        detail = "Z_1 Z_21 differs";
        return false;
    }

    LinearCombination<Composition> z2_expected;
    z2_expected.add_term(comp({1, 1, 2}), 2);
    z2_expected.add_term(comp({1, 2, 1}), 2);
    if (z_product(comp({1}), comp({1, 2})) != z2_expected) {
        detail = "Z_1 Z_12 differs";
        return false;
    }

    const struct {
        const char* args;
        std::string expected;
    } cli_cases[] = {
        {"product --basis M 2,1 1,2", lincomb_text(quasi_expected, "M", composition_text)},
        {"product --basis Z 1 2,1", lincomb_text(z1_expected, "Z", composition_text)},
        {"product --basis Z 1 1,2", lincomb_text(z2_expected, "Z", composition_text)},
    };
    for (const auto& c : cli_cases) {
        const auto cli = run_cli(c.args);
        if (cli.exit_code != 0 || cli.output != c.expected + "\n") {
            detail = std::string("CLI '") + c.args + "' printed '" + cli.output + "'";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    struct Criterion {
        int number;
        std::string name;
        double budget_seconds;
        std::function<bool(std::string&)> run;
    };

    const std::vector<Criterion> criteria = {
        {1, "golden matrices (byte-exact via CLI)", 1.0, golden_matrices},
        {2, "worked products", 1.0, worked_products},
        {3, "Stirling block sums n<=8", 10.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 8;
             return suite_passes("stirling", o, d);
         }},
        {4, "three-route agreement for C and D, n<=7", 60.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 7;
             return suite_passes("c-three-routes", o, d) &&
                    suite_passes("d-three-routes", o, d);
         }},
        {5, "Z-basis shuffle law vs U route, degree<=7", 60.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 7;
             return suite_passes("z-shuffle", o, d);
         }},
        {6, "set-partition coproduct theorem, degree<=6", 30.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 6;
             return suite_passes("wsym-coproduct", o, d);
         }},
        {7, "Bell coefficients and the two-letter realization, n<=7", 30.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 7;
             return suite_passes("bell", o, d) && suite_passes("snab", o, d);
         }},
        {8, "mould product identities, arity<=4 weight<=6", 60.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 4;
             o.max_weight = 6;
             return suite_passes("guo-xie", o, d);
         }},
        {9, "colored Z-basis theorem, arity<=4 weight<=5", 120.0,
         [](std::string& d) {
             SuiteOptions o;
             o.max_n = 4;
             o.max_weight = 5;
             return suite_passes("colored-theorem", o, d);
         }},
        {10, "Lyndon word lists", 30.0,
         [](std::string& d) { return suite_passes("lyndon", {}, d); }},
    };

    bool all_pass = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > criterion.budget_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(seconds) + "s exceeds the " +
                     std::to_string(criterion.budget_seconds) + "s budget";
        }
        all_pass = all_pass && ok;
        std::ostringstream line;
        line << "criterion " << criterion.number << " (" << criterion.name
             << "): " << (ok ? "PASS" : "FAIL");
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " [" << seconds << "s]";
        if (!ok && !detail.empty()) line << " — " << detail;
        std::cout << line.str() << "\n";
    }
    std::cout << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all_pass ? 0 : 1;
}
