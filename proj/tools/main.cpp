#include "qshuffle/bell.hpp"
#include "qshuffle/binary_word.hpp"
#include "qshuffle/mould.hpp"
#include "qshuffle/render.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/transition.hpp"
#include "qshuffle/verify.hpp"
#include "qshuffle/y_basis.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace qshuffle;

constexpr int kMatrixCap = 8;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Convention parse_convention(const std::string& name) {
    if (name == "suffix") return Convention::suffix;
    if (name == "prefix") return Convention::prefix;
    throw UsageError("unknown convention '" + name + "'");
}

int cmd_matrices(int n, int k, const std::string& kind, const std::string& format) {
    if (n < 1 || k < 1 || k > n || n > kMatrixCap)
        throw UsageError("need 1 <= k <= n <= " + std::to_string(kMatrixCap));
    TransitionMatrix m = kind == "y"   ? y_matrix(n, k)
                         : kind == "c" ? c_matrix(n, k)
                                       : d_matrix(n, k);
    if (format == "json")
        std::cout << matrix_json(m, n, k, kind).dump(2) << "\n";
    else
        std::cout << matrix_text(m);
    return 0;
}

int cmd_product(const std::string& basis, const std::string& left, const std::string& right,
                const std::string& format, Convention convention) {
    const auto comp_text = [](const Composition& I) { return I.str(); };
    const auto colored_text = [](const ColoredPermutation& p) { return p.str(); };

    if (basis == "M" || basis == "U" || basis == "Z") {
        const Composition I = parse_composition(left);
        const Composition J = parse_composition(right);
        const auto product = basis == "M"   ? quasi_shuffle(I, J)
                             : basis == "U" ? u_product(I, J)
                                            : z_product(I, J);
        if (format == "json")
            std::cout << lincomb_json(product, basis, composition_json).dump(2) << "\n";
        else
            std::cout << lincomb_text(product, basis, comp_text) << "\n";
        return 0;
    }

    const ColoredPermutation p = parse_colored_permutation(left);
    const ColoredPermutation q = parse_colored_permutation(right);
    const auto product =
        basis == "Fc" ? colored_f_product(p, q) : colored_z_product(p, q, convention);
    if (format == "json")
        std::cout << lincomb_json(product, basis, colored_permutation_json).dump(2) << "\n";
    else
        std::cout << lincomb_text(product, basis, colored_text) << "\n";
    return 0;
}

int cmd_bell(int n, const std::string& format) {
    if (n < 0 || n > kMatrixCap) throw UsageError("need 0 <= n <= " + std::to_string(kMatrixCap));
    const auto b = bell_polynomial(n);
    if (format == "json")
        std::cout << lincomb_json(b, "Y", composition_json).dump(2) << "\n";
    else
        std::cout << lincomb_text(b, "Y", [](const Composition& I) { return I.str(); }) << "\n";
    return 0;
}

int cmd_lyndon(int n, const std::string& format) {
    if (n < 1 || n > 16) throw UsageError("need 1 <= n <= 16");
    const auto words = lyndon_words(n);
    if (format == "json") {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& w : words) {
            nlohmann::ordered_json entry = {{"word", w.str()}};
            if (w.ends_with_b())
                entry["composition"] = composition_of_word(w).parts();
            list.push_back(std::move(entry));
        }
        std::cout << nlohmann::ordered_json{{"length", n}, {"words", list}}.dump(2) << "\n";
    } else {
        for (const auto& w : words) {
            std::cout << w.str();
            if (w.ends_with_b()) std::cout << "  " << composition_of_word(w).str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, int max_weight, Convention convention) {
    SuiteOptions options;
    options.max_n = max_n;
    options.max_weight = max_weight;
    options.convention = convention;
    VerificationReport report;
    try {
        report = run_suite(suite, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << report.to_json().dump(2) << "\n";
    return report.passed() ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic shuffle bases of quasi-symmetric functions"};
    app.require_subcommand(1);

    int n = 0, k = 1, max_n = -1, max_weight = -1;
    std::string kind = "c", basis = "M", format = "text", convention_name = "suffix";
    std::string suite, left, right;

    auto* matrices = app.add_subcommand("matrices", "Print a transition-matrix block");
    matrices->add_option("--n", n, "degree")->required();
    matrices->add_option("--k", k, "number of parts")->required();
    matrices->add_option("--kind", kind, "y, c or d")
        ->check(CLI::IsMember({"y", "c", "d"}));
    matrices->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* product = app.add_subcommand("product", "Expand a product in a chosen basis");
    product->add_option("--basis", basis, "M, U, Z, Fc or Zc")
        ->check(CLI::IsMember({"M", "U", "Z", "Fc", "Zc"}));
    product->add_option("left", left, "left operand")->required();
    product->add_option("right", right, "right operand")->required();
    product->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    product->add_option("--convention", convention_name)
        ->check(CLI::IsMember({"suffix", "prefix"}));

    auto* bell = app.add_subcommand("bell", "Noncommutative Bell polynomial");
    bell->add_option("--n", n, "degree")->required();
    bell->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon words and their compositions");
    lyndon->add_option("--n", n, "word length")->required();
    lyndon->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)->required();
    verify->add_option("--max-n", max_n, "cap for the suite parameter");
    verify->add_option("--max-weight", max_weight, "weight cap for colored suites");
    verify->add_option("--convention", convention_name)
        ->check(CLI::IsMember({"suffix", "prefix"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Convention convention = parse_convention(convention_name);
        if (matrices->parsed()) return cmd_matrices(n, k, kind, format);
        if (product->parsed()) return cmd_product(basis, left, right, format, convention);
        if (bell->parsed()) return cmd_bell(n, format);
        if (lyndon->parsed()) return cmd_lyndon(n, format);
        if (verify->parsed()) return cmd_verify(suite, max_n, max_weight, convention);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return 0;
}
