#include "qshuffle/verify.hpp"

#include "qshuffle/bell.hpp"
#include "qshuffle/binary_word.hpp"
#include "qshuffle/free_algebra.hpp"
#include "qshuffle/golden_data.hpp"
#include "qshuffle/render.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/transition.hpp"
#include "qshuffle/wsym.hpp"
#include "qshuffle/y_basis.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>
#include <tuple>

namespace qshuffle {

bool VerificationReport::passed() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json check_list = nlohmann::ordered_json::array();
    for (const auto& check : checks) {
        nlohmann::ordered_json entry = {{"name", check.name}, {"pass", check.pass}};
        if (!check.pass) entry["counterexample"] = check.counterexample;
        check_list.push_back(std::move(entry));
    }
    return {{"suite", suite},
            {"params", params},
            {"checks", check_list},
            {"passed", passed()},
            {"elapsed_ms", elapsed_ms}};
}

namespace {

using Failure = std::optional<std::string>;
using Task = std::function<Failure()>;
using TaskList = std::vector<std::pair<std::string, Task>>;

constexpr Failure kPass = std::nullopt;

std::vector<CheckResult> run_tasks(const TaskList& tasks) {
    std::vector<CheckResult> results(tasks.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            const size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            CheckResult& r = results[i];
            r.name = tasks[i].first;
            try {
                Failure failure = tasks[i].second();
                r.pass = !failure.has_value();
                if (failure) r.counterexample = *failure;
            } catch (const std::exception& e) {
                r.pass = false;
                r.counterexample = std::string("exception: ") + e.what();
            }
        }
    };
    unsigned pool = std::thread::hardware_concurrency();
    if (pool == 0) pool = 1;
    pool = std::min<unsigned>(std::min(pool, 8u), std::max<size_t>(tasks.size(), 1));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < pool; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return results;
}

std::string tag(int n) { return "n=" + std::to_string(n); }
std::string tag(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

Failure expect_equal_matrices(const TransitionMatrix& a, const TransitionMatrix& b,
                              const std::string& what) {
    if (a.index() != b.index()) return what + ": index order differs";
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (a.at(i, j) != b.at(i, j))
                return what + ": entry (" + a.index()[i].str() + ")x(" + a.index()[j].str() +
                       ") is " + to_string(a.at(i, j)) + " vs " + to_string(b.at(i, j));
    return kPass;
}

// --- y-triangular ------------------------------------------------------

TaskList y_triangular_tasks(int max_n) {
    TaskList tasks;
    for (int n = 1; n <= max_n; ++n)
        tasks.emplace_back("y-triangular/" + tag(n), [n]() -> Failure {
            const YBasisTable table(n);
            for (const auto& [I, lc] : table.table()) {
                if (lc.coefficient(I) != 1)
                    return "Y_" + I.str() + " has diagonal coefficient " +
                           to_string(lc.coefficient(I));
                if (is_anti_lyndon(I) && lc.size() != 1)
                    return "anti-Lyndon Y_" + I.str() + " is not a single word";
                for (const auto& [J, coeff] : lc) {
                    if (!is_integer(coeff) || J.length() != I.length() || J < I)
                        return "Y_" + I.str() + " has invalid term " + to_string(coeff) +
                               "*W_" + J.str();
                    // Entries are nonnegative through degree 5; from degree 6
                    // on signed entries occur (first: -6 W_{3111} in Y_{1221}).
                    if (n <= 5 && coeff < 0)
                        return "Y_" + I.str() + " has a negative entry " + to_string(coeff) +
                               "*W_" + J.str() + " below degree 6";
                }
            }
            for (int k = 1; k <= n; ++k)
                if (!y_matrix(table, k).is_upper_unitriangular())
                    return "block " + tag(n, k) + " is not upper unitriangular";
            return kPass;
        });
    return tasks;
}

// --- stirling ----------------------------------------------------------

TaskList stirling_tasks(int max_n) {
    TaskList tasks;
    for (int n = 1; n <= max_n; ++n)
        tasks.emplace_back("stirling/" + tag(n), [n]() -> Failure {
            const YBasisTable table(n);
            for (int k = 1; k <= n; ++k) {
                const Rational expected{stirling2(n, k)};
                const Rational y_sum = y_matrix(table, k).entry_sum();
                if (y_sum != expected)
                    return "Y block " + tag(n, k) + " sums to " + to_string(y_sum) +
                           ", S(n,k) = " + to_string(expected);
                const Rational c_sum = c_matrix(n, k).entry_sum();
                if (c_sum != expected)
                    return "C block " + tag(n, k) + " sums to " + to_string(c_sum) +
                           ", S(n,k) = " + to_string(expected);
            }
            return kPass;
        });
    return tasks;
}

// --- c-three-routes ----------------------------------------------------

TaskList c_routes_tasks(int max_n) {
    TaskList tasks;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            tasks.emplace_back("c-three-routes/" + tag(n, k), [n, k]() -> Failure {
                const auto formula = c_matrix(n, k);
                if (auto diff = expect_equal_matrices(formula, c_matrix_by_counting(n, k),
                                                      "binomial vs counting"))
                    return diff;
                if (auto diff = expect_equal_matrices(formula, c_matrix_by_expansion(n, k),
                                                      "binomial vs expansion"))
                    return diff;
                if (!formula.is_lower_unitriangular())
                    return "C block is not lower unitriangular";
                return kPass;
            });
    return tasks;
}

// --- d-three-routes ----------------------------------------------------

TaskList d_routes_tasks(int max_n) {
    TaskList tasks;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            tasks.emplace_back("d-three-routes/" + tag(n, k), [n, k]() -> Failure {
                const auto inv = d_matrix_by_inversion(n, k);
                if (auto diff = expect_equal_matrices(inv, d_matrix_by_generating_function(n, k),
                                                      "inversion vs generating function"))
                    return diff;
                if (auto diff = expect_equal_matrices(inv, d_matrix_by_projection(n, k),
                                                      "inversion vs projection"))
                    return diff;
                if (!inv.is_upper_unitriangular())
                    return "D block is not upper unitriangular";
                for (int i = 0; i < inv.dim(); ++i)
                    for (int j = 0; j < inv.dim(); ++j)
                        if (!is_integer(inv.at(i, j)))
                            return "D entry is not an integer";
                return kPass;
            });
    return tasks;
}

// --- z-shuffle ---------------------------------------------------------

TaskList z_shuffle_tasks(int max_degree) {
    TaskList tasks;
    for (int a = 1; a < max_degree; ++a)
        for (int b = a; a + b <= max_degree; ++b)
            tasks.emplace_back("z-shuffle/deg=(" + std::to_string(a) + "," +
                                   std::to_string(b) + ")",
                               [a, b]() -> Failure {
                                   for (const auto& I : compositions_of(a))
                                       for (const auto& J : compositions_of(b)) {
                                           if (z_product(I, J) != z_product_via_u(I, J))
                                               return "Z_" + I.str() + " * Z_" + J.str() +
                                                      ": direct rule differs from the U route";
                                       }
                                   return kPass;
                               });
    return tasks;
}

// --- wsym-coproduct ----------------------------------------------------

// The pair list of Delta X_{(2,1,1)} restricted to nonempty sides, as
// signed words; negative entries are overlined letters.
const std::vector<std::pair<std::vector<int>, std::vector<int>>>& x211_pairs() {
    static const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
        {{1, -2, -3}, {-4}}, {{1, -2, -4}, {-3}}, {{1, -2}, {-3, -4}},
        {{-2, 1, -3}, {-4}}, {{1, -3, -4}, {-2}}, {{1, -3}, {-2, -4}},
        {{-2, 1, -4}, {-3}}, {{-3, 1, -4}, {-2}}, {{1, -4}, {-2, -3}},
    };
    return pairs;
}

SignedWord signed_word_from_ints(const std::vector<int>& raw) {
    std::vector<SignedLetter> letters;
    for (int v : raw) letters.push_back({std::abs(v), v < 0});
    return SignedWord(std::move(letters));
}

Failure check_x211_pair_list() {
    LinearCombination<std::pair<SignedWord, SignedWord>> expected;
    for (const auto& [left, right] : x211_pairs()) {
        expected.add_term({signed_word_from_ints(left), signed_word_from_ints(right)}, 1);
        expected.add_term({signed_word_from_ints(right), signed_word_from_ints(left)}, 1);
    }
    LinearCombination<std::pair<SignedWord, SignedWord>> computed;
    for (const auto& [pi, coeff] : x_element(Composition({2, 1, 1})))
        for (const auto& [left, right] : co_splits(pi)) {
            if (left.empty() || right.empty()) continue;
            computed.add_term({signed_word_of_blocks(left), signed_word_of_blocks(right)},
                              coeff);
        }
    if (computed.size() != 18) return "expected 18 ordered pairs, found " +
                                      std::to_string(computed.size());
    if (!(computed == expected)) return std::string("pair list differs from the golden list");
    return kPass;
}

TaskList wsym_tasks(int max_n) {
    TaskList tasks;
    for (int n = 1; n <= max_n; ++n)
        tasks.emplace_back("wsym-coproduct/theorem/" + tag(n), [n]() -> Failure {
            for (const auto& J : compositions_of(n)) {
                const auto check = verify_theorem_coproduct(J);
                if (!check.ok) return "X_" + J.str() + ": " + check.counterexample;
            }
            return kPass;
        });
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        tasks.emplace_back("wsym-coproduct/coalgebra/" + tag(n), [n]() -> Failure {
            using Triple = std::tuple<SetPartition, SetPartition, SetPartition>;
            for (const auto& pi : set_partitions(n)) {
                const auto delta = coproduct(pi);
                LinearCombination<PartitionPair> swapped;
                for (const auto& [pair, coeff] : delta)
                    swapped.add_term({pair.second, pair.first}, coeff);
                if (!(swapped == delta)) return "coproduct of " + pi.str() + " not cocommutative";

                LinearCombination<Triple> left, right;
                for (const auto& [pair, coeff] : delta) {
                    for (const auto& [inner, c2] : coproduct(pair.first))
                        left.add_term({inner.first, inner.second, pair.second}, coeff * c2);
                    for (const auto& [inner, c2] : coproduct(pair.second))
                        right.add_term({pair.first, inner.first, inner.second}, coeff * c2);
                }
                if (!(left == right)) return "coproduct of " + pi.str() + " not coassociative";
            }
            return kPass;
        });
    tasks.emplace_back("wsym-coproduct/x211-pair-list", check_x211_pair_list);
    return tasks;
}

// --- bell --------------------------------------------------------------

TaskList bell_tasks(int max_n) {
    TaskList tasks;
    for (int n = 1; n <= max_n; ++n)
        tasks.emplace_back("bell/coefficients/" + tag(n), [n]() -> Failure {
            const auto b = bell_polynomial(n);
            const auto all = compositions_of(n);
            if (b.size() != all.size()) return "support is not all compositions";
            for (const auto& I : all) {
                Rational row_sum = 0;
                for (const auto& J : compositions_of(n, I.length()))
                    row_sum += Rational(c_entry(I, J));
                const Rational closed{bell_coefficient_closed(I)};
                const Rational rec = b.coefficient(I);
                if (rec != row_sum || rec != closed)
                    return "beta_" + I.str() + ": recursion " + to_string(rec) + ", row sum " +
                           to_string(row_sum) + ", closed " + to_string(closed);
            }
            return kPass;
        });
    for (int n = 2; n <= max_n; ++n)
        tasks.emplace_back("bell/block-shapes/" + tag(n), [n]() -> Failure {
            if (n >= 2) {
                const auto pascal = c_matrix(n, 2);
                for (int r = 0; r < pascal.dim(); ++r)
                    for (int c = 0; c < pascal.dim(); ++c)
                        if (pascal.at(r, c) != Rational(binomial(n - 2 - c, n - 2 - r)))
                            return "k=2 block is not the Pascal triangle at " + tag(n, 2);
            }
            const auto ones = c_matrix(n, n - 1);
            for (int r = 0; r < ones.dim(); ++r)
                for (int c = 0; c < ones.dim(); ++c)
                    if (ones.at(r, c) != Rational(r >= c ? 1 : 0))
                        return "k=n-1 block is not all-ones lower triangular at " +
                               tag(n, n - 1);
            return kPass;
        });
    return tasks;
}

// --- snab --------------------------------------------------------------

TaskList snab_tasks(int max_n) {
    TaskList tasks;
    for (int n = 0; n <= max_n; ++n)
        tasks.emplace_back("snab/triple-equality/" + tag(n), [n]() -> Failure {
            const auto direct = s_word(n);
            FreeAlgebraElement substituted;
            for (const auto& [I, coeff] : bell_polynomial(n))
                substituted.add_scaled(y_monomial(I), coeff);
            if (!(direct == substituted))
                return "binomial expansion differs from the Bell substitution";
            if (!(direct == l_power(n)))
                return "binomial expansion differs from L^n(1)";
            return kPass;
        });
    for (int n = 0; n + 1 <= max_n; ++n)
        tasks.emplace_back("snab/psi-recursion/" + tag(n + 1), [n]() -> Failure {
            // (n+1) S_{n+1} = sum_k S_{n-k} Psi_{k+1} with S_m = s_word(m)/m!.
            FreeAlgebraElement lhs = s_word(n + 1);
            lhs *= Rational(n + 1) / Rational(factorial(n + 1));
            FreeAlgebraElement rhs;
            for (int k = 0; k <= n; ++k) {
                FreeAlgebraElement part = concat_product(s_word(n - k), psi_word(k + 1));
                part *= Rational(1) / Rational(factorial(n - k));
                rhs += part;
            }
            if (!(lhs == rhs)) return std::string("recursion fails");
            return kPass;
        });
    return tasks;
}

// --- guo-xie -----------------------------------------------------------

std::vector<std::pair<ColoredPermutation, ColoredPermutation>> colored_pairs(int n, int m,
                                                                             int max_weight) {
    std::vector<std::pair<ColoredPermutation, ColoredPermutation>> out;
    for (const auto& sigma : permutations_of(n))
        for (const auto& tau : permutations_of(m))
            for (int ws = n; ws + m <= max_weight; ++ws)
                for (const auto& s : compositions_of(ws, n))
                    for (int wt = m; ws + wt <= max_weight; ++wt)
                        for (const auto& t : compositions_of(wt, m))
                            out.emplace_back(ColoredPermutation(sigma, s.parts()),
                                             ColoredPermutation(tau, t.parts()));
    return out;
}

TaskList guo_xie_tasks(int max_arity, int max_weight, Convention convention) {
    TaskList tasks;
    tasks.emplace_back("guo-xie/f1*f1", []() -> Failure {
        const RationalMould lhs = mu(f_fraction({1}), f_fraction({1}));
        const RationalMould rhs = f_fraction({1, 2}) + f_fraction({2, 1});
        if (!lhs.equals(rhs)) return std::string("mu(f_1,f_1) != f_12 + f_21");
        return kPass;
    });
    for (int n = 1; n < max_arity; ++n)
        for (int m = 1; n + m <= max_arity; ++m)
            tasks.emplace_back("guo-xie/sizes=(" + std::to_string(n) + "," +
                                   std::to_string(m) + ")",
                               [n, m, max_weight, convention]() -> Failure {
                                   for (const auto& [p, q] : colored_pairs(n, m, max_weight)) {
                                       const auto check = verify_mould_identity(p, q, convention);
                                       if (!check.ok) return check.detail;
                                   }
                                   return kPass;
                               });
    return tasks;
}

// --- colored-theorem ---------------------------------------------------

// The y-generating-function form of the colored change of basis:
//   sum_J y^(J-1) Z_{sigma,J} = sum_I prod_s (y_s - y_{s-1})^(i_s-1) F_{sigma,I}
// with y_0 = 0. Expanding the right side and collecting the coefficient
// of y^(J-1) must reproduce the F-expansion of Z_{sigma,J}; the expansion
// route is independent of the matrix inversion used by colored_z_in_f.
Failure check_generating_identity(const std::vector<int>& sigma, int max_degree) {
    const int n = static_cast<int>(sigma.size());
    for (int d = n; d <= max_degree; ++d) {
        std::map<Composition, LinearCombination<ColoredPermutation>> rhs;
        for (const auto& I : compositions_of(d, n)) {
            SparsePolynomial poly = SparsePolynomial::constant(n, 1);
            for (int s = 1; s <= n; ++s) {
                SparsePolynomial factor = SparsePolynomial::variable(n, s);
                if (s > 1) factor -= SparsePolynomial::variable(n, s - 1);  // y_0 = 0
                poly = poly * factor.pow(I.parts()[s - 1] - 1);
            }
            for (const auto& [expo, coeff] : poly.terms()) {
                std::vector<int> parts(expo.size());
                for (size_t s = 0; s < expo.size(); ++s) parts[s] = expo[s] + 1;
                rhs[Composition(parts)].add_term(ColoredPermutation(sigma, I.parts()), coeff);
            }
        }
        for (const auto& J : compositions_of(d, n)) {
            auto it = rhs.find(J);
            const LinearCombination<ColoredPermutation> empty;
            const auto& expanded = it == rhs.end() ? empty : it->second;
            if (expanded != colored_z_in_f(ColoredPermutation(sigma, J.parts())))
                return "generating identity fails at color word " + J.str();
        }
    }
    return kPass;
}

TaskList colored_theorem_tasks(int max_arity, int max_weight, Convention convention) {
    TaskList tasks;
    for (int n = 1; n < max_arity; ++n)
        for (int m = 1; n + m <= max_arity; ++m)
            tasks.emplace_back(
                "colored-theorem/routes/sizes=(" + std::to_string(n) + "," +
                    std::to_string(m) + ")",
                [n, m, max_weight, convention]() -> Failure {
                    for (const auto& [p, q] : colored_pairs(n, m, max_weight)) {
                        if (colored_z_product_by_shuffle(p, q, convention) !=
                            colored_z_product_by_f(p, q))
                            return "routes differ for " + p.str() + " * " + q.str();
                        const auto mould = verify_mould_identity(p, q, convention);
                        if (!mould.ok) return "not multiplicative: " + mould.detail;
                    }
                    return kPass;
                });
    for (int n = 1; n <= std::min(max_arity, 3); ++n)
        for (const auto& sigma : permutations_of(n)) {
            std::string name = "colored-theorem/genfun/sigma=";
            for (int v : sigma) name += std::to_string(v);
            tasks.emplace_back(name, [sigma]() { return check_generating_identity(sigma, 6); });
        }
    return tasks;
}

// --- golden-matrices ---------------------------------------------------

TaskList golden_tasks() {
    TaskList tasks;
    const auto data = nlohmann::json::parse(golden::kGoldenMatricesJson);
    for (const auto& kind : {std::string("y"), std::string("c"), std::string("d")}) {
        for (const auto& block : data.at(kind)) {
            const int n = block.at("n").get<int>();
            const int k = block.at("k").get<int>();
            tasks.emplace_back("golden-matrices/" + kind + "/" + tag(n, k),
                               [kind, n, k, block]() -> Failure {
                                   TransitionMatrix expected(compositions_of(n, k));
                                   const auto& order = block.at("order");
                                   for (int i = 0; i < expected.dim(); ++i) {
                                       if (expected.index()[i].parts() !=
                                           order[i].get<std::vector<int>>())
                                           return std::string("index order differs from the data file");
                                       for (int j = 0; j < expected.dim(); ++j)
                                           expected.at(i, j) = rational_from_string(
                                               block.at("entries")[i][j].get<std::string>());
                                   }
                                   const TransitionMatrix computed =
                                       kind == "y"   ? y_matrix(n, k)
                                       : kind == "c" ? c_matrix(n, k)
                                                     : d_matrix(n, k);
                                   if (auto diff = expect_equal_matrices(computed, expected,
                                                                         kind + " " + tag(n, k)))
                                       return diff;
                                   if (matrix_text(computed) != matrix_text(expected))
                                       return std::string("text rendering differs");
                                   return kPass;
                               });
        }
    }
    return tasks;
}

// --- lyndon ------------------------------------------------------------

TaskList lyndon_tasks(int max_n) {
    TaskList tasks;
    tasks.emplace_back("lyndon/length-6-lists", []() -> Failure {
        const std::vector<std::string> words = {"aaaaab", "aaaabb", "aaabab",
                                                "aaabbb", "aababb", "aabbab",
                                                "aabbbb", "ababbb", "abbbbb"};
        const std::vector<std::vector<int>> comps = {{6},          {5, 1},    {4, 2},
                                                     {4, 1, 1},    {3, 2, 1}, {3, 1, 2},
                                                     {3, 1, 1, 1}, {2, 2, 1, 1},
                                                     {2, 1, 1, 1, 1}};
        const auto generated = lyndon_words(6);
        if (generated.size() != words.size())
            return "expected 9 Lyndon words of length 6, got " +
                   std::to_string(generated.size());
        for (size_t i = 0; i < words.size(); ++i) {
            if (generated[i].str() != words[i])
                return "word " + std::to_string(i) + " is " + generated[i].str() + ", expected " +
                       words[i];
            if (composition_of_word(generated[i]).parts() != comps[i])
                return "encoding of " + words[i] + " differs from the composition list";
        }
        return kPass;
    });
    for (int n = 1; n <= max_n; ++n)
        tasks.emplace_back("lyndon/factorization/" + tag(n), [n]() -> Failure {
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                std::vector<uint8_t> bits;
                for (int i = 0; i < n; ++i) bits.push_back((mask >> i) & 1ul);
                const BinaryWord w(bits);
                const auto factors = lyndon_factorization(w);
                BinaryWord joined;
                for (size_t t = 0; t < factors.size(); ++t) {
                    if (!is_lyndon(factors[t])) return "factor of " + w.str() + " is not Lyndon";
                    if (t && factors[t - 1] < factors[t])
                        return "factors of " + w.str() + " are not weakly decreasing";
                    joined = joined.concat(factors[t]);
                }
                if (joined != w) return "factors of " + w.str() + " do not concatenate back";
                if (w.ends_with_b())
                    for (const auto& f : factors)
                        if (!f.ends_with_b()) return "factor of " + w.str() + " ends in a";
            }
            return kPass;
        });
    for (int n = 1; n <= max_n; ++n)
        tasks.emplace_back("lyndon/enumeration/" + tag(n), [n]() -> Failure {
            std::vector<BinaryWord> by_rotation;
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                std::vector<uint8_t> bits;
                for (int i = 0; i < n; ++i) bits.push_back((mask >> i) & 1ul);
                BinaryWord w(bits);
                if (is_lyndon(w)) by_rotation.push_back(std::move(w));
            }
            std::sort(by_rotation.begin(), by_rotation.end());
            if (lyndon_words(n) != by_rotation)
                return std::string("generation disagrees with the rotation definition");

            std::vector<BinaryWord> anti_lyndon_words;
            for (const auto& I : compositions_of(n))
                if (is_anti_lyndon(I)) anti_lyndon_words.push_back(word_of_composition(I));
            std::sort(anti_lyndon_words.begin(), anti_lyndon_words.end());
            std::vector<BinaryWord> ending_in_b;
            for (const auto& w : by_rotation)
                if (w.ends_with_b()) ending_in_b.push_back(w);
            if (anti_lyndon_words != ending_in_b)
                return std::string(
                    "anti-Lyndon compositions do not match Lyndon words ending in b");
            return kPass;
        });
    return tasks;
}

struct SuiteSpec {
    int default_max_n = 0;
    int default_max_weight = 0;
    bool colored = false;
};

const std::map<std::string, SuiteSpec>& suite_specs() {
    static const std::map<std::string, SuiteSpec> specs = {
        {"y-triangular", {8, 0, false}},
        {"stirling", {8, 0, false}},
        {"c-three-routes", {7, 0, false}},
        {"d-three-routes", {7, 0, false}},
        {"z-shuffle", {7, 0, false}},
        {"wsym-coproduct", {6, 0, false}},
        {"bell", {7, 0, false}},
        {"snab", {7, 0, false}},
        {"guo-xie", {4, 6, true}},
        {"colored-theorem", {4, 5, true}},
        {"golden-matrices", {0, 0, false}},
        {"lyndon", {12, 0, false}},
    };
    return specs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, spec] : suite_specs()) out.push_back(name);
        return out;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto spec_it = suite_specs().find(name);
    if (spec_it == suite_specs().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    const SuiteSpec& spec = spec_it->second;
    const int max_n = options.max_n > 0 ? options.max_n : spec.default_max_n;
    const int max_weight = options.max_weight > 0 ? options.max_weight : spec.default_max_weight;
    const Convention convention = options.convention;

    VerificationReport report;
    report.suite = name;
    if (spec.default_max_n > 0) report.params["max_n"] = max_n;
    if (spec.colored) {
        report.params["max_weight"] = max_weight;
        report.params["convention"] = convention == Convention::suffix ? "suffix" : "prefix";
    }
    if (report.params.is_null()) report.params = nlohmann::ordered_json::object();

    TaskList tasks;
    if (name == "y-triangular") tasks = y_triangular_tasks(max_n);
    else if (name == "stirling") tasks = stirling_tasks(max_n);
    else if (name == "c-three-routes") tasks = c_routes_tasks(max_n);
    else if (name == "d-three-routes") tasks = d_routes_tasks(max_n);
    else if (name == "z-shuffle") tasks = z_shuffle_tasks(max_n);
    else if (name == "wsym-coproduct") tasks = wsym_tasks(max_n);
    else if (name == "bell") tasks = bell_tasks(max_n);
    else if (name == "snab") tasks = snab_tasks(max_n);
    else if (name == "guo-xie") tasks = guo_xie_tasks(max_n, max_weight, convention);
    else if (name == "colored-theorem") tasks = colored_theorem_tasks(max_n, max_weight, convention);
    else if (name == "golden-matrices") tasks = golden_tasks();
    else if (name == "lyndon") tasks = lyndon_tasks(max_n);

    const auto start = std::chrono::steady_clock::now();
    report.checks = run_tasks(tasks);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace qshuffle
