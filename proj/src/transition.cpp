#include "qshuffle/transition.hpp"

#include "qshuffle/binary_word.hpp"
#include "qshuffle/free_algebra.hpp"
#include "qshuffle/polynomial.hpp"
#include "qshuffle/shuffle.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qshuffle {

Integer c_entry(const Composition& I, const Composition& J) {
    if (I.degree() != J.degree() || I.length() != J.length()) return 0;
    const auto& is = I.parts();
    const auto& js = J.parts();
    Integer product = 1;
    long j_sum = 0, i_sum = 0;
    for (size_t s = 0; s < is.size(); ++s) {
        j_sum += js[s];
        product *= binomial(j_sum - i_sum - 1, is[s] - 1);
        if (product == 0) return 0;
        i_sum += is[s];
    }
    return product;
}

TransitionMatrix c_matrix(int n, int k) {
    TransitionMatrix m(compositions_of(n, k));
    for (const auto& I : m.index())
        for (const auto& J : m.index()) m.at(I, J) = Rational(c_entry(I, J));
    return m;
}

LinearCombination<Composition> column_expansion(const Composition& J) {
    if (J.empty()) throw std::invalid_argument("column expansion needs a nonempty composition");
    const int k = J.length();
    SparsePolynomial poly = SparsePolynomial::constant(k, 1);
    for (int s = 1; s <= k; ++s) {
        std::vector<int> vars;
        for (int v = s; v <= k; ++v) vars.push_back(v);
        poly = poly * SparsePolynomial::linear_form(k, vars).pow(J.parts()[s - 1] - 1);
    }
    LinearCombination<Composition> out;
    for (const auto& [expo, coeff] : poly.terms()) {
        std::vector<int> parts(expo.size());
        for (size_t s = 0; s < expo.size(); ++s) parts[s] = expo[s] + 1;
        out.add_term(Composition(std::move(parts)), coeff);
    }
    return out;
}

TransitionMatrix c_matrix_by_expansion(int n, int k) {
    TransitionMatrix m(compositions_of(n, k));
    for (const auto& J : m.index())
        for (const auto& [I, coeff] : column_expansion(J)) m.at(I, J) = coeff;
    return m;
}

TransitionMatrix d_matrix_by_inversion(int n, int k) {
    return c_matrix(n, k).inverse().transpose();
}

TransitionMatrix d_matrix_by_generating_function(int n, int k) {
    TransitionMatrix m(compositions_of(n, k));
    for (const auto& I : m.index()) {
        SparsePolynomial poly = SparsePolynomial::constant(k, 1);
        for (int s = 1; s <= k; ++s) {
            SparsePolynomial factor = SparsePolynomial::variable(k, s);
            if (s < k) factor -= SparsePolynomial::variable(k, s + 1);  // y_{k+1} = 0
            poly = poly * factor.pow(I.parts()[s - 1] - 1);
        }
        for (const auto& [expo, coeff] : poly.terms()) {
            std::vector<int> parts(expo.size());
            for (size_t s = 0; s < expo.size(); ++s) parts[s] = expo[s] + 1;
            m.at(I, Composition(std::move(parts))) = coeff;
        }
    }
    return m;
}

TransitionMatrix d_matrix_by_projection(int n, int k) {
    TransitionMatrix m(compositions_of(n, k));
    for (const auto& I : m.index())
        for (const auto& [J, coeff] : word_compositions(project_p(y_monomial(I))))
            m.at(I, J) = coeff;
    return m;
}

TransitionMatrix d_matrix(int n, int k) {
    TransitionMatrix d = d_matrix_by_inversion(n, k);
    if (d != d_matrix_by_generating_function(n, k) || d != d_matrix_by_projection(n, k))
        throw std::logic_error("the three D-matrix constructions disagree");
    return d;
}

namespace {

const TransitionMatrix& cached_matrix(int n, int k, bool invert) {
    static std::map<std::tuple<int, int, bool>, TransitionMatrix> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(n, k, invert);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, invert ? d_matrix(n, k) : c_matrix(n, k)).first;
    return it->second;
}

}  // namespace

const TransitionMatrix& cached_c_matrix(int n, int k) { return cached_matrix(n, k, false); }
const TransitionMatrix& cached_d_matrix(int n, int k) { return cached_matrix(n, k, true); }

LinearCombination<Composition> z_product(const Composition& I, const Composition& J) {
    LinearCombination<Composition> out;
    for (const auto& [word, coeff] : shuffle(word_of_composition(I), word_of_composition(J)))
        out.add_term(composition_of_word(word), coeff);
    return out;
}

LinearCombination<Composition> u_product(const Composition& I, const Composition& J) {
    return shuffle(I, J);
}

LinearCombination<Composition> u_to_z(const Composition& I) {
    if (I.empty()) return LinearCombination<Composition>::term(I);
    LinearCombination<Composition> out;
    const auto& c = cached_c_matrix(I.degree(), I.length());
    const int row = c.row_of(I);
    for (int col = 0; col < c.dim(); ++col)
        out.add_term(c.index()[col], c.at(row, col));
    return out;
}

LinearCombination<Composition> z_to_u(const Composition& J) {
    if (J.empty()) return LinearCombination<Composition>::term(J);
    LinearCombination<Composition> out;
    const auto& d = cached_d_matrix(J.degree(), J.length());
    const int col = d.row_of(J);
    for (int row = 0; row < d.dim(); ++row)
        out.add_term(d.index()[row], d.at(row, col));
    return out;
}

LinearCombination<Composition> z_product_via_u(const Composition& I, const Composition& J) {
    const auto in_u = bilinear_extend(
        [](const Composition& K, const Composition& L) { return u_product(K, L); },
        z_to_u(I), z_to_u(J));
    LinearCombination<Composition> out;
    for (const auto& [M, coeff] : in_u) out.add_scaled(u_to_z(M), coeff);
    return out;
}

}  // namespace qshuffle
