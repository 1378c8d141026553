#include "qshuffle/bell.hpp"

#include <stdexcept>
#include <vector>

namespace qshuffle {

LinearCombination<Composition> bell_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("Bell polynomial index must be nonnegative");
    std::vector<LinearCombination<Composition>> b;
    b.push_back(LinearCombination<Composition>::term(Composition()));
    for (int m = 0; m < n; ++m) {
        // B_{m+1} = sum_{k=0}^{m} binom(m,k) B_{m-k} Y_{k+1}.
        LinearCombination<Composition> next;
        for (int k = 0; k <= m; ++k) {
            const Rational coeff{binomial(m, k)};
            for (const auto& [I, c] : b[static_cast<size_t>(m - k)])
                next.add_term(I.appended(k + 1), c * coeff);
        }
        b.push_back(std::move(next));
    }
    return b[static_cast<size_t>(n)];
}

Integer bell_coefficient_closed(const Composition& I) {
    const auto& parts = I.parts();
    Integer product = 1;
    long sum = parts.empty() ? 0 : parts[0];
    for (size_t s = 1; s < parts.size(); ++s) {
        product *= binomial(sum + parts[s] - 1, sum);
        sum += parts[s];
    }
    return product;
}

}  // namespace qshuffle
