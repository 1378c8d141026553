#include "qshuffle/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qshuffle {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    // Row-by-row; inputs stay small (n <= 16 or so) but exact anyway.
    std::vector<Integer> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Integer bell_number(int n) {
    Integer total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

}  // namespace qshuffle
