#pragma once

#include "qshuffle/colored_permutation.hpp"
#include "qshuffle/linear_combination.hpp"
#include "qshuffle/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace qshuffle {

// Exact rational function of u_1..u_n: a sparse polynomial numerator over
// a multiset of linear-form factors u_{i1}+...+u_{ik}. Denominators stay
// factored; equality cross-multiplies over the union denominator, no GCD
// reduction anywhere.
class RationalMould {
public:
    using LinearForm = std::vector<int>;  // sorted 1-based variable indices
    using Denominator = std::map<LinearForm, int>;

    RationalMould(int arity, SparsePolynomial numerator, Denominator denominator);

    // The unit: arity 0, numerator 1, empty denominator.
    static RationalMould one();
    static RationalMould zero(int arity);

    int arity() const { return arity_; }
    const SparsePolynomial& numerator() const { return numerator_; }
    const Denominator& denominator() const { return denominator_; }

    RationalMould scaled(const Rational& c) const;
    RationalMould operator+(const RationalMould& other) const;

    bool equals(const RationalMould& other) const;
    // Zero iff equal: lhs and rhs numerators brought over the common
    // denominator, subtracted.
    SparsePolynomial difference_numerator(const RationalMould& other) const;

    // Product on homogeneous moulds: the right factor's variables are
    // shifted past the left factor's.
    friend RationalMould mu(const RationalMould& f, const RationalMould& g);

private:
    int arity_;
    SparsePolynomial numerator_;
    Denominator denominator_;
};

// f_sigma = 1 / (u_{s1} (u_{s1}+u_{s2}) ... (u_{s1}+...+u_{sn})).
RationalMould f_fraction(const std::vector<int>& sigma);

// z_{sigma,s}: the same partial-sum forms with exponents s_1..s_n;
// all colors 1 gives back f_sigma.
RationalMould z_fraction(const ColoredPermutation& p);

// Word encoding of a colored permutation over {0} + shifted letters.
// suffix: sigma_t followed by a 0-run of length s_t - 1 (the verified
// convention); prefix: the 0-run precedes sigma_t.
enum class Convention { suffix, prefix };

using ColoredWord = std::vector<int>;

ColoredWord epsilon_word(const ColoredPermutation& p,
                         Convention convention = Convention::suffix, int shift = 0);

// Inverse of epsilon_word at shift 0; rejects malformed words.
ColoredPermutation decode_epsilon(const ColoredWord& w,
                                  Convention convention = Convention::suffix);

// z_{sigma,s} * z_{tau,t} = sum <eps_{w} | eps_{sigma,s} sh eps_{tau[n],t}> z_w,
// computed by shuffling the two encodings and decoding every word.
LinearCombination<ColoredPermutation> guo_xie_product(
    const ColoredPermutation& p, const ColoredPermutation& q,
    Convention convention = Convention::suffix);

// Exact check that mu(z_p, z_q) equals the guo_xie_product expansion.
struct MouldIdentityCheck {
    bool ok = true;
    std::string detail;
};
MouldIdentityCheck verify_mould_identity(const ColoredPermutation& p,
                                         const ColoredPermutation& q,
                                         Convention convention = Convention::suffix);

// Product of the colored F basis: the shifted shuffle, multiplicity-free.
LinearCombination<ColoredPermutation> colored_f_product(const ColoredPermutation& p,
                                                        const ColoredPermutation& q);

// F_{sigma,I} = sum_J c_IJ Z_{sigma,J}.
LinearCombination<ColoredPermutation> colored_f_in_z(const ColoredPermutation& f_index);
// Z_{sigma,J} = sum_I d_IJ F_{sigma,I}.
LinearCombination<ColoredPermutation> colored_z_in_f(const ColoredPermutation& z_index);

// The colored Z product by the encoding shuffle (route used for output)
// and through the F basis; for the suffix convention both are computed
// and a mismatch is a hard failure.
LinearCombination<ColoredPermutation> colored_z_product_by_shuffle(
    const ColoredPermutation& p, const ColoredPermutation& q,
    Convention convention = Convention::suffix);
LinearCombination<ColoredPermutation> colored_z_product_by_f(const ColoredPermutation& p,
                                                             const ColoredPermutation& q);
LinearCombination<ColoredPermutation> colored_z_product(
    const ColoredPermutation& p, const ColoredPermutation& q,
    Convention convention = Convention::suffix);

}  // namespace qshuffle
