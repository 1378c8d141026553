#pragma once

#include "qshuffle/composition.hpp"
#include "qshuffle/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qshuffle {

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact square matrix indexed by one (n, k) block of compositions in the
// canonical descending-lexicographic order.
class TransitionMatrix {
public:
    explicit TransitionMatrix(std::vector<Composition> index);

    static TransitionMatrix identity(std::vector<Composition> index);

    int dim() const { return static_cast<int>(index_.size()); }
    const std::vector<Composition>& index() const { return index_; }

    Rational& at(int row, int col) { return entries_[row][col]; }
    const Rational& at(int row, int col) const { return entries_[row][col]; }

    int row_of(const Composition& I) const;  // throws if I is not in the index
    Rational& at(const Composition& I, const Composition& J) {
        return entries_[row_of(I)][row_of(J)];
    }
    const Rational& at(const Composition& I, const Composition& J) const {
        return entries_[row_of(I)][row_of(J)];
    }

    // Exact Gauss-Jordan elimination over the rationals.
    TransitionMatrix inverse() const;
    TransitionMatrix transpose() const;
    TransitionMatrix operator*(const TransitionMatrix& rhs) const;

    bool is_identity() const;
    bool is_lower_unitriangular() const;
    bool is_upper_unitriangular() const;
    Rational entry_sum() const;

    bool operator==(const TransitionMatrix& other) const = default;

private:
    std::vector<Composition> index_;
    std::vector<std::vector<Rational>> entries_;
};

}  // namespace qshuffle
