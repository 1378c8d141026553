#include "qshuffle/matrix.hpp"

#include <algorithm>

namespace qshuffle {

TransitionMatrix::TransitionMatrix(std::vector<Composition> index)
    : index_(std::move(index)),
      entries_(index_.size(), std::vector<Rational>(index_.size(), Rational(0))) {}

TransitionMatrix TransitionMatrix::identity(std::vector<Composition> index) {
    TransitionMatrix m(std::move(index));
    for (int i = 0; i < m.dim(); ++i) m.at(i, i) = 1;
    return m;
}

int TransitionMatrix::row_of(const Composition& I) const {
    auto it = std::find(index_.begin(), index_.end(), I);
    if (it == index_.end()) throw std::invalid_argument("composition not in matrix index");
    return static_cast<int>(it - index_.begin());
}

TransitionMatrix TransitionMatrix::inverse() const {
    const int n = dim();
    auto work = entries_;
    TransitionMatrix inv = identity(index_);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!is_zero(work[row][col])) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularMatrixError("matrix is singular");
        std::swap(work[pivot], work[col]);
        std::swap(inv.entries_[pivot], inv.entries_[col]);
        const Rational lead = work[col][col];
        for (int j = 0; j < n; ++j) {
            work[col][j] /= lead;
            inv.entries_[col][j] /= lead;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || is_zero(work[row][col])) continue;
            const Rational factor = work[row][col];
            for (int j = 0; j < n; ++j) {
                work[row][j] -= factor * work[col][j];
                inv.entries_[row][j] -= factor * inv.entries_[col][j];
            }
        }
    }
    return inv;
}

TransitionMatrix TransitionMatrix::transpose() const {
    TransitionMatrix out(index_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) out.at(j, i) = at(i, j);
    return out;
}

TransitionMatrix TransitionMatrix::operator*(const TransitionMatrix& rhs) const {
    TransitionMatrix out(index_);
    const int n = dim();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (is_zero(at(i, k))) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

bool TransitionMatrix::is_identity() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

bool TransitionMatrix::is_lower_unitriangular() const {
    for (int i = 0; i < dim(); ++i) {
        if (at(i, i) != 1) return false;
        for (int j = i + 1; j < dim(); ++j)
            if (!is_zero(at(i, j))) return false;
    }
    return true;
}

bool TransitionMatrix::is_upper_unitriangular() const {
    for (int i = 0; i < dim(); ++i) {
        if (at(i, i) != 1) return false;
        for (int j = 0; j < i; ++j)
            if (!is_zero(at(i, j))) return false;
    }
    return true;
}

Rational TransitionMatrix::entry_sum() const {
    Rational total = 0;
    for (const auto& row : entries_)
        for (const auto& e : row) total += e;
    return total;
}

}  // namespace qshuffle
