#include "cobordism/linalg.hpp"

#include <utility>

namespace cobordism {

namespace {

// In-place reduced row echelon form; applies the same row operations to
// `companion` when it is non-null. Returns pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& a, RationalMatrix* companion)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    auto swap_rows = [](RationalMatrix& m, std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r1, c), m(r2, c));
    };
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row) {
            swap_rows(a, p, row);
            if (companion) swap_rows(*companion, p, row);
        }
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            if (a(row, c) != 0) a(row, c) *= inv;
        if (companion)
            for (std::size_t c = 0; c < companion->cols(); ++c)
                if ((*companion)(row, c) != 0) (*companion)(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
            if (companion)
                for (std::size_t c = 0; c < companion->cols(); ++c)
                    if ((*companion)(row, c) != 0) (*companion)(r, c) -= factor * (*companion)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix a)
{
    return reduce(a, nullptr).size();
}

LinearSolver::LinearSolver(const RationalMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), reduced_(a), transform_(a.rows(), a.rows())
{
    for (std::size_t i = 0; i < rows_; ++i) transform_(i, i) = 1;
    pivots_ = reduce(reduced_, &transform_);
}

std::optional<RationalVector> LinearSolver::solve(const RationalVector& b) const
{
    RationalVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < rows_; ++c)
            if (b[c] != 0 && transform_(r, c) != 0) acc += transform_(r, c) * b[c];
        y[r] = acc;
    }
    for (std::size_t r = pivots_.size(); r < rows_; ++r)
        if (y[r] != 0) return std::nullopt;
    RationalVector x(cols_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = y[r];
    return x;
}

} // namespace cobordism
