#ifndef COBORDISM_LINALG_HPP
#define COBORDISM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cobordism/rational.hpp"

namespace cobordism {

using RationalVector = std::vector<Rational>;

// Dense matrix over Q, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix a);

// Gaussian elimination of A recorded once so that many right-hand sides can
// be solved against the same matrix. Free columns are set to zero.
class LinearSolver {
public:
    explicit LinearSolver(const RationalMatrix& a);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t unknowns() const noexcept { return cols_; }
    bool injective() const noexcept { return rank() == cols_; }

    // nullopt when A x = b has no solution.
    std::optional<RationalVector> solve(const RationalVector& b) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    RationalMatrix reduced_;   // reduced row echelon form of A
    RationalMatrix transform_; // P with P*A = reduced_
    std::vector<std::size_t> pivots_;
};

} // namespace cobordism

#endif
