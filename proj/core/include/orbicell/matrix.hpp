#pragma once

#include "orbicell/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orbicell {

// Dense matrix over Q with exact Gaussian elimination. Sized for the desk
// scale of this library (dimensions <= ~16); no pivoting heuristics needed
// since arithmetic is exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const;
    bool is_zero() const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(const Rational& c) const;
    Matrix transpose() const;

    std::size_t rank() const;

    // Inverse, or nullopt if singular.
    std::optional<Matrix> inverse() const;

    // Basis of the null space, one column per basis vector.
    std::vector<std::vector<Rational>> kernel() const;

    // Basis of the column space.
    std::vector<std::vector<Rational>> column_space() const;

    // One solution of A x = b, or nullopt if inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Span utilities used by the Hodge construction.
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

} // namespace orbicell
