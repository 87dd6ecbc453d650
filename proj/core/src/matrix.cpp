#include "orbicell/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace orbicell {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (sgn(b) != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m.at(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m.at(i, col)) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return row_reduce(m).size();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<Rational>> Matrix::kernel() const {
    Matrix m = *this;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> Matrix::column_space() const {
    Matrix m = *this;
    auto pivots = row_reduce(m);
    std::vector<std::vector<Rational>> basis;
    for (auto p : pivots) {
        std::vector<Rational> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> Matrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rational> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(at(i, j)) != 0 && sgn(v[j]) != 0) r[i] += at(i, j) * v[j];
    return r;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (sgn(x) != 0) return false;
        return true;
    }
    Matrix m(v.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = basis[j][i];
    return m.solve(v).has_value();
}

} // namespace orbicell
