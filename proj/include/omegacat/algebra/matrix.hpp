#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "omegacat/algebra/integer.hpp"

namespace omegacat {

// Dense integer matrix, row-major. Zero-sized dimensions are allowed.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols) throw ShapeMismatch("entry count does not match shape");
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw ShapeMismatch("ragged rows");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix scalar(std::size_t n, const Integer& k) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = k;
        return m;
    }

    static IntMatrix diagonal(const std::vector<Integer>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ShapeMismatch("column length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Integer>& entries() const { return data_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }

    IntVector row(std::size_t r) const {
        return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntVector apply(const IntVector& x) const {
        if (x.size() != cols_) throw ShapeMismatch("vector length does not match matrix columns");
        IntVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (x[j] != 0) s += (*this)(i, j) * x[j];
            y[i] = std::move(s);
        }
        return y;
    }

    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        IntMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows() != b.rows()) throw ShapeMismatch("hstack rows");
        IntMatrix m(a.rows(), a.cols() + b.cols());
        m.set_block(0, 0, a);
        m.set_block(0, a.cols(), b);
        return m;
    }

    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols() != b.cols()) throw ShapeMismatch("vstack cols");
        IntMatrix m(a.rows() + b.rows(), a.cols());
        m.set_block(0, 0, a);
        m.set_block(a.rows(), 0, b);
        return m;
    }

    static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
        m.set_block(0, 0, a);
        m.set_block(a.rows(), a.cols(), b);
        return m;
    }

    // Elementary operations used by the Smith reduction.
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
    }
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }
    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shapes");
        IntMatrix m(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Integer& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (b(k, j) != 0) m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum shapes");
        IntMatrix m(a);
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
        return m;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix difference shapes");
        IntMatrix m(a);
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
        return m;
    }

    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix m(a);
        for (auto& x : m.data_) x = -x;
        return m;
    }

    IntMatrix scaled(const Integer& k) const {
        IntMatrix m(*this);
        for (auto& x : m.data_) x *= k;
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

}  // namespace omegacat
