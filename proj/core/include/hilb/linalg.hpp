#pragma once

#include <optional>
#include <vector>

#include "hilb/errors.hpp"
#include "hilb/rational_function.hpp"

namespace hilb {

// Dense exact matrix over a field scalar K. Sizes in this project are tiny
// (weight spaces of dimension <= a few dozen), so dense Gaussian elimination
// is the right tool.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, K(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<K>& data() const { return a_; }
    std::vector<K>& data() { return a_; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw internal_error("matrix product shape mismatch");
        Matrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const K& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const K& ykj = y(k, j);
                    if (!is_zero(ykj)) z(i, j) += xik * ykj;
                }
            }
        return z;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw internal_error("matrix sum shape mismatch");
        Matrix z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw internal_error("matrix diff shape mismatch");
        Matrix z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }
    friend Matrix operator*(const K& s, const Matrix& x) {
        Matrix z = x;
        for (auto& v : z.a_) v *= s;
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw internal_error("matrix apply shape mismatch");
        std::vector<K> out(rows_, K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        K inv = K(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            K f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return static_cast<int>(rref(m).size());
}

template <class K>
struct SolveResult {
    bool solvable = false;
    bool unique = false;
    std::vector<K> x;
};

// Solve A x = b exactly.
template <class K>
SolveResult<K> solve(const Matrix<K>& a, const std::vector<K>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw internal_error("solve shape mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    SolveResult<K> res;
    for (int col : pivots)
        if (col == a.cols()) return res; // inconsistent
    res.solvable = true;
    res.unique = static_cast<int>(pivots.size()) == a.cols();
    res.x.assign(a.cols(), K(0));
    for (size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = aug(static_cast<int>(r), a.cols());
    return res;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw internal_error("inverse of non-square matrix");
    int n = a.rows();
    Matrix<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = K(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<K> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace hilb
