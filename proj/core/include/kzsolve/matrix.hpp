#pragma once

#include <functional>
#include <vector>

#include "kzsolve/ratfunc.hpp"

namespace kz {

// Dense row-major matrix over an exact scalar type (Rational, RatFunc).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    static Matrix identity(int n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)]; }
    const T& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)];
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!kz::is_zero(v)) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
        Matrix r(a.rows_, b.cols_, a.data_.empty() ? T() : a.data_.front() - a.data_.front());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (kz::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b.at(k, j);
                    if (kz::is_zero(bkj)) continue;
                    r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }
    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * c;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(cols_, rows_, data_.empty() ? T() : data_.front());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<T> column(int j) const {
        std::vector<T> c;
        c.reserve(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }
    void set_column(int j, const std::vector<T>& c) {
        for (int i = 0; i < rows_; ++i) at(i, j) = c[static_cast<size_t>(i)];
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector dimension mismatch");
        std::vector<T> r;
        r.reserve(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            T acc = at(i, 0) * v[0];
            for (int j = 1; j < cols_; ++j) acc = acc + at(i, j) * v[static_cast<size_t>(j)];
            r.push_back(std::move(acc));
        }
        return r;
    }

    template <class U>
    Matrix<U> map(const std::function<U(const T&)>& f) const {
        Matrix<U> r(rows_, cols_, f(data_.front()));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using RFMatrix = Matrix<RatFunc>;

// Gaussian elimination over an exact field, first nonzero pivot.
// Solves A X = B; throws SingularMatrixError.
template <class F>
Matrix<F> solve_linear(Matrix<F> a, Matrix<F> b) {
    if (!a.is_square() || a.rows() != b.rows()) throw Error("solve_linear: dimension mismatch");
    const int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!kz::is_zero(a.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrixError("singular matrix in solve_linear");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                if (j < b.cols()) std::swap(b.at(piv, j), b.at(col, j));
            }
        if (b.cols() > n)
            for (int j = n; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
        for (int i = col + 1; i < n; ++i) {
            if (kz::is_zero(a.at(i, col))) continue;
            const F factor = a.at(i, col) / a.at(col, col);
            for (int j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - factor * a.at(col, j);
            for (int j = 0; j < b.cols(); ++j) b.at(i, j) = b.at(i, j) - factor * b.at(col, j);
        }
    }
    // back substitution
    Matrix<F> x = b;
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j < b.cols(); ++j) {
            F acc = x.at(i, j);
            for (int k = i + 1; k < n; ++k) acc = acc - a.at(i, k) * x.at(k, j);
            x.at(i, j) = acc / a.at(i, i);
        }
    }
    return x;
}

template <class F>
std::vector<F> solve_linear(const Matrix<F>& a, const std::vector<F>& rhs) {
    Matrix<F> b(a.rows(), 1, rhs.front());
    for (int i = 0; i < a.rows(); ++i) b.at(i, 0) = rhs[static_cast<size_t>(i)];
    Matrix<F> x = solve_linear(a, b);
    return x.column(0);
}

template <class F>
Matrix<F> field_inverse(const Matrix<F>& a, const F& one, const F& zero) {
    return solve_linear(a, Matrix<F>::identity(a.rows(), one, zero));
}

// Rational-function matrix inverse via fraction-free (Bareiss) elimination on
// the denominator-cleared polynomial matrix; adjugate route for n <= 4
// (spec: rfmatrix_inverse). Throws SingularMatrixError.
RFMatrix rfmatrix_inverse(const RFMatrix& m);
RatFunc rfmatrix_determinant(const RFMatrix& m);

RatMatrix rat_inverse(const RatMatrix& m);
// Nullspace basis (columns) of a rational matrix.
std::vector<std::vector<Rational>> rat_nullspace(const RatMatrix& m);

RFMatrix rf_identity(int n, int nvars);
RFMatrix rf_zero_matrix(int rows, int cols, int nvars);
RFMatrix to_rfmatrix(const RatMatrix& m, int nvars);

} // namespace kz
