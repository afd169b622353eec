#include "kzsolve/matrix.hpp"

namespace kz {

namespace {

// Denominator-cleared copy: P(i,j) = m(i,j) * f_i with f_i the lcm of the
// denominators of row i.
struct ClearedRows {
    Matrix<MultiPoly> p;
    std::vector<MultiPoly> row_factor;
};

ClearedRows clear_rows(const RFMatrix& m, int nvars) {
    ClearedRows out{Matrix<MultiPoly>(m.rows(), m.cols(), MultiPoly(nvars)), {}};
    out.row_factor.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        MultiPoly f = MultiPoly::constant(nvars, Rational(1));
        for (int j = 0; j < m.cols(); ++j) f = poly_lcm(f, m.at(i, j).den());
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc& e = m.at(i, j);
            out.p.at(i, j) = e.num() * f.divided_exact(e.den());
        }
        out.row_factor.push_back(std::move(f));
    }
    return out;
}

int matrix_nvars(const RFMatrix& m) {
    int nv = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) nv = std::max(nv, m.at(i, j).nvars());
    return nv;
}

// Fraction-free Bareiss forward elimination in place. Returns the pivot row
// permutation sign and the pivot list; throws SingularMatrixError when rank
// deficient. aug carries extra columns transformed alongside.
Rational bareiss_forward(Matrix<MultiPoly>& a, Matrix<MultiPoly>& aug) {
    const int n = a.rows();
    Rational sign(1);
    MultiPoly prev = MultiPoly::constant(0, Rational(1));
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrixError("matrix of rational functions is singular");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (int j = 0; j < aug.cols(); ++j) std::swap(aug.at(piv, j), aug.at(col, j));
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                MultiPoly v = a.at(i, j) * a.at(col, col) - a.at(i, col) * a.at(col, j);
                a.at(i, j) = v.divided_exact(prev);
            }
            for (int j = 0; j < aug.cols(); ++j) {
                MultiPoly v = aug.at(i, j) * a.at(col, col) - a.at(i, col) * aug.at(col, j);
                aug.at(i, j) = v.divided_exact(prev);
            }
            a.at(i, col) = MultiPoly(a.at(i, col).nvars());
        }
        prev = a.at(col, col);
    }
    return sign;
}

} // namespace

RatFunc rfmatrix_determinant(const RFMatrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const int nvars = matrix_nvars(m);
    if (m.rows() == 0) return RatFunc::constant(nvars, Rational(1));
    ClearedRows c = clear_rows(m, nvars);
    Matrix<MultiPoly> aug(m.rows(), 0, MultiPoly(nvars));
    Rational sign(1);
    try {
        sign = bareiss_forward(c.p, aug);
    } catch (const SingularMatrixError&) {
        return RatFunc::zero(nvars);
    }
    // det(P) = last pivot (Bareiss), det(M) = det(P) / prod(row factors)
    MultiPoly den = MultiPoly::constant(nvars, Rational(1));
    for (const auto& f : c.row_factor) den = den * f;
    return RatFunc(c.p.at(m.rows() - 1, m.rows() - 1) * sign, den);
}

namespace {

RatFunc minor_det(const RFMatrix& m, int skip_row, int skip_col) {
    const int n = m.rows();
    RFMatrix sub(n - 1, n - 1, RatFunc());
    for (int i = 0, si = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (int j = 0, sj = 0; j < n; ++j) {
            if (j == skip_col) continue;
            sub.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return rfmatrix_determinant(sub);
}

} // namespace

RFMatrix rfmatrix_inverse(const RFMatrix& m) {
    if (!m.is_square()) throw Error("inverse of a non-square matrix");
    const int n = m.rows();
    const int nvars = matrix_nvars(m);
    if (n <= 4) {
        // adjugate route
        const RatFunc det = rfmatrix_determinant(m);
        if (det.is_zero()) throw SingularMatrixError("matrix of rational functions is singular");
        RFMatrix inv(n, n, RatFunc::zero(nvars));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RatFunc c = minor_det(m, j, i);
                if ((i + j) & 1) c = -c;
                inv.at(i, j) = c / det;
            }
        return inv;
    }
    // Bareiss on [P | diag(f_i)] then back substitution; M^-1 = P^-1 diag(f_i).
    ClearedRows c = clear_rows(m, nvars);
    Matrix<MultiPoly> aug(n, n, MultiPoly(nvars));
    for (int i = 0; i < n; ++i) aug.at(i, i) = c.row_factor[static_cast<size_t>(i)];
    bareiss_forward(c.p, aug);
    RFMatrix x(n, n, RatFunc::zero(nvars));
    for (int j = 0; j < n; ++j) {
        for (int i = n - 1; i >= 0; --i) {
            RatFunc acc(aug.at(i, j));
            for (int k = i + 1; k < n; ++k) acc = acc - RatFunc(c.p.at(i, k)) * x.at(k, j);
            x.at(i, j) = acc / RatFunc(c.p.at(i, i));
        }
    }
    return x;
}

RatMatrix rat_inverse(const RatMatrix& m) {
    return field_inverse(m, Rational(1), Rational(0));
}

std::vector<std::vector<Rational>> rat_nullspace(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    RatMatrix a = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const Rational inv = a.at(r, c).inverse();
        for (int j = 0; j < cols; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Rational f = a.at(i, c);
            for (int j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < cols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(c)] = Rational(1);
        for (size_t k = 0; k < pivot_col.size(); ++k)
            v[static_cast<size_t>(pivot_col[k])] = -a.at(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

RFMatrix rf_identity(int n, int nvars) {
    return RFMatrix::identity(n, RatFunc::constant(nvars, Rational(1)), RatFunc::zero(nvars));
}

RFMatrix rf_zero_matrix(int rows, int cols, int nvars) {
    return RFMatrix(rows, cols, RatFunc::zero(nvars));
}

RFMatrix to_rfmatrix(const RatMatrix& m, int nvars) {
    RFMatrix r(m.rows(), m.cols(), RatFunc::zero(nvars));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = RatFunc::constant(nvars, m.at(i, j));
    return r;
}

} // namespace kz
