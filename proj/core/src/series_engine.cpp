#include "kzsolve/series_engine.hpp"

namespace kz {

RatMatrix t_minus1(int n) {
    RatMatrix t(n, n, Rational(0));
    for (int k = 2; k <= n; ++k) t = t + perm(n, 1, k);
    return t;
}

Eigensystem Eigensystem::natural(int n) {
    if (n < 2) throw Error("eigensystem requires n >= 2");
    Eigensystem e;
    e.n = n;
    e.basis = RatMatrix(n, n, Rational(0));
    // column 0: all ones, eigenvalue n-1
    for (int i = 0; i < n; ++i) e.basis.at(i, 0) = Rational(1);
    e.eigenvalues.assign(static_cast<size_t>(n), Rational(0));
    e.eigenvalues[0] = Rational(n - 1);
    // columns 1..n-2: e_k - e_{k+1} on coordinates 2..n, eigenvalue n-2
    for (int j = 0; j < n - 2; ++j) {
        e.basis.at(j + 1, 1 + j) = Rational(1);
        e.basis.at(j + 2, 1 + j) = Rational(-1);
        e.eigenvalues[static_cast<size_t>(1 + j)] = Rational(n - 2);
    }
    // last column: [n-1, -1, ..., -1], eigenvalue -1
    e.basis.at(0, n - 1) = Rational(n - 1);
    for (int i = 1; i < n; ++i) e.basis.at(i, n - 1) = Rational(-1);
    e.eigenvalues[static_cast<size_t>(n - 1)] = Rational(-1);

    const RatMatrix t = t_minus1(n);
    for (int c = 0; c < n; ++c) {
        const auto v = e.basis.column(c);
        const auto tv = t.apply(v);
        for (int i = 0; i < n; ++i)
            if (tv[static_cast<size_t>(i)] != e.eigenvalues[static_cast<size_t>(c)] * v[static_cast<size_t>(i)])
                throw EigencheckFailedError("T_{-1} eigenvector check failed at column " +
                                            std::to_string(c));
    }
    try {
        e.basis_inv = rat_inverse(e.basis);
    } catch (const SingularMatrixError&) {
        throw EigencheckFailedError("eigenbasis is not invertible");
    }
    return e;
}

Eigensystem t_minus1_eigensystem(int n) { return Eigensystem::natural(n); }

TMatrix t_matrix(int n, const std::vector<RatFunc>& xi, int p) {
    if (p < -1) throw Error("t_matrix requires p >= -1");
    if (static_cast<int>(xi.size()) != n - 1) throw Error("t_matrix: xi must have n-1 entries");
    const int nvars = xi.front().nvars();
    RFMatrix m = rf_zero_matrix(n, n, nvars);
    for (int k = 2; k <= n; ++k) {
        const RatFunc w = xi[static_cast<size_t>(k - 2)].pow(p + 1);
        const RatMatrix pm = perm(n, 1, k);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!pm.at(r, c).is_zero()) m.at(r, c) = m.at(r, c) + w * pm.at(r, c);
    }
    return {n, p, std::move(m)};
}

} // namespace kz
