#include "kzsolve/symmetric_rep.hpp"

namespace kz {

RatMatrix perm(int n, int i, int j) {
    if (n < 2 || i < 1 || j < 1 || i > n || j > n || i == j)
        throw InvalidIndexError("perm_matrix: need 1 <= i,j <= n, i != j");
    RatMatrix m = RatMatrix::identity(n, Rational(1), Rational(0));
    m.at(i - 1, i - 1) = Rational(0);
    m.at(j - 1, j - 1) = Rational(0);
    m.at(i - 1, j - 1) = Rational(1);
    m.at(j - 1, i - 1) = Rational(1);
    return m;
}

TranspositionMatrix perm_matrix(int n, int i, int j) { return {n, i, j, perm(n, i, j)}; }

RFMatrix kz_coefficient_matrix(int n, int j) {
    if (n < 2 || j < 1 || j > n) throw InvalidIndexError("kz_coefficient: need 1 <= j <= n, n >= 2");
    RFMatrix a = rf_zero_matrix(n, n, n);
    for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        const RatFunc pole =
            RatFunc(MultiPoly::constant(n, Rational(1)),
                    MultiPoly::variable(n, j - 1) - MultiPoly::variable(n, k - 1));
        const RatMatrix p = perm(n, j, k);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!p.at(r, c).is_zero()) a.at(r, c) = a.at(r, c) + pole * p.at(r, c);
    }
    return a;
}

KZCoefficient kz_coefficient(int n, int j) { return {n, j, kz_coefficient_matrix(n, j)}; }

namespace {

std::string pair_witness(int i, int j) {
    return "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

Report check_transposition_relations(int n) {
    Report rep;
    const RatMatrix id = RatMatrix::identity(n, Rational(1), Rational(0));

    bool sym_ok = true, inv_ok = true;
    std::string sym_w, inv_w;
    for (int i = 1; i <= n && (sym_ok || inv_ok); ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (perm(n, i, j) != perm(n, j, i)) {
                sym_ok = false;
                sym_w = pair_witness(i, j);
            }
            if (perm(n, i, j) * perm(n, i, j) != id) {
                inv_ok = false;
                inv_w = pair_witness(i, j);
            }
        }
    rep.add("symmetry P(i,j) = P(j,i)", sym_ok, sym_w);
    rep.add("involution P(i,j)^2 = I", inv_ok, inv_w);

    bool triple_ok = true;
    std::string triple_w;
    for (int i = 1; i <= n && triple_ok; ++i)
        for (int j = 1; j <= n && triple_ok; ++j)
            for (int k = 1; k <= n && triple_ok; ++k) {
                if (i == j || j == k || i == k) continue;
                const RatMatrix s = perm(n, i, j) + perm(n, j, k);
                const RatMatrix p = perm(n, i, k);
                if (s * p != p * s) {
                    triple_ok = false;
                    triple_w = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")";
                }
            }
    if (n >= 3) rep.add("[P(i,j)+P(j,k), P(i,k)] = 0", triple_ok, triple_w);

    bool disjoint_ok = true;
    std::string disjoint_w;
    for (int i = 1; i <= n && disjoint_ok; ++i)
        for (int j = i + 1; j <= n && disjoint_ok; ++j)
            for (int k = 1; k <= n && disjoint_ok; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    const RatMatrix a = perm(n, i, j), b = perm(n, k, l);
                    if (a * b != b * a) {
                        disjoint_ok = false;
                        disjoint_w = "(i,j,k,l)=(" + std::to_string(i) + "," + std::to_string(j) +
                                     "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        break;
                    }
                }
    if (n >= 4) rep.add("[P(i,j), P(k,l)] = 0 (disjoint)", disjoint_ok, disjoint_w);

    // P_{j,j+1} P_{j,i} P_{j,j+1} = P_{j+1,i} for i distinct from j, j+1
    bool braid_ok = true;
    std::string braid_w;
    for (int j = 1; j + 1 <= n && braid_ok; ++j)
        for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            const RatMatrix t = perm(n, j, j + 1);
            if (t * perm(n, j, i) * t != perm(n, j + 1, i)) {
                braid_ok = false;
                braid_w = "(j,i)=(" + std::to_string(j) + "," + std::to_string(i) + ")";
                break;
            }
        }
    if (n >= 3) rep.add("P(j,j+1) P(j,i) P(j,j+1) = P(j+1,i)", braid_ok, braid_w);
    // cube of a transposition is the transposition itself
    bool cube_ok = true;
    for (int j = 1; j + 1 <= n; ++j) {
        const RatMatrix t = perm(n, j, j + 1);
        if (t * t * t != perm(n, j + 1, j)) cube_ok = false;
    }
    rep.add("P(j,j+1)^3 = P(j+1,j)", cube_ok);
    return rep;
}

Report check_consistency(int n, const Rational& rho) {
    Report rep;
    std::vector<RFMatrix> a;
    a.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) a.push_back(kz_coefficient_matrix(n, j));

    // sum_j A_j = 0
    {
        RFMatrix sum = a[0];
        for (int j = 1; j < n; ++j) sum = sum + a[static_cast<size_t>(j)];
        rep.add("sum_j A_j = 0 (n=" + std::to_string(n) + ")", sum.is_zero());
    }

    auto d = [&](const RFMatrix& m, int var) {
        RFMatrix r = m;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).derivative(var);
        return r;
    };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const RFMatrix& ai = a[static_cast<size_t>(i - 1)];
            const RFMatrix& aj = a[static_cast<size_t>(j - 1)];
            RFMatrix curv = (d(ai, j - 1) - d(aj, i - 1)).scaled(RatFunc::constant(n, rho)) +
                            (ai * aj - aj * ai).scaled(RatFunc::constant(n, rho * rho));
            rep.add("flatness " + pair_witness(i, j) + " n=" + std::to_string(n) +
                        " rho=" + rho.str(),
                    curv.is_zero());
        }
    return rep;
}

} // namespace kz
