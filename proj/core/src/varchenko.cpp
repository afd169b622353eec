#include "kzsolve/varchenko.hpp"

#include <algorithm>
#include <map>

namespace kz {

CoordinateMaps coordinate_maps(int n) {
    if (n < 2) throw Error("coordinate_maps requires n >= 2");
    CoordinateMaps m;
    m.n = n;
    m.s = RatMatrix(n, n, Rational(0));
    for (int k = 0; k < n - 1; ++k) {
        m.s.at(k, k) = Rational(1);
        m.s.at(k, k + 1) = Rational(-1);
    }
    for (int k = 0; k < n; ++k) m.s.at(n - 1, k) = Rational(1);

    // closed form of S^-1: column j < n has (n-j-1)/n above the diagonal
    // (inclusive) and -(j+1)/n below; the last column is 1/n throughout
    m.s_inv = RatMatrix(n, n, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n - 1; ++j)
            m.s_inv.at(i, j) = i <= j ? Rational(n - j - 1, n) : Rational(-(j + 1), n);
        m.s_inv.at(i, n - 1) = Rational(1, n);
    }
    if (m.s * m.s_inv != RatMatrix::identity(n, Rational(1), Rational(0)))
        throw VerificationFailedError("S * S^-1 is not the identity");

    m.t = RatMatrix(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.t.at(i, j) = Rational(1);
    m.c = RatMatrix(n, n, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n - 1; ++j) m.c.at(i, j) = Rational(j + 1);
        m.c.at(i, n - 1) = Rational(n - 1);
    }
    if (m.s_inv != m.t - m.c.scaled(Rational(1, n)))
        throw VerificationFailedError("S^-1 != T - C/n");
    return m;
}

std::vector<Rational> u_from_z(const std::vector<Rational>& z) {
    const int n = static_cast<int>(z.size());
    if (n < 2) throw Error("u_from_z requires n >= 2");
    std::vector<Rational> u(static_cast<size_t>(n));
    u[0] = z[0] - z[1];
    if (u[0].is_zero()) throw DegeneratePointError("z1 = z2");
    for (int k = 2; k <= n - 1; ++k) {
        const Rational prev = z[static_cast<size_t>(k - 2)] - z[static_cast<size_t>(k - 1)];
        if (prev.is_zero()) throw DegeneratePointError("consecutive coordinates coincide");
        u[static_cast<size_t>(k - 1)] =
            (z[static_cast<size_t>(k - 1)] - z[static_cast<size_t>(k)]) / prev;
    }
    Rational sum(0);
    for (const auto& v : z) sum += v;
    u[static_cast<size_t>(n - 1)] = sum;
    return u;
}

std::vector<Rational> z_from_u(const std::vector<Rational>& u) {
    const int n = static_cast<int>(u.size());
    if (n < 2) throw Error("z_from_u requires n >= 2");
    for (int k = 0; k + 1 < n; ++k)
        if (u[static_cast<size_t>(k)].is_zero())
            throw DegeneratePointError("u coordinates 1..n-1 must be nonzero");
    // U = [u1, u1 u2, ..., u1...u_{n-1}, u_n], Z = S^-1 U
    std::vector<Rational> big_u(static_cast<size_t>(n));
    Rational prod(1);
    for (int k = 0; k < n - 1; ++k) {
        prod *= u[static_cast<size_t>(k)];
        big_u[static_cast<size_t>(k)] = prod;
    }
    big_u[static_cast<size_t>(n - 1)] = u[static_cast<size_t>(n - 1)];
    const CoordinateMaps maps = coordinate_maps(n);
    return maps.s_inv.apply(big_u);
}

std::vector<MultiPoly> z_polys_in_u(int n) {
    const CoordinateMaps maps = coordinate_maps(n);
    std::vector<MultiPoly> big_u;
    big_u.reserve(static_cast<size_t>(n));
    MultiPoly prod = MultiPoly::constant(n, Rational(1));
    for (int k = 0; k < n - 1; ++k) {
        prod = prod * MultiPoly::variable(n, k);
        big_u.push_back(prod);
    }
    big_u.push_back(MultiPoly::variable(n, n - 1));
    std::vector<MultiPoly> z;
    z.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        MultiPoly acc(n);
        for (int j = 0; j < n; ++j) acc += big_u[static_cast<size_t>(j)] * maps.s_inv.at(i, j);
        z.push_back(std::move(acc));
    }
    return z;
}

RFMatrix transport_to_u(const RFMatrix& w, int n) {
    const std::vector<MultiPoly> z = z_polys_in_u(n);
    std::vector<RatFunc> values;
    values.reserve(z.size());
    for (const auto& p : z) values.emplace_back(p);
    RFMatrix out = rf_zero_matrix(w.rows(), w.cols(), n);
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j).substitute_all(values);
    return out;
}

RatMatrix p_sum(int n, int r) {
    RatMatrix acc(n, n, Rational(0));
    for (int j = r + 1; j <= n; ++j) acc = acc + perm(n, j, r);
    return acc;
}

namespace {

// v_p of the alpha-formula: v_1 = 1, v_p = u_2...u_p for 2 <= p <= n-1, v_n = 0.
std::vector<MultiPoly> v_products(int n) {
    std::vector<MultiPoly> v(static_cast<size_t>(n) + 1, MultiPoly(n));
    v[1] = MultiPoly::constant(n, Rational(1));
    for (int p = 2; p <= n - 1; ++p) v[static_cast<size_t>(p)] =
        v[static_cast<size_t>(p - 1)] * MultiPoly::variable(n, p - 1);
    return v;
}

} // namespace

HMatrix h_matrix(int n, int k) {
    if (k < 1 || k > n) throw InvalidIndexError("h_matrix: need 1 <= k <= n");
    if (k == n) return {n, k, rf_zero_matrix(n, n, n)};
    if (k == 1) {
        const RatMatrix omega1 = omega_matrix(n, 1).matrix;
        const RatFunc inv_u1(MultiPoly::constant(n, Rational(1)), MultiPoly::variable(n, 0));
        RFMatrix m = rf_zero_matrix(n, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!omega1.at(i, j).is_zero()) m.at(i, j) = inv_u1 * omega1.at(i, j);
        return {n, k, std::move(m)};
    }
    const std::vector<MultiPoly> v = v_products(n);
    const MultiPoly uk = MultiPoly::variable(n, k - 1);
    RFMatrix m = rf_zero_matrix(n, n, n);
    for (int s = 2; s <= n; ++s)
        for (int j = 1; j < s; ++j) {
            MultiPoly num(n);
            for (int p = std::max(j, k); p <= s - 1; ++p) num += v[static_cast<size_t>(p)];
            if (num.is_zero()) continue;
            MultiPoly den(n);
            for (int p = j; p <= s - 1; ++p) den += v[static_cast<size_t>(p)];
            const RatFunc alpha(num, uk * den);
            const RatMatrix p = perm(n, s, j);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (!p.at(r, c).is_zero()) m.at(r, c) = m.at(r, c) + alpha * p.at(r, c);
        }
    return {n, k, std::move(m)};
}

RFMatrix h_matrix_chain_rule(int n, int j) {
    if (j < 1 || j > n) throw InvalidIndexError("h_matrix_chain_rule: need 1 <= j <= n");
    const std::vector<MultiPoly> z = z_polys_in_u(n);
    RFMatrix acc = rf_zero_matrix(n, n, n);
    for (int k = 1; k <= n; ++k) {
        const MultiPoly dz = z[static_cast<size_t>(k - 1)].derivative(j - 1);
        if (dz.is_zero()) continue;
        // A_k(z(u)) assembled directly from the coordinate differences
        RFMatrix a = rf_zero_matrix(n, n, n);
        for (int l = 1; l <= n; ++l) {
            if (l == k) continue;
            const MultiPoly diff = z[static_cast<size_t>(k - 1)] - z[static_cast<size_t>(l - 1)];
            const RatFunc pole(MultiPoly::constant(n, Rational(1)), diff);
            const RatMatrix p = perm(n, k, l);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (!p.at(r, c).is_zero()) a.at(r, c) = a.at(r, c) + pole * p.at(r, c);
        }
        acc = acc + a.scaled(RatFunc(dz));
    }
    return acc;
}

Report h_asymptotic_check(int n, int s) {
    Report rep;
    if (s == 1) {
        const RFMatrix h1 = h_matrix(n, 1).matrix;
        const RFMatrix expect = to_rfmatrix(omega_matrix(n, 1).matrix, n)
                                    .scaled(RatFunc(MultiPoly::constant(n, Rational(1)),
                                                    MultiPoly::variable(n, 0)));
        rep.add("H_1 = Omega_1/u_1 (n=" + std::to_string(n) + ")", h1 == expect);
        return rep;
    }
    if (s == n) {
        rep.add("H_n = 0 (n=" + std::to_string(n) + ")", h_matrix(n, n).matrix.is_zero());
        return rep;
    }
    if (s < 1 || s > n - 1) throw InvalidIndexError("h_asymptotic_check: need 1 <= s <= n-1");

    const RFMatrix h = h_matrix(n, s).matrix;
    const RatMatrix omega = omega_matrix(n, s).matrix;
    // constant term at u = 0: the transpositions P_{j,s-1} with j >= s+1
    // (P_{s,s-1} itself does not occur in H_s)
    RatMatrix constant(n, n, Rational(0));
    for (int j = s + 1; j <= n; ++j) constant = constant + perm(n, j, s - 1);

    const RatFunc inv_us(MultiPoly::constant(n, Rational(1)), MultiPoly::variable(n, s - 1));
    RFMatrix diff = h - to_rfmatrix(omega, n).scaled(inv_us) - to_rfmatrix(constant, n);

    bool regular = true, vanishes = true;
    std::string witness;
    const std::vector<Rational> origin(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& f = diff.at(i, j);
            if (f.is_zero()) continue;
            if (f.den().evaluate(origin).is_zero()) {
                regular = false;
                witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            } else if (!f.num().evaluate(origin).is_zero()) {
                vanishes = false;
                witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
        }
    const std::string tag = " (n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")";
    rep.add("H_s - Omega_s/u_s - const regular at u=0" + tag, regular, witness);
    rep.add("H_s - Omega_s/u_s - const vanishes at u=0" + tag, vanishes, witness);
    return rep;
}

OmegaMatrix omega_matrix(int n, int s) {
    if (s < 1 || s > n - 1) throw InvalidIndexError("omega_matrix: need 1 <= s <= n-1");
    OmegaMatrix o;
    o.n = n;
    o.s = s;
    o.matrix = RatMatrix(n, n, Rational(0));
    for (int r = s; r <= n - 1; ++r) o.matrix = o.matrix + p_sum(n, r);
    auto n_of = [n](int t) { return Rational(static_cast<long>(n - t) * (n - t - 1) / 2); };
    o.scalar_block = n_of(s - 1);
    o.diagonal = n_of(s);
    // block structure: the first s-1 coordinates carry the scalar N_{s-1},
    // the rest an all-ones block with diagonal N_s
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational expect(0);
            if (i < s - 1 || j < s - 1)
                expect = (i == j) ? o.scalar_block : Rational(0);
            else
                expect = (i == j) ? o.diagonal : Rational(1);
            if (o.matrix.at(i, j) != expect)
                throw BlockFormMismatchError("Omega block structure mismatch at (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             ")");
        }
    return o;
}

std::vector<std::vector<Rational>> varchenko_vectors(int n) {
    std::vector<std::vector<Rational>> v;
    v.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<Rational> vk(static_cast<size_t>(n), Rational(0));
        vk[static_cast<size_t>(n - k - 1)] = Rational(-k);
        for (int i = n - k; i < n; ++i) vk[static_cast<size_t>(i)] = Rational(1);
        v.push_back(std::move(vk));
    }
    v.emplace_back(static_cast<size_t>(n), Rational(1));
    return v;
}

OmegaEigenpairs omega_eigensystem(int n, int s) {
    OmegaEigenpairs e;
    e.n = n;
    e.s = s;
    e.vectors = varchenko_vectors(n);
    const RatMatrix omega = omega_matrix(n, s).matrix;
    for (const auto& v : e.vectors) {
        const std::vector<Rational> w = omega.apply(v);
        Rational lambda(0);
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                lambda = w[i] / v[i];
                break;
            }
        for (size_t i = 0; i < v.size(); ++i)
            if (w[i] != lambda * v[i])
                throw NotEigenvectorError("v_k is not an eigenvector of Omega_s (n=" +
                                          std::to_string(n) + ", s=" + std::to_string(s) + ")");
        e.eigenvalues.push_back(lambda);
    }
    return e;
}

std::vector<std::vector<Rational>> asymptotic_exponents(int n, const Rational& rho) {
    std::vector<std::vector<Rational>> table(static_cast<size_t>(n));
    for (int s = 1; s <= n - 1; ++s) {
        const OmegaEigenpairs e = omega_eigensystem(n, s);
        for (int k = 0; k < n; ++k)
            table[static_cast<size_t>(k)].push_back(rho * e.eigenvalues[static_cast<size_t>(k)]);
    }
    return table;
}

// ---------------------------------------------------------------------------
// leading asymptotics (n = 3)

namespace {

// u1^(rho*Omega1) via the spectral decomposition over the Varchenko basis.
RFMatrix u1_matrix_power(int n, long rho) {
    const auto vs = varchenko_vectors(n);
    RatMatrix v(n, n, Rational(0));
    for (int k = 0; k < n; ++k) v.set_column(k, vs[static_cast<size_t>(k)]);
    const RatMatrix vinv = rat_inverse(v);
    const OmegaEigenpairs e = omega_eigensystem(n, 1);
    const RatFunc u1 = RatFunc::variable(n, 0);
    RFMatrix diag = rf_zero_matrix(n, n, n);
    for (int k = 0; k < n; ++k)
        diag.at(k, k) = u1.pow(rho * e.eigenvalues[static_cast<size_t>(k)].to_long());
    return to_rfmatrix(v, n) * diag * to_rfmatrix(vinv, n);
}

std::vector<Rational> laurent_coefficients(const RatFunc& f, int var, int from, int count) {
    // f * u^-from must be regular at u = 0; Taylor-expand count terms
    if (f.is_zero()) return std::vector<Rational>(static_cast<size_t>(count), Rational(0));
    RatFunc shifted = f;
    if (from != 0)
        shifted = f * RatFunc::variable(f.nvars(), var).pow(-from);
    const RatFunc uni = shifted.project_to_univariate(var);
    return taylor_coefficients(uni, Rational(0), count - 1);
}

} // namespace

Report check_leading_asymptotics(const AssembledSolution& sol) {
    Report rep;
    const int n = sol.n;
    const auto exponents = asymptotic_exponents(n, Rational(sol.rho));

    if (sol.rho != 0 && n != 3) {
        rep.add_skipped("leading asymptotics", "alignment implemented for n = 3 (and rho = 0)");
        return rep;
    }

    RFMatrix wu = transport_to_u(sol.product, n);
    {
        bool un_free = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (wu.at(i, j).uses_var(n - 1)) un_free = false;
        rep.add("transported solution independent of u_n", un_free);
        if (!un_free) return rep;
    }

    const auto vs = varchenko_vectors(n);
    RatMatrix v(n, n, Rational(0));
    for (int k = 0; k < n; ++k) v.set_column(k, vs[static_cast<size_t>(k)]);
    const RatMatrix vinv = rat_inverse(v);
    const OmegaEigenpairs om1 = omega_eigensystem(n, 1);

    // group the target directions by Omega_1 eigenvalue (invariant blocks)
    std::map<Rational, std::vector<int>> blocks;  // eigenvalue -> target indices k (0-based)
    for (int k = 0; k < n; ++k) blocks[om1.eigenvalues[static_cast<size_t>(k)]].push_back(k);

    // generic evaluation point for the confinement kernels
    std::vector<Rational> pt(static_cast<size_t>(n), Rational(0));
    {
        const long vals[] = {7, 5, 11, 13, 17, 19, 23, 29};
        for (int i = 0; i < n; ++i) pt[static_cast<size_t>(i)] = Rational(vals[i]);
    }

    std::vector<std::vector<Rational>> aligned_c(static_cast<size_t>(n));
    std::vector<std::vector<RatFunc>> aligned_columns(static_cast<size_t>(n));

    for (const auto& [eigenvalue, members] : blocks) {
        // projector onto the complement of the block
        RatMatrix sel(n, n, Rational(0));
        for (int k = 0; k < n; ++k) {
            const bool inside =
                std::find(members.begin(), members.end(), k) != members.end();
            sel.at(k, k) = inside ? Rational(0) : Rational(1);
        }
        const RatMatrix proj_other = v * sel * vinv;

        RatMatrix wu_at(n, n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) wu_at.at(i, j) = wu.at(i, j).evaluate(pt);
        const auto kernel = rat_nullspace(proj_other * wu_at);
        if (static_cast<int>(kernel.size()) != static_cast<int>(members.size())) {
            rep.add("block solution space for Omega_1 eigenvalue " + eigenvalue.str(), false,
                    "kernel dimension " + std::to_string(kernel.size()) + ", expected " +
                        std::to_string(members.size()));
            return rep;
        }

        // confined columns g = W_u c, verified to stay in the block exactly
        const RFMatrix proj_rf = to_rfmatrix(proj_other, n);
        std::vector<std::vector<RatFunc>> hs;
        const long l1 = sol.rho * eigenvalue.to_long();  // u1-exponent of the block
        const RatFunc u1pow = RatFunc::variable(n, 0).pow(l1);
        for (const auto& c : kernel) {
            std::vector<RatFunc> g(static_cast<size_t>(n), RatFunc::zero(n));
            for (int i = 0; i < n; ++i) {
                RatFunc acc = RatFunc::zero(n);
                for (int j = 0; j < n; ++j)
                    acc += wu.at(i, j) * c[static_cast<size_t>(j)];
                g[static_cast<size_t>(i)] = acc;
            }
            bool confined = true;
            {
                std::vector<RatFunc> pg = proj_rf.apply(g);
                for (const auto& e : pg)
                    if (!e.is_zero()) confined = false;
            }
            if (!confined) {
                rep.add("exact block confinement (eigenvalue " + eigenvalue.str() + ")", false);
                return rep;
            }
            // strip the u1 factor; the remainder must be u1-free
            std::vector<RatFunc> h(static_cast<size_t>(n), RatFunc::zero(n));
            bool u1_free = true;
            for (int i = 0; i < n; ++i) {
                h[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] / u1pow;
                if (h[static_cast<size_t>(i)].uses_var(0)) u1_free = false;
            }
            if (!u1_free) {
                rep.add("u1-exponent " + std::to_string(l1) + " factors off the block", false);
                return rep;
            }
            hs.push_back(std::move(h));
        }
        rep.add("block for Omega_1 eigenvalue " + eigenvalue.str() + ": confinement and u1 factor",
                true);

        // align inside the block by Laurent matching in u2
        const int bs = static_cast<int>(members.size());
        int lowest = 1 << 20, highest = -(1 << 20);
        for (const int k : members) {
            const long e = exponents[static_cast<size_t>(k)][1].to_long();
            lowest = std::min(lowest, static_cast<int>(e));
            highest = std::max(highest, static_cast<int>(e));
        }
        for (const auto& h : hs)
            for (const auto& entry : h)
                if (!entry.is_zero()) lowest = std::min(lowest, entry.order_at_zero(1));
        const int levels = highest - lowest + 1;
        // coefficient table: laurent[c][level][coord]
        std::vector<std::vector<std::vector<Rational>>> laurent(static_cast<size_t>(bs));
        for (int ci = 0; ci < bs; ++ci) {
            laurent[static_cast<size_t>(ci)].assign(static_cast<size_t>(levels),
                                                    std::vector<Rational>(static_cast<size_t>(n)));
            for (int i = 0; i < n; ++i) {
                const auto co = laurent_coefficients(hs[static_cast<size_t>(ci)][static_cast<size_t>(i)],
                                                     1, lowest, levels);
                for (int l = 0; l < levels; ++l)
                    laurent[static_cast<size_t>(ci)][static_cast<size_t>(l)][static_cast<size_t>(i)] =
                        co[static_cast<size_t>(l)];
            }
        }

        for (const int k : members) {
            const long ek = exponents[static_cast<size_t>(k)][1].to_long();
            // combo x: sum x_ci laurent[ci][l] = 0 for l < ek, = v_k at l = ek
            const int rows_needed = static_cast<int>(ek) - lowest + 1;
            RatMatrix a(rows_needed * n, bs, Rational(0));
            std::vector<Rational> rhs(static_cast<size_t>(rows_needed * n), Rational(0));
            for (int l = 0; l < rows_needed; ++l)
                for (int i = 0; i < n; ++i) {
                    for (int ci = 0; ci < bs; ++ci)
                        a.at(l * n + i, ci) =
                            laurent[static_cast<size_t>(ci)][static_cast<size_t>(l)][static_cast<size_t>(i)];
                    if (l == rows_needed - 1)
                        rhs[static_cast<size_t>(l * n + i)] = vs[static_cast<size_t>(k)][static_cast<size_t>(i)];
                }
            // least-structure solve: append the system rows into a square
            // system via normal equations is unnecessary; use elimination on
            // the rectangular system directly
            RatMatrix aug(rows_needed * n, bs + 1, Rational(0));
            for (int r = 0; r < rows_needed * n; ++r) {
                for (int c = 0; c < bs; ++c) aug.at(r, c) = a.at(r, c);
                aug.at(r, bs) = rhs[static_cast<size_t>(r)];
            }
            // gaussian elimination, then read a particular solution
            std::vector<int> pivot_of_col(static_cast<size_t>(bs), -1);
            int rrow = 0;
            for (int c = 0; c < bs && rrow < rows_needed * n; ++c) {
                int piv = -1;
                for (int r = rrow; r < rows_needed * n; ++r)
                    if (!aug.at(r, c).is_zero()) {
                        piv = r;
                        break;
                    }
                if (piv < 0) continue;
                if (piv != rrow)
                    for (int cc = 0; cc <= bs; ++cc) std::swap(aug.at(piv, cc), aug.at(rrow, cc));
                const Rational inv = aug.at(rrow, c).inverse();
                for (int cc = 0; cc <= bs; ++cc) aug.at(rrow, cc) *= inv;
                for (int r = 0; r < rows_needed * n; ++r) {
                    if (r == rrow || aug.at(r, c).is_zero()) continue;
                    const Rational f = aug.at(r, c);
                    for (int cc = 0; cc <= bs; ++cc) aug.at(r, cc) -= f * aug.at(rrow, cc);
                }
                pivot_of_col[static_cast<size_t>(c)] = rrow;
                ++rrow;
            }
            bool solvable = true;
            for (int r = rrow; r < rows_needed * n; ++r)
                if (!aug.at(r, bs).is_zero()) solvable = false;
            if (!solvable) {
                rep.add("alignment for column k=" + std::to_string(k + 1), false,
                        "no combination matches v_k at exponent " + std::to_string(ek));
                return rep;
            }
            std::vector<Rational> x(static_cast<size_t>(bs), Rational(0));
            for (int c = 0; c < bs; ++c)
                if (pivot_of_col[static_cast<size_t>(c)] >= 0)
                    x[static_cast<size_t>(c)] = aug.at(pivot_of_col[static_cast<size_t>(c)], bs);

            // assemble psi_k = u1^(rho*lambda_1) * sum x_ci h_ci
            std::vector<RatFunc> psi(static_cast<size_t>(n), RatFunc::zero(n));
            for (int i = 0; i < n; ++i) {
                RatFunc acc = RatFunc::zero(n);
                for (int ci = 0; ci < bs; ++ci)
                    acc += hs[static_cast<size_t>(ci)][static_cast<size_t>(i)] * x[static_cast<size_t>(ci)];
                psi[static_cast<size_t>(i)] = acc * u1pow;
            }
            aligned_columns[static_cast<size_t>(k)] = std::move(psi);
            // record the combination in the original column basis
            std::vector<Rational> c_full(static_cast<size_t>(n), Rational(0));
            for (int ci = 0; ci < bs; ++ci)
                for (int j = 0; j < n; ++j)
                    c_full[static_cast<size_t>(j)] +=
                        x[static_cast<size_t>(ci)] * kernel[static_cast<size_t>(ci)][static_cast<size_t>(j)];
            aligned_c[static_cast<size_t>(k)] = std::move(c_full);
        }
    }

    // the aligned combinations must form a basis
    {
        RatMatrix c(n, n, Rational(0));
        for (int k = 0; k < n; ++k) c.set_column(k, aligned_c[static_cast<size_t>(k)]);
        bool invertible = true;
        try {
            rat_inverse(c);
        } catch (const SingularMatrixError&) {
            invertible = false;
        }
        rep.add("aligned combinations form a basis", invertible);
    }

    // final verification per (k, s): exponents and the limit vector
    const std::vector<Rational> origin(static_cast<size_t>(n), Rational(0));
    for (int k = 0; k < n; ++k) {
        const auto& psi = aligned_columns[static_cast<size_t>(k)];
        RatFunc scale = RatFunc::constant(n, Rational(1));
        for (int s = 1; s <= n - 1; ++s) {
            const long e = exponents[static_cast<size_t>(k)][static_cast<size_t>(s - 1)].to_long();
            scale = scale * RatFunc::variable(n, s - 1).pow(-e);
            int ord = 1 << 20;
            for (const auto& entry : psi)
                if (!entry.is_zero()) ord = std::min(ord, entry.order_at_zero(s - 1));
            rep.add("column k=" + std::to_string(k + 1) + ": leading exponent in u_" +
                        std::to_string(s) + " equals " + std::to_string(e),
                    ord == static_cast<int>(e),
                    ord == static_cast<int>(e) ? "" : "measured " + std::to_string(ord));
        }
        bool regular = true, matches = true;
        for (int i = 0; i < n; ++i) {
            const RatFunc scaled = psi[static_cast<size_t>(i)] * scale;
            if (scaled.is_zero()) {
                if (!vs[static_cast<size_t>(k)][static_cast<size_t>(i)].is_zero()) matches = false;
                continue;
            }
            if (scaled.den().evaluate(origin).is_zero()) {
                regular = false;
                continue;
            }
            if (scaled.num().evaluate(origin) / scaled.den().evaluate(origin) !=
                vs[static_cast<size_t>(k)][static_cast<size_t>(i)])
                matches = false;
        }
        rep.add("column k=" + std::to_string(k + 1) +
                    ": scaled column regular at u=0 with value v_k",
                regular && matches);
    }
    return rep;
}

// referenced by hypergeom
RFMatrix u1_power_of_omega1(int n, long rho) { return u1_matrix_power(n, rho); }

} // namespace kz
