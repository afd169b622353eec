#include "kzsolve/kz_assembly.hpp"

#include <random>

namespace kz {

void BasePointConfig::validate(int n) const {
    if (static_cast<int>(points.size()) != n)
        throw DegenerateBasePointsError("need exactly n base points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DegenerateBasePointsError("base points must be distinct");
}

RFMatrix swap_solution(const RFMatrix& w, int n, int j, const Rational& rho, bool verify) {
    if (j < 1 || j + 1 > n) throw InvalidIndexError("swap_solution: need 1 <= j <= n-1");
    RFMatrix swapped = w;
    for (int r = 0; r < w.rows(); ++r)
        for (int c = 0; c < w.cols(); ++c) swapped.at(r, c) = w.at(r, c).swap_vars(j - 1, j);
    RFMatrix out = to_rfmatrix(perm(n, j, j + 1), n) * swapped;
    if (verify && !equation_residual(out, n, rho, j + 1).is_zero())
        throw VerificationFailedError("swapped solution fails equation " + std::to_string(j + 1));
    return out;
}

namespace {

RFMatrix freeze_prefix(const RFMatrix& m, const std::vector<Rational>& base, int upto) {
    RFMatrix out = m;
    for (int v = 0; v < upto; ++v)
        for (int i = 0; i < out.rows(); ++i)
            for (int j = 0; j < out.cols(); ++j) {
                try {
                    out.at(i, j) = out.at(i, j).substitute(v, base[static_cast<size_t>(v)]);
                } catch (const DegeneratePointError&) {
                    throw DegenerateBasePointsError("stage solution has a pole at the base point");
                }
            }
    return out;
}

} // namespace

AssembledSolution assemble_product(int n, long rho, const BasePointConfig& base, bool verify_stages) {
    base.validate(n);
    AssembledSolution sol;
    sol.n = n;
    sol.rho = rho;
    sol.base = base;

    const FundamentalSolution fs = fundamental_solution(n, rho);
    const Rational rho_q(rho);

    RFMatrix eq_solution = fs.matrix;  // solves equation 1, fully symbolic
    for (int i = 1; i <= n; ++i) {
        if (i > 1) eq_solution = swap_solution(eq_solution, n, i - 1, rho_q, /*verify=*/false);
        RFMatrix stage = freeze_prefix(eq_solution, base.points, i - 1);
        stage = normalize_at_matrix(stage, n, i, base.points[static_cast<size_t>(i - 1)]);
        if (verify_stages) {
            // frozen equation-i residual
            RFMatrix a = kz_coefficient_matrix(n, i);
            a = freeze_prefix(a, base.points, i - 1);
            RFMatrix d = stage;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) d.at(r, c) = stage.at(r, c).derivative(i - 1);
            if (!(d - (a * stage).scaled(RatFunc::constant(n, rho_q))).is_zero())
                throw VerificationFailedError("stage " + std::to_string(i) + " residual is nonzero");
            for (int v = 0; v < i - 1; ++v)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        if (stage.at(r, c).uses_var(v))
                            throw VerificationFailedError("stage " + std::to_string(i) +
                                                          " depends on a frozen variable");
        }
        sol.factors.push_back(std::move(stage));
    }

    sol.product = sol.factors.front();
    for (size_t i = 1; i < sol.factors.size(); ++i) sol.product = sol.product * sol.factors[i];
    return sol;
}

namespace {

std::vector<Rational> random_regular_point(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 7);
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<Rational> z;
        z.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) z.emplace_back(num(rng), den(rng));
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j)
                if (z[static_cast<size_t>(i)] == z[static_cast<size_t>(j)]) {
                    distinct = false;
                    break;
                }
        if (distinct) return z;
    }
    throw Error("failed to sample a regular point");
}

} // namespace

namespace {

RatMatrix evaluate_matrix(const RFMatrix& m, const std::vector<Rational>& z) {
    RatMatrix r(m.rows(), m.cols(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).evaluate(z);
    return r;
}

RatMatrix kz_coefficient_at(int n, int eq, const std::vector<Rational>& z) {
    RatMatrix a(n, n, Rational(0));
    for (int k = 1; k <= n; ++k) {
        if (k == eq) continue;
        const Rational d = z[static_cast<size_t>(eq - 1)] - z[static_cast<size_t>(k - 1)];
        a = a + perm(n, eq, k).scaled(d.inverse());
    }
    return a;
}

} // namespace

Report verify_full_system(const RFMatrix& w, int n, const Rational& rho) {
    Report rep;

    std::vector<RFMatrix> dw;  // entry-wise derivatives, reused by both passes
    dw.reserve(static_cast<size_t>(n));
    for (int eq = 1; eq <= n; ++eq) {
        RFMatrix d = w;
        for (int i = 0; i < w.rows(); ++i)
            for (int j = 0; j < w.cols(); ++j) d.at(i, j) = w.at(i, j).derivative(eq - 1);
        dw.push_back(std::move(d));
    }

    // quick numeric spot check at random rational points, fail fast
    {
        std::mt19937 rng(20080403u);
        int done = 0;
        bool ok = true;
        std::string witness;
        int attempts = 0;
        while (done < 3 && ok && attempts < 60) {
            ++attempts;
            const std::vector<Rational> z = random_regular_point(n, rng);
            try {
                const RatMatrix wz = evaluate_matrix(w, z);
                for (int eq = 1; eq <= n && ok; ++eq) {
                    const RatMatrix r = evaluate_matrix(dw[static_cast<size_t>(eq - 1)], z) -
                                        (kz_coefficient_at(n, eq, z) * wz).scaled(rho);
                    if (!r.is_zero()) {
                        ok = false;
                        witness = "equation " + std::to_string(eq) + " at a sample point";
                    }
                }
                ++done;
            } catch (const DegeneratePointError&) {
                continue;  // sampled a pole, retry
            }
        }
        rep.add("numeric spot check (3 random points)", ok && done == 3, witness);
        if (!(ok && done == 3)) return rep;
    }

    for (int eq = 1; eq <= n; ++eq) {
        const RFMatrix a = kz_coefficient_matrix(n, eq);
        const RFMatrix r =
            dw[static_cast<size_t>(eq - 1)] - (a * w).scaled(RatFunc::constant(n, rho));
        std::string witness;
        const bool ok = r.is_zero();
        if (!ok) {
            for (int i = 0; i < n && witness.empty(); ++i)
                for (int j = 0; j < n; ++j)
                    if (!r.at(i, j).is_zero()) {
                        witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") = " + r.at(i, j).str();
                        break;
                    }
        }
        rep.add("equation " + std::to_string(eq) + " residual identically zero", ok, witness);
    }
    rep.add("det W not identically zero", !rfmatrix_determinant(w).is_zero());
    return rep;
}

std::vector<RatMatrix> taylor_oracle(int n, const Rational& rho, int eq,
                                     const std::vector<Rational>& center, int order) {
    if (eq < 1 || eq > n) throw InvalidIndexError("taylor_oracle: equation index out of range");
    if (static_cast<int>(center.size()) != n) throw Error("taylor_oracle: center must have n coordinates");
    for (int k = 1; k <= n; ++k)
        if (k != eq && center[static_cast<size_t>(eq - 1)] == center[static_cast<size_t>(k - 1)])
            throw SingularCenterError("center lies on a singular hyperplane of equation " +
                                      std::to_string(eq));

    // A_eq(z_eq = c + t) = sum_i A_i t^i with
    // A_i = sum_{k != eq} (-1)^i / (c_eq - c_k)^(i+1) P_{eq,k}
    std::vector<RatMatrix> a;
    a.reserve(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        RatMatrix ai(n, n, Rational(0));
        for (int k = 1; k <= n; ++k) {
            if (k == eq) continue;
            const Rational d = center[static_cast<size_t>(eq - 1)] - center[static_cast<size_t>(k - 1)];
            Rational c = d.pow(-(i + 1));
            if (i & 1) c = -c;
            ai = ai + perm(n, eq, k).scaled(c);
        }
        a.push_back(std::move(ai));
    }

    std::vector<RatMatrix> series;
    series.reserve(static_cast<size_t>(order) + 1);
    series.push_back(RatMatrix::identity(n, Rational(1), Rational(0)));
    for (int q = 0; q < order; ++q) {
        RatMatrix acc(n, n, Rational(0));
        for (int i = 0; i <= q; ++i) acc = acc + a[static_cast<size_t>(i)] * series[static_cast<size_t>(q - i)];
        series.push_back(acc.scaled(rho / Rational(q + 1)));
    }
    return series;
}

} // namespace kz
