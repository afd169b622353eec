#include "kzsolve/hypergeom.hpp"

namespace kz {

GaussParams gauss_params(long rho) {
    return {Rational(-rho), Rational(-3 * rho), Rational(1 - 2 * rho)};
}

RatFunc hypergeom_ode_residual(const RatFunc& psi, const GaussParams& p) {
    if (psi.nvars() > 1) throw Error("hypergeom_ode_residual expects a univariate function");
    const RatFunc y = RatFunc::variable(1, 0);
    const RatFunc one = RatFunc::constant(1, Rational(1));
    const RatFunc d1 = psi.derivative(0);
    const RatFunc d2 = d1.derivative(0);
    return y * (one - y) * d2 +
           (RatFunc::constant(1, p.gamma) - y * (p.alpha + p.beta + Rational(1))) * d1 -
           psi * (p.alpha * p.beta);
}

std::pair<RatFunc, RatFunc> phi_system_residual(const PhiPair& pair, long rho) {
    const RatFunc y = RatFunc::variable(1, 0);
    const RatFunc one = RatFunc::constant(1, Rational(1));
    const Rational r(rho);
    const RatFunc r1 = pair.phi1.derivative(0) - pair.phi2 * Rational(3 * rho) / y;
    const RatFunc r2 = pair.phi2.derivative(0) -
                       (pair.phi2 * Rational(2) / y + pair.phi2 * Rational(2) / (one + y) -
                        pair.phi1 / (one + y)) *
                           r;
    return {r1, r2};
}

RatFunc terminating_hypergeom_series(const GaussParams& p, long deg) {
    MultiPoly sum = MultiPoly::constant(1, Rational(1));
    Rational rising_a(1), rising_b(1), rising_c(1), fact(1);
    for (long k = 1; k <= deg; ++k) {
        rising_a *= p.alpha + Rational(k - 1);
        rising_b *= p.beta + Rational(k - 1);
        const Rational cf = p.gamma + Rational(k - 1);
        if (cf.is_zero())
            throw Error("terminating series undefined: (gamma)_k vanishes at k = " +
                        std::to_string(k));
        rising_c *= cf;
        fact *= Rational(k);
        const Rational coef = rising_a * rising_b / (rising_c * fact);
        sum += MultiPoly::monomial(1, Monomial::unit(0).pow(static_cast<unsigned>(k)), coef);
    }
    return RatFunc(sum);
}

namespace {

// aligns a u-ring function of u2 alone into the univariate y-ring
RatFunc to_y(const RatFunc& f) { return f.project_to_univariate(1); }

} // namespace

N3Solution build_n3_solution(long rho) {
    constexpr int n = 3;
    N3Solution out;
    out.rho = rho;

    if (rho == 0) {
        out.w1 = rf_identity(n, n);
        out.w2 = rf_identity(n, n);
        for (int c = 0; c < n; ++c) {
            std::vector<RatFunc> col(static_cast<size_t>(n), RatFunc::zero(n));
            col[static_cast<size_t>(c)] = RatFunc::constant(n, Rational(1));
        }
        out.symmetric_column.assign(static_cast<size_t>(n), RatFunc::constant(n, Rational(1)));
        return out;
    }

    const AssembledSolution sol = assemble_product(n, rho, BasePointConfig::default_for(n));
    const RFMatrix wu = transport_to_u(sol.product, n);

    out.w1 = u1_power_of_omega1(n, rho);
    // W2 = u1^(-rho*Omega_1) * W_u must be u1-free and solve the u2 equation
    out.w2 = u1_power_of_omega1(n, -rho) * wu;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out.w2.at(i, j).uses_var(0))
                throw VerificationFailedError("u2-factor of the solution still depends on u1");
    {
        const RFMatrix h2 = h_matrix(n, 2).matrix;
        RFMatrix d = out.w2;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d.at(i, j) = out.w2.at(i, j).derivative(1);
        if (!(d - (h2 * out.w2).scaled(RatFunc::constant(n, Rational(rho)))).is_zero())
            throw VerificationFailedError("W2 does not solve the u2 equation");
    }

    // F(y) = W2(y) y^rho (1+y)^rho, then block coordinates in (w1, w2, u1)
    const RatFunc u2 = RatFunc::variable(n, 1);
    const RatFunc weight =
        u2.pow(rho) * (RatFunc::constant(n, Rational(1)) + u2).pow(rho);
    const RFMatrix f = out.w2.scaled(weight);

    RatMatrix basis(3, 3, Rational(0));  // columns w1, w2, u1
    basis.at(0, 0) = Rational(0);
    basis.at(1, 0) = Rational(1);
    basis.at(2, 0) = Rational(-1);
    basis.at(0, 1) = Rational(1);
    basis.at(1, 1) = Rational(-2);
    basis.at(2, 1) = Rational(1);
    basis.at(0, 2) = Rational(1);
    basis.at(1, 2) = Rational(1);
    basis.at(2, 2) = Rational(1);
    const RFMatrix coords = to_rfmatrix(rat_inverse(basis), n) * f;

    for (int c = 0; c < 3; ++c) {
        PhiPair pair{to_y(coords.at(0, c)), to_y(coords.at(1, c))};
        const auto [r1, r2] = phi_system_residual(pair, rho);
        if (!r1.is_zero() || !r2.is_zero())
            throw VerificationFailedError("extracted pair fails the first-order system");
        out.phi_pairs.push_back(std::move(pair));
    }

    // two pairs with independent phi1's (nonzero Wronskian)
    for (size_t a = 0; a < out.phi_pairs.size() && out.psi.size() < 2; ++a)
        for (size_t b = a + 1; b < out.phi_pairs.size() && out.psi.size() < 2; ++b) {
            const RatFunc& f1 = out.phi_pairs[a].phi1;
            const RatFunc& f2 = out.phi_pairs[b].phi1;
            const RatFunc wr = f1 * f2.derivative(0) - f2 * f1.derivative(0);
            if (!wr.is_zero()) {
                out.psi.push_back(f1.negate_var(0));
                out.psi.push_back(f2.negate_var(0));
            }
        }
    if (out.psi.size() < 2)
        throw VerificationFailedError("could not extract two independent phi functions");
    const GaussParams p = gauss_params(rho);
    for (const auto& psi : out.psi)
        if (!hypergeom_ode_residual(psi, p).is_zero())
            throw VerificationFailedError("extracted psi fails the Gauss equation");

    // symmetric column of the u2 system
    out.symmetric_column.assign(static_cast<size_t>(n), weight);
    {
        const RFMatrix h2 = h_matrix(n, 2).matrix;
        std::vector<RatFunc> d;
        d.reserve(3);
        for (const auto& e : out.symmetric_column) d.push_back(e.derivative(1));
        const std::vector<RatFunc> hy = h2.apply(out.symmetric_column);
        for (int i = 0; i < n; ++i)
            if (!(d[static_cast<size_t>(i)] - hy[static_cast<size_t>(i)] * Rational(rho)).is_zero())
                throw VerificationFailedError("symmetric column fails the u2 equation");
    }
    return out;
}

Report rationality_certificate(long rho) {
    if (rho == 0) throw Error("rationality_certificate requires rho != 0");
    Report rep;
    const GaussParams p = gauss_params(rho);
    const std::string tag = " (rho=" + std::to_string(rho) + ")";

    const N3Solution sol = build_n3_solution(rho);
    rep.add("two rational solutions extracted" + tag, sol.psi.size() >= 2);
    for (size_t i = 0; i < sol.psi.size(); ++i)
        rep.add("solution " + std::to_string(i + 1) + " has zero Gauss residual" + tag,
                hypergeom_ode_residual(sol.psi[i], p).is_zero());
    {
        const RatFunc wr = sol.psi[0] * sol.psi[1].derivative(0) -
                           sol.psi[1] * sol.psi[0].derivative(0);
        rep.add("Wronskian of the pair is nonzero" + tag, !wr.is_zero());
    }

    if (rho == -1) {
        // psi = 1/(1-y) against y(1-y) psi'' + (3-5y) psi' - 3 psi = 0
        const RatFunc psi(MultiPoly::constant(1, Rational(1)),
                          MultiPoly::constant(1, Rational(1)) - MultiPoly::variable(1, 0));
        rep.add("psi = 1/(1-y) solves the rho=-1 equation",
                hypergeom_ode_residual(psi, gauss_params(-1)).is_zero());
    }

    const bool gamma_nonpositive_integer = p.gamma.is_integer() && p.gamma.sign() <= 0;
    if (gamma_nonpositive_integer) {
        rep.add_skipped("classical series F(alpha,beta;gamma;y)" + tag,
                        "gamma = " + p.gamma.str() + " is a non-positive integer");
        // the alpha-terminating polynomial is still defined ((gamma)_k != 0
        // for k <= -alpha) and solves the equation
        if (p.alpha.is_integer() && p.alpha.sign() <= 0) {
            const long deg = (-p.alpha).to_long();
            try {
                const RatFunc poly = terminating_hypergeom_series(p, deg);
                rep.add("terminating polynomial F(-rho,-3rho;1-2rho;y) solves the equation" + tag,
                        hypergeom_ode_residual(poly, p).is_zero());
            } catch (const Error& e) {
                rep.add("terminating polynomial F(-rho,-3rho;1-2rho;y) solves the equation" + tag,
                        false, e.what());
            }
        }
    }
    return rep;
}

} // namespace kz
