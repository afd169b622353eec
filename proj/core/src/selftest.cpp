#include "kzsolve/selftest.hpp"

#include <chrono>
#include <random>

namespace kz {

namespace {

std::vector<std::pair<int, long>> rationality_grid(Tier tier) {
    if (tier == Tier::quick) return {{3, -1}, {3, 1}};
    std::vector<std::pair<int, long>> grid;
    for (int n : {3, 4})
        for (long rho : {-2L, -1L, 1L, 2L}) grid.emplace_back(n, rho);
    return grid;
}

std::string tag(int n, long rho) {
    return "(n=" + std::to_string(n) + ", rho=" + std::to_string(rho) + ")";
}

} // namespace

Report criterion_rationality(Tier tier) {
    Report rep;
    for (const auto& [n, rho] : rationality_grid(tier)) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const AssembledSolution sol =
                assemble_product(n, rho, BasePointConfig::default_for(n));
            Report v = verify_full_system(sol.product, n, Rational(rho));
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep.add("construct+verify " + tag(n, rho), v.all_passed(),
                    v.all_passed() ? "" : "see verify report", secs);
            // the product equals the identity at the base point
            bool id_ok = true;
            for (int i = 0; i < n && id_ok; ++i)
                for (int j = 0; j < n; ++j) {
                    const Rational val = sol.product.at(i, j).evaluate(sol.base.points);
                    if (val != Rational(i == j ? 1 : 0)) {
                        id_ok = false;
                        break;
                    }
                }
            rep.add("identity at the base point " + tag(n, rho), id_ok);
        } catch (const Error& e) {
            rep.add("construct+verify " + tag(n, rho), false, e.what());
        }
    }
    return rep;
}

Report criterion_consistency(Tier tier) {
    Report rep;
    const int nmax_flat = tier == Tier::quick ? 3 : 5;
    const int nmax_perm = tier == Tier::quick ? 4 : 6;
    const std::vector<Rational> rhos = {Rational(-2), Rational(-1), Rational(1), Rational(2),
                                        Rational(1, 2)};
    for (int n = 2; n <= nmax_flat; ++n) {
        // the rho-independent pieces: D_ij = dA_i/dz_j - dA_j/dz_i, C_ij = [A_i, A_j]
        std::vector<RFMatrix> a;
        for (int j = 1; j <= n; ++j) a.push_back(kz_coefficient_matrix(n, j));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const RFMatrix& ai = a[static_cast<size_t>(i - 1)];
                const RFMatrix& aj = a[static_cast<size_t>(j - 1)];
                RFMatrix dij = ai, dji = aj;
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) {
                        dij.at(r, c) = ai.at(r, c).derivative(j - 1);
                        dji.at(r, c) = aj.at(r, c).derivative(i - 1);
                    }
                const RFMatrix d = dij - dji;
                const RFMatrix comm = ai * aj - aj * ai;
                for (const auto& rho : rhos) {
                    const RFMatrix curv = d.scaled(RatFunc::constant(n, rho)) +
                                          comm.scaled(RatFunc::constant(n, rho * rho));
                    rep.add("flatness n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) +
                                "," + std::to_string(j) + ") rho=" + rho.str(),
                            curv.is_zero());
                }
            }
    }
    for (int n = 2; n <= nmax_perm; ++n) {
        Report r = check_transposition_relations(n);
        for (auto& e : r.entries) e.name += " n=" + std::to_string(n);
        rep.merge(r);
    }
    return rep;
}

Report criterion_pole_degree(Tier tier) {
    Report rep;
    for (const auto& [n, rho] : rationality_grid(tier)) {
        try {
            const FundamentalSolution fs = fundamental_solution(n, rho);
            const int m = static_cast<int>(rho < 0 ? -rho : rho);
            bool pole_ok = true;
            int max_deg = -1;
            std::string witness;
            for (size_t c = 0; c < fs.columns.size(); ++c) {
                const auto& col = fs.columns[c];
                for (int k = 0; k < n - 1; ++k) {
                    const int order = col.pole_order(k);
                    if (order > m) {
                        pole_ok = false;
                        witness = "column " + std::to_string(c + 1) + " pole z_" +
                                  std::to_string(k + 2) + " order " + std::to_string(order);
                    }
                }
                max_deg = std::max(max_deg, col.poly_degree());
            }
            // cross-measure pole orders on the assembled entries
            const MultiPoly z1 = MultiPoly::variable(n, 0);
            for (int k = 2; k <= n && pole_ok; ++k) {
                const MultiPoly lin = z1 - MultiPoly::variable(n, k - 1);
                for (int i = 0; i < n && pole_ok; ++i)
                    for (int j = 0; j < n; ++j)
                        if (fs.matrix.at(i, j).pole_order_at(lin) > m) {
                            pole_ok = false;
                            witness = "entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") pole z_" + std::to_string(k);
                            break;
                        }
            }
            rep.add("pole orders <= m " + tag(n, rho), pole_ok, witness);
            const int expected_deg = rho > 0 ? m * (n - 1) : m;
            rep.add("polynomial part degree " + tag(n, rho) + " = " +
                        std::to_string(expected_deg),
                    max_deg == expected_deg,
                    max_deg == expected_deg ? "" : "measured " + std::to_string(max_deg));
        } catch (const Error& e) {
            rep.add("pole/degree " + tag(n, rho), false, e.what());
        }
    }
    return rep;
}

Report criterion_omega(Tier tier) {
    Report rep;
    // printed matrices
    {
        const RatMatrix o31 = omega_matrix(3, 1).matrix;
        RatMatrix ones(3, 3, Rational(1));
        rep.add("Omega_1 (n=3) is the all-ones matrix", o31 == ones);

        const RatMatrix o41 = omega_matrix(4, 1).matrix;
        RatMatrix e41(4, 4, Rational(1));
        for (int i = 0; i < 4; ++i) e41.at(i, i) = Rational(3);
        rep.add("Omega_1 (n=4) matches the printed matrix", o41 == e41);

        const RatMatrix o42 = omega_matrix(4, 2).matrix;
        RatMatrix e42(4, 4, Rational(1));
        for (int j = 1; j < 4; ++j) {
            e42.at(0, j) = Rational(0);
            e42.at(j, 0) = Rational(0);
        }
        e42.at(0, 0) = Rational(3);
        rep.add("Omega_2 (n=4) matches the printed matrix", o42 == e42);
    }
    const int nmax = tier == Tier::quick ? 5 : 8;
    for (int n = 3; n <= nmax; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            bool ok = true;
            std::string witness;
            Rational trace_sum(0);
            try {
                const OmegaEigenpairs e = omega_eigensystem(n, s);  // block form + eigenvectors
                for (const auto& lam : e.eigenvalues) trace_sum += lam;
                const Rational n1 = omega_matrix(n, s).scalar_block;
                const Rational ns = omega_matrix(n, s).diagonal;
                const Rational expected = Rational(s - 1) * n1 + Rational(n - s + 1) * ns;
                if (trace_sum != expected) {
                    ok = false;
                    witness = "trace " + trace_sum.str() + " != " + expected.str();
                }
            } catch (const Error& err) {
                ok = false;
                witness = err.what();
            }
            rep.add("Omega block form, eigenvectors, trace (n=" + std::to_string(n) +
                        ", s=" + std::to_string(s) + ")",
                    ok, witness);
        }
    return rep;
}

Report criterion_h_matrices(Tier tier) {
    Report rep;
    const int nmax = tier == Tier::quick ? 4 : 5;
    for (int n = 3; n <= nmax; ++n) {
        rep.add("H_n = 0 (n=" + std::to_string(n) + ")", h_matrix(n, n).matrix.is_zero());
        rep.merge(h_asymptotic_check(n, 1));
        for (int s = 2; s <= n - 1; ++s) rep.merge(h_asymptotic_check(n, s));
    }
    const int nmax_chain = tier == Tier::quick ? 3 : 4;
    for (int n = 3; n <= nmax_chain; ++n)
        for (int k = 1; k <= n; ++k)
            rep.add("alpha-formula equals the chain rule (n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")",
                    h_matrix(n, k).matrix == h_matrix_chain_rule(n, k));

    // printed H formulas
    {
        const int n = 3;
        const RatFunc u2 = RatFunc::variable(n, 1);
        const RatFunc one = RatFunc::constant(n, Rational(1));
        RFMatrix expect = to_rfmatrix(perm(n, 3, 2), n).scaled(one / u2) +
                          to_rfmatrix(perm(n, 3, 1), n).scaled(one / (one + u2));
        rep.add("H_2 (n=3) matches the printed formula", h_matrix(3, 2).matrix == expect);
    }
    {
        const int n = 4;
        const RatFunc u2 = RatFunc::variable(n, 1);
        const RatFunc u3 = RatFunc::variable(n, 2);
        const RatFunc one = RatFunc::constant(n, Rational(1));
        const RatFunc q = one + u2 + u2 * u3;
        RFMatrix e2 = to_rfmatrix(omega_matrix(4, 2).matrix, n).scaled(one / u2) +
                      to_rfmatrix(perm(n, 1, 3), n).scaled(one / (one + u2)) +
                      to_rfmatrix(perm(n, 1, 4), n).scaled((one + u3) / q);
        rep.add("H_2 (n=4) matches the printed formula", h_matrix(4, 2).matrix == e2);
        RFMatrix e3 = to_rfmatrix(perm(n, 4, 3), n).scaled(one / u3) +
                      to_rfmatrix(perm(n, 4, 2), n).scaled(one / (one + u3)) +
                      to_rfmatrix(perm(n, 4, 1), n).scaled(u2 / q);
        rep.add("H_3 (n=4) matches the printed formula", h_matrix(4, 3).matrix == e3);
    }
    return rep;
}

Report criterion_asymptotics(Tier tier) {
    Report rep;
    const std::vector<long> rhos = tier == Tier::quick ? std::vector<long>{-1}
                                                       : std::vector<long>{-1, 1};
    for (long rho : rhos) {
        try {
            const AssembledSolution sol = assemble_product(3, rho, BasePointConfig::default_for(3));
            Report r = check_leading_asymptotics(sol);
            for (auto& e : r.entries) e.name += " [rho=" + std::to_string(rho) + "]";
            rep.merge(r);
        } catch (const Error& e) {
            rep.add("leading asymptotics rho=" + std::to_string(rho), false, e.what());
        }
    }
    return rep;
}

Report criterion_hypergeom(Tier tier) {
    Report rep;
    const std::vector<long> rhos = tier == Tier::quick ? std::vector<long>{-1}
                                                       : std::vector<long>{-2, -1, 1, 2};
    for (long rho : rhos) {
        try {
            rep.merge(rationality_certificate(rho));
        } catch (const Error& e) {
            rep.add("rationality certificate rho=" + std::to_string(rho), false, e.what());
        }
    }
    return rep;
}

Report criterion_taylor_oracle(Tier tier) {
    Report rep;
    constexpr int order = 20;
    const auto grid = tier == Tier::quick
                          ? std::vector<std::pair<int, long>>{{3, -1}}
                          : std::vector<std::pair<int, long>>{{3, -1}, {3, 1}, {4, -1}, {4, 1}};
    std::mt19937 rng(271828u);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 5);
    for (const auto& [n, rho] : grid) {
        try {
            const AssembledSolution sol =
                assemble_product(n, rho, BasePointConfig::default_for(n));
            for (int eq = 1; eq <= n; ++eq) {
                bool ok = true;
                std::string witness;
                int done = 0, attempts = 0;
                while (done < 3 && ok && attempts < 100) {
                    ++attempts;
                    std::vector<Rational> center;
                    for (int i = 0; i < n; ++i) center.emplace_back(num(rng), den(rng));
                    bool distinct = true;
                    for (int i = 0; i < n && distinct; ++i)
                        for (int j = i + 1; j < n; ++j)
                            if (center[static_cast<size_t>(i)] == center[static_cast<size_t>(j)])
                                distinct = false;
                    if (!distinct) continue;
                    try {
                        // constructed solution restricted to the z_eq line,
                        // normalized to the identity at the center
                        RFMatrix line = sol.product;
                        for (int v = 0; v < n; ++v) {
                            if (v == eq - 1) continue;
                            for (int i = 0; i < n; ++i)
                                for (int j = 0; j < n; ++j)
                                    line.at(i, j) =
                                        line.at(i, j).substitute(v, center[static_cast<size_t>(v)]);
                        }
                        RatMatrix w0(n, n, Rational(0));
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j)
                                w0.at(i, j) = line.at(i, j).evaluate(center);
                        const RatMatrix w0inv = rat_inverse(w0);
                        // Taylor coefficients of line * w0inv around the center
                        std::vector<RatMatrix> series(
                            static_cast<size_t>(order) + 1, RatMatrix(n, n, Rational(0)));
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j) {
                                const auto cs = taylor_coefficients(
                                    line.at(i, j).project_to_univariate(eq - 1),
                                    center[static_cast<size_t>(eq - 1)], order);
                                for (int o = 0; o <= order; ++o)
                                    series[static_cast<size_t>(o)].at(i, j) =
                                        cs[static_cast<size_t>(o)];
                            }
                        for (auto& s : series) s = s * w0inv;
                        const auto oracle = taylor_oracle(n, Rational(rho), eq, center, order);
                        for (int o = 0; o <= order && ok; ++o)
                            if (series[static_cast<size_t>(o)] != oracle[static_cast<size_t>(o)]) {
                                ok = false;
                                witness = "coefficient " + std::to_string(o) + " differs";
                            }
                        ++done;
                    } catch (const DegeneratePointError&) {
                        continue;
                    } catch (const SingularMatrixError&) {
                        continue;
                    } catch (const SingularCenterError&) {
                        continue;
                    }
                }
                rep.add("oracle match to order 20, eq " + std::to_string(eq) + " " + tag(n, rho),
                        ok && done == 3, witness);
            }
        } catch (const Error& e) {
            rep.add("taylor oracle " + tag(n, rho), false, e.what());
        }
    }
    return rep;
}

std::vector<CriterionResult> run_acceptance(Tier tier) {
    struct Item {
        int index;
        const char* name;
        Report (*fn)(Tier);
    };
    const Item items[] = {
        {1, "rationality and exact residuals", criterion_rationality},
        {2, "consistency and transposition identities", criterion_consistency},
        {3, "pole and degree law", criterion_pole_degree},
        {4, "Omega matrices and spectra", criterion_omega},
        {5, "H-matrix formulas", criterion_h_matrices},
        {6, "asymptotic exponents", criterion_asymptotics},
        {7, "hypergeometric rationality", criterion_hypergeom},
        {8, "Taylor-series oracle equivalence", criterion_taylor_oracle},
    };
    std::vector<CriterionResult> out;
    for (const auto& item : items) {
        CriterionResult r;
        r.index = item.index;
        r.name = item.name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.report = item.fn(tier);
        } catch (const std::exception& e) {
            r.report.add(std::string("criterion aborted: ") + e.what(), false);
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace kz
