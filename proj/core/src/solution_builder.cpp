#include "kzsolve/solution_builder.hpp"

namespace kz {

ConfluentVandermonde confluent_vandermonde(const std::vector<RatFunc>& xi, int m) {
    return {xi, m, confluent_vandermonde_matrix(xi, m)};
}

template <class F>
SingleEquationBuilder<F>::SingleEquationBuilder(int n, int m, std::vector<F> xi)
    : n_(n), m_(m), xi_(std::move(xi)), engine_(n, -static_cast<long>(m), xi_) {
    if (n < 2) throw Error("builder requires n >= 2");
    if (m < 1) throw Error("builder requires m = -rho >= 1");
    for (size_t i = 0; i < xi_.size(); ++i)
        for (size_t j = i + 1; j < xi_.size(); ++j)
            if (kz::is_zero(xi_[i] - xi_[j])) throw DegeneratePolesError("pole locations coincide");
}

template <class F>
ColumnPF<F> SingleEquationBuilder<F>::from_stack(const std::vector<std::vector<F>>& stack,
                                                 int npoles,
                                                 std::vector<std::vector<F>> poly_part) const {
    ColumnPF<F> col;
    col.n = n_;
    col.m = m_;
    col.pole_coefs.assign(static_cast<size_t>(n_ - 1),
                          std::vector<std::vector<F>>(
                              static_cast<size_t>(m_),
                              std::vector<F>(static_cast<size_t>(n_), engine_.constant(Rational(0)))));
    col.poly_part = std::move(poly_part);
    if (npoles > 0) {
        std::vector<F> sub_xi(xi_.begin(), xi_.begin() + npoles);
        Matrix<F> r = confluent_vandermonde_matrix(sub_xi, m_);
        const int size = m_ * npoles;
        if (static_cast<int>(stack.size()) != size) throw Error("series stack size mismatch");
        Matrix<F> rhs(size, n_, engine_.constant(Rational(0)));
        for (int p = 0; p < size; ++p)
            for (int i = 0; i < n_; ++i) rhs.at(p, i) = stack[static_cast<size_t>(p)][static_cast<size_t>(i)];
        Matrix<F> l = solve_linear(r, rhs);
        for (int k = 0; k < npoles; ++k)
            for (int s = 1; s <= m_; ++s)
                for (int i = 0; i < n_; ++i)
                    col.pole_coefs[static_cast<size_t>(k)][static_cast<size_t>(s - 1)]
                                  [static_cast<size_t>(i)] = l.at(k * m_ + s - 1, i);
    }
    return col;
}

template <class F>
void SingleEquationBuilder<F>::scale_column(ColumnPF<F>& col, const std::vector<F>& lowest_coef) const {
    // first nonzero coordinate of the lowest series coefficient becomes 1
    F pivot = engine_.constant(Rational(0));
    for (const auto& e : lowest_coef)
        if (!kz::is_zero(e)) {
            pivot = e;
            break;
        }
    if (kz::is_zero(pivot) || kz::is_zero(pivot - engine_.constant(Rational(1)))) return;
    const F inv = engine_.constant(Rational(1)) / pivot;
    for (auto& block : col.pole_coefs)
        for (auto& vec : block)
            for (auto& e : vec) e = e * inv;
    for (auto& vec : col.poly_part)
        for (auto& e : vec) e = e * inv;
}

template <class F>
std::vector<ColumnPF<F>> SingleEquationBuilder<F>::type1_columns() const {
    std::vector<ColumnPF<F>> cols;
    const long lo = static_cast<long>(m_) * (n_ - 2);
    const long hi = static_cast<long>(m_) * (n_ - 1);
    for (int j = 0; j < n_ - 2; ++j) {
        SeriesState<F> s = engine_.seeded(lo, engine_.eigensystem().u2_vector(j));
        engine_.advance_to(s, hi);
        std::vector<std::vector<F>> stack;
        stack.reserve(static_cast<size_t>(hi));
        for (long p = 1; p <= hi; ++p)
            stack.push_back(s.has(p) ? s.at(p)
                                     : std::vector<F>(static_cast<size_t>(n_),
                                                      engine_.constant(Rational(0))));
        ColumnPF<F> col = from_stack(stack, n_ - 1, {});
        scale_column(col, s.at(lo));
        cols.push_back(std::move(col));
    }
    return cols;
}

template <class F>
ColumnPF<F> SingleEquationBuilder<F>::symmetric_column() const {
    const long hi = static_cast<long>(m_) * (n_ - 1);
    std::vector<std::vector<F>> stack(
        static_cast<size_t>(hi),
        std::vector<F>(static_cast<size_t>(n_), engine_.constant(Rational(0))));
    stack.back() = engine_.constant_vector(engine_.eigensystem().u1());
    return from_stack(stack, n_ - 1, {});
}

template <class F>
ColumnPF<F> SingleEquationBuilder<F>::polynomial_column() const {
    const long lo = -static_cast<long>(m_);
    const long top = static_cast<long>(m_) * (n_ - 2);
    SeriesState<F> s = engine_.seeded(lo, engine_.eigensystem().u3());
    engine_.advance_to(s, top);

    std::vector<std::vector<F>> poly(static_cast<size_t>(m_) + 1);
    for (int i = 0; i <= m_; ++i) poly[static_cast<size_t>(i)] = s.at(-static_cast<long>(i));

    std::vector<std::vector<F>> stack;
    for (long p = 1; p <= top; ++p) stack.push_back(s.at(p));
    ColumnPF<F> col = from_stack(stack, n_ - 2, std::move(poly));

    if (n_ >= 3) {
        // The resonant solve at index m(n-2) fixed the kernel (u2-family)
        // component of G_top to zero; the actual component is pinned by the
        // top-order pole cancellation (I - P_{1,k}) L_{k,m} = 0, k = 2..n-1.
        // Solve for the kernel offsets t_j and correct the pole coefficients.
        const int dim = n_ - 2;
        std::vector<ColumnPF<F>> deltas;
        for (int j = 0; j < dim; ++j) {
            std::vector<std::vector<F>> dstack(
                static_cast<size_t>(top),
                std::vector<F>(static_cast<size_t>(n_), engine_.constant(Rational(0))));
            dstack.back() = engine_.constant_vector(engine_.eigensystem().u2_vector(j));
            deltas.push_back(from_stack(dstack, n_ - 2, {}));
        }
        auto top_pole_defect = [&](const ColumnPF<F>& c, int k) {
            // component of (I - P_{1,k}) L_{k,m} along e_1 - e_k
            const auto& v = c.pole_coefs[static_cast<size_t>(k - 2)][static_cast<size_t>(m_ - 1)];
            return v[0] - v[static_cast<size_t>(k - 1)];
        };
        Matrix<F> a(dim, dim, engine_.constant(Rational(0)));
        Matrix<F> b(dim, 1, engine_.constant(Rational(0)));
        for (int k = 2; k <= n_ - 1; ++k) {
            for (int j = 0; j < dim; ++j)
                a.at(k - 2, j) = top_pole_defect(deltas[static_cast<size_t>(j)], k);
            b.at(k - 2, 0) = -top_pole_defect(col, k);
        }
        Matrix<F> t = solve_linear(a, b);
        for (int j = 0; j < dim; ++j) {
            const F& tj = t.at(j, 0);
            if (kz::is_zero(tj)) continue;
            for (size_t k = 0; k < col.pole_coefs.size(); ++k)
                for (size_t p = 0; p < col.pole_coefs[k].size(); ++p)
                    for (size_t i = 0; i < col.pole_coefs[k][p].size(); ++i)
                        col.pole_coefs[k][p][i] =
                            col.pole_coefs[k][p][i] +
                            deltas[static_cast<size_t>(j)].pole_coefs[k][p][i] * tj;
        }
    }
    scale_column(col, s.at(lo));
    return col;
}

template <class F>
std::vector<ColumnPF<F>> SingleEquationBuilder<F>::all_columns() const {
    std::vector<ColumnPF<F>> cols = type1_columns();
    cols.push_back(symmetric_column());
    cols.push_back(polynomial_column());
    return cols;
}

template class SingleEquationBuilder<Rational>;
template class SingleEquationBuilder<RatFunc>;

std::vector<RatFunc> symbolic_xi(int n) {
    std::vector<RatFunc> xi;
    xi.reserve(static_cast<size_t>(n - 1));
    for (int k = 1; k < n; ++k) xi.push_back(RatFunc::variable(n, k));
    return xi;
}

std::vector<RatFunc> assemble_column(const ColumnPF<RatFunc>& col, int n) {
    std::vector<RatFunc> out(static_cast<size_t>(n), RatFunc::zero(n));
    const MultiPoly z1 = MultiPoly::variable(n, 0);
    for (size_t k = 0; k < col.pole_coefs.size(); ++k) {
        const MultiPoly lin = z1 - MultiPoly::variable(n, static_cast<int>(k) + 1);
        for (size_t p = 0; p < col.pole_coefs[k].size(); ++p) {
            const RatFunc pole(MultiPoly::constant(n, Rational(1)), lin.pow(static_cast<unsigned>(p + 1)));
            for (int i = 0; i < n; ++i) {
                const RatFunc& c = col.pole_coefs[k][p][static_cast<size_t>(i)];
                if (!c.is_zero()) out[static_cast<size_t>(i)] += c * pole;
            }
        }
    }
    for (size_t e = 0; e < col.poly_part.size(); ++e) {
        const RatFunc zp(MultiPoly::monomial(n, Monomial::unit(0).pow(static_cast<unsigned>(e)), Rational(1)));
        for (int i = 0; i < n; ++i) {
            const RatFunc& c = col.poly_part[e][static_cast<size_t>(i)];
            if (!c.is_zero()) out[static_cast<size_t>(i)] += c * zp;
        }
    }
    return out;
}

RFMatrix assemble_columns(const std::vector<ColumnPF<RatFunc>>& cols, int n) {
    RFMatrix w = rf_zero_matrix(n, static_cast<int>(cols.size()), n);
    for (size_t c = 0; c < cols.size(); ++c)
        w.set_column(static_cast<int>(c), assemble_column(cols[c], n));
    return w;
}

RFMatrix equation_residual(const RFMatrix& w, int n, const Rational& rho, int eq) {
    const RFMatrix a = kz_coefficient_matrix(n, eq);
    RFMatrix d = w;
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) d.at(i, j) = w.at(i, j).derivative(eq - 1);
    return d - (a * w).scaled(RatFunc::constant(n, rho));
}

ColumnPF<RatFunc> pf_decompose_column(const std::vector<RatFunc>& column, int n, int m) {
    ColumnPF<RatFunc> col;
    col.n = n;
    col.m = m;
    col.pole_coefs.assign(static_cast<size_t>(n - 1), {});
    const MultiPoly z1 = MultiPoly::variable(n, 0);
    int max_poly_deg = -1;
    std::vector<std::vector<RatFunc>> entry_poly(static_cast<size_t>(n));
    std::vector<std::vector<std::vector<RatFunc>>> entry_poles(
        static_cast<size_t>(n), std::vector<std::vector<RatFunc>>(static_cast<size_t>(n - 1)));

    for (int i = 0; i < n; ++i) {
        RatFunc g = column[static_cast<size_t>(i)];
        for (int k = 2; k <= n; ++k) {
            const MultiPoly lin = z1 - MultiPoly::variable(n, k - 1);
            const int order = g.pole_order_at(lin);
            auto& coefs = entry_poles[static_cast<size_t>(i)][static_cast<size_t>(k - 2)];
            coefs.assign(static_cast<size_t>(order), RatFunc::zero(n));
            const RatFunc zk = RatFunc::variable(n, k - 1);
            for (int p = order; p >= 1; --p) {
                const RatFunc shifted = g * RatFunc(lin).pow(p);
                const RatFunc c = shifted.substitute(0, zk);
                coefs[static_cast<size_t>(p - 1)] = c;
                if (!c.is_zero()) g = g - c / RatFunc(lin).pow(p);
            }
        }
        if (g.den().degree_in(0) > 0)
            throw VerificationFailedError("partial-fraction remainder still has z1 poles");
        auto num_coefs = g.num().coefficients_in(0);
        auto& poly = entry_poly[static_cast<size_t>(i)];
        for (auto& c : num_coefs) poly.emplace_back(RatFunc(c, g.den()));
        max_poly_deg = std::max(max_poly_deg, static_cast<int>(poly.size()) - 1);
    }

    int max_order = m;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n - 1; ++k)
            max_order = std::max(max_order,
                                 static_cast<int>(entry_poles[static_cast<size_t>(i)][static_cast<size_t>(k)].size()));
    col.m = max_order;
    for (int k = 0; k < n - 1; ++k) {
        col.pole_coefs[static_cast<size_t>(k)].assign(
            static_cast<size_t>(max_order), std::vector<RatFunc>(static_cast<size_t>(n), RatFunc::zero(n)));
        for (int i = 0; i < n; ++i) {
            const auto& coefs = entry_poles[static_cast<size_t>(i)][static_cast<size_t>(k)];
            for (size_t p = 0; p < coefs.size(); ++p)
                col.pole_coefs[static_cast<size_t>(k)][p][static_cast<size_t>(i)] = coefs[p];
        }
    }
    col.poly_part.assign(static_cast<size_t>(max_poly_deg + 1),
                         std::vector<RatFunc>(static_cast<size_t>(n), RatFunc::zero(n)));
    for (int i = 0; i < n; ++i)
        for (size_t e = 0; e < entry_poly[static_cast<size_t>(i)].size(); ++e)
            col.poly_part[e][static_cast<size_t>(i)] = entry_poly[static_cast<size_t>(i)][e];

    if (assemble_column(col, n) != column)
        throw VerificationFailedError("partial-fraction reconstruction mismatch");
    return col;
}

namespace {

FundamentalSolution identity_solution(int n) {
    FundamentalSolution fs;
    fs.n = n;
    fs.rho = 0;
    fs.matrix = rf_identity(n, n);
    for (int c = 0; c < n; ++c) {
        ColumnPF<RatFunc> col;
        col.n = n;
        col.m = 0;
        col.pole_coefs.assign(static_cast<size_t>(n - 1), {});
        col.poly_part.assign(1, std::vector<RatFunc>(static_cast<size_t>(n), RatFunc::zero(n)));
        col.poly_part[0][static_cast<size_t>(c)] = RatFunc::constant(n, Rational(1));
        fs.columns.push_back(std::move(col));
    }
    return fs;
}

} // namespace

FundamentalSolution fundamental_solution(int n, long rho) {
    if (n < 2) throw Error("fundamental_solution requires n >= 2");
    if (rho == 0) return identity_solution(n);

    const int m = static_cast<int>(rho < 0 ? -rho : rho);
    SingleEquationBuilder<RatFunc> builder(n, m, symbolic_xi(n));
    std::vector<ColumnPF<RatFunc>> cols = builder.all_columns();
    RFMatrix w = assemble_columns(cols, n);

    FundamentalSolution fs;
    fs.n = n;
    fs.rho = rho;
    if (rho < 0) {
        fs.matrix = std::move(w);
        fs.columns = std::move(cols);
    } else {
        // dualization: (W^-1)^t solves the equation at +m
        fs.matrix = rfmatrix_inverse(w).transpose();
        for (int c = 0; c < n; ++c)
            fs.columns.push_back(pf_decompose_column(fs.matrix.column(c), n, m));
    }

    const RFMatrix residual = equation_residual(fs.matrix, n, Rational(rho), 1);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            if (!residual.at(r, c).is_zero())
                throw VerificationFailedError("column " + std::to_string(c + 1) +
                                              " residual is nonzero");
    if (rfmatrix_determinant(fs.matrix).is_zero())
        throw VerificationFailedError("fundamental solution has zero determinant");
    return fs;
}

RFMatrix normalize_at_matrix(const RFMatrix& w, int n, int eq, const Rational& point) {
    RFMatrix at_point = w;
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) {
            try {
                at_point.at(i, j) = w.at(i, j).substitute(eq - 1, point);
            } catch (const DegeneratePointError&) {
                throw SingularAtPointError("solution has a pole at the normalization point");
            }
        }
    RFMatrix inv(0, 0, RatFunc());
    try {
        inv = rfmatrix_inverse(at_point);
    } catch (const SingularMatrixError&) {
        throw SingularAtPointError("solution is singular at the normalization point");
    }
    (void)n;
    return w * inv;
}

FundamentalSolution normalize_at(const FundamentalSolution& w, const Rational& z10) {
    FundamentalSolution out;
    out.n = w.n;
    out.rho = w.rho;
    out.matrix = normalize_at_matrix(w.matrix, w.n, 1, z10);
    out.normalization_point = z10;
    for (int c = 0; c < out.n; ++c)
        out.columns.push_back(pf_decompose_column(out.matrix.column(c), out.n,
                                                  static_cast<int>(w.rho < 0 ? -w.rho : w.rho)));
    return out;
}

} // namespace kz
