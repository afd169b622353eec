#pragma once

#include <optional>

#include "kzsolve/series_engine.hpp"

namespace kz {

// One solution column of the single equation dY/dz1 = rho * A_1(z) Y in
// partial-fraction form:
//   Y = sum_{k=2}^n sum_{p=1}^m L_{k,p} / (z1 - z_k)^p + Q(z1),
// pole coefficients and polynomial coefficients being n-vectors over the
// coefficient field (functions of z2..zn in symbolic mode).
template <class F>
struct ColumnPF {
    int n = 0;
    int m = 0;
    // pole_coefs[k][p]: coefficient vector of (z1 - xi_k)^-(p+1), k in 0..n-2
    std::vector<std::vector<std::vector<F>>> pole_coefs;
    // poly_part[i]: coefficient vector of z1^i
    std::vector<std::vector<F>> poly_part;

    int pole_order(int k) const {
        const auto& orders = pole_coefs[static_cast<size_t>(k)];
        for (int p = static_cast<int>(orders.size()); p-- > 0;) {
            for (const auto& e : orders[static_cast<size_t>(p)])
                if (!kz::is_zero(e)) return p + 1;
        }
        return 0;
    }
    int poly_degree() const {
        for (int i = static_cast<int>(poly_part.size()); i-- > 0;) {
            for (const auto& e : poly_part[static_cast<size_t>(i)])
                if (!kz::is_zero(e)) return i;
        }
        return -1;
    }
};

// Block confluent Vandermonde map from pole coefficients (k, s) to the series
// coefficients at infinity: entry(p, (k,s)) = C(p-1, s-1) xi_k^(p-s) for
// p >= s, 0 otherwise; p = 1..m*npoles, column-blocks k, s = 1..m.
template <class F>
Matrix<F> confluent_vandermonde_matrix(const std::vector<F>& xi, int m, int nvars_hint = 0) {
    const int npoles = static_cast<int>(xi.size());
    if (npoles == 0) return Matrix<F>(0, 0, FieldTraits<F>::from_rational(Rational(0), nvars_hint));
    for (size_t i = 0; i < xi.size(); ++i)
        for (size_t j = i + 1; j < xi.size(); ++j)
            if (kz::is_zero(xi[i] - xi[j])) throw DegeneratePolesError("pole locations coincide");
    int nvars = nvars_hint;
    if constexpr (std::is_same_v<F, RatFunc>) nvars = xi.front().nvars();
    const int size = m * npoles;
    Matrix<F> r(size, size, FieldTraits<F>::from_rational(Rational(0), nvars));
    for (int p = 1; p <= size; ++p)
        for (int k = 0; k < npoles; ++k)
            for (int s = 1; s <= m; ++s) {
                if (p < s) continue;
                const Rational b = binomial(p - 1, s - 1);
                F v = FieldTraits<F>::from_rational(b, nvars);
                if (p > s) v = v * xi[static_cast<size_t>(k)].pow(p - s);
                r.at(p - 1, k * m + (s - 1)) = std::move(v);
            }
    return r;
}

struct ConfluentVandermonde {
    std::vector<RatFunc> xi;
    int m = 0;
    RFMatrix matrix;
};
ConfluentVandermonde confluent_vandermonde(const std::vector<RatFunc>& xi, int m);

// Theorem 2.1 construction for rho = -m < 0. xi holds the pole locations
// z_2..z_n (symbolic variables or numbers); they must be pairwise distinct.
template <class F>
class SingleEquationBuilder {
public:
    SingleEquationBuilder(int n, int m, std::vector<F> xi);

    // Step 1: n-2 pure partial-fraction columns seeded with the u2 family.
    std::vector<ColumnPF<F>> type1_columns() const;
    // Step 2: the symmetric column prod (z1 - z_k)^-m * [1..1].
    ColumnPF<F> symmetric_column() const;
    // Step 3: the column with a degree-m polynomial part and no pole at z_n.
    ColumnPF<F> polynomial_column() const;

    std::vector<ColumnPF<F>> all_columns() const;

    const SeriesEngine<F>& engine() const { return engine_; }

private:
    ColumnPF<F> from_stack(const std::vector<std::vector<F>>& stack, int npoles,
                           std::vector<std::vector<F>> poly_part) const;
    void scale_column(ColumnPF<F>& col, const std::vector<F>& lowest_coef) const;

    int n_, m_;
    std::vector<F> xi_;
    SeriesEngine<F> engine_;
};

// Fundamental matrix solution of the single equation (columns of the Steps
// 1-3 construction for rho < 0, dualized transpose-inverse for rho > 0,
// identity for rho = 0), fully symbolic over z_1..z_n.
struct FundamentalSolution {
    int n = 0;
    long rho = 0;
    RFMatrix matrix;                          // n x n over the z-ring
    std::vector<ColumnPF<RatFunc>> columns;   // partial-fraction data per column
    std::optional<Rational> normalization_point;
};

FundamentalSolution fundamental_solution(int n, long rho);

// Residual M = dW/dz_eq - rho * A_eq W of a candidate solution matrix (or a
// single column when cols = 1). eq is 1-based.
RFMatrix equation_residual(const RFMatrix& w, int n, const Rational& rho, int eq);

// W(z) * W(z_eq = point)^-1, identity at the point (spec: normalize_at with
// eq = 1). Throws SingularAtPointError.
RFMatrix normalize_at_matrix(const RFMatrix& w, int n, int eq, const Rational& point);
FundamentalSolution normalize_at(const FundamentalSolution& w, const Rational& z10);

// Exact partial-fraction data of a column with respect to z1 over the
// symbolic poles z_2..z_n; asserts the reconstruction matches.
ColumnPF<RatFunc> pf_decompose_column(const std::vector<RatFunc>& column, int n, int m);

// Symbolic variables z_2..z_n in the n-variable z-ring.
std::vector<RatFunc> symbolic_xi(int n);

RFMatrix assemble_columns(const std::vector<ColumnPF<RatFunc>>& cols, int n);
std::vector<RatFunc> assemble_column(const ColumnPF<RatFunc>& col, int n);

} // namespace kz
