#pragma once

#include "kzsolve/matrix.hpp"
#include "kzsolve/symmetric_rep.hpp"

namespace kz {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational from_rational(const Rational& c, int /*nvars*/) { return c; }
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc from_rational(const Rational& c, int nvars) { return RatFunc::constant(nvars, c); }
};

// Eigensystem of T_{-1} = sum_{k=2}^n P_{1,k}: eigenvalue n-1 on the all-ones
// vector, n-2 on the (n-2)-dimensional family with zero first coordinate and
// zero coordinate sum, -1 on [n-1, -1, ..., -1]. The concrete middle basis is
// e_k - e_{k+1} restricted to coordinates 2..n.
struct Eigensystem {
    int n = 0;
    RatMatrix basis;      // columns: u1, u2 family, u3
    RatMatrix basis_inv;
    std::vector<Rational> eigenvalues;  // per basis column

    static Eigensystem natural(int n);  // n >= 2; throws EigencheckFailedError

    std::vector<Rational> u1() const { return basis.column(0); }
    std::vector<Rational> u3() const { return basis.column(n - 1); }
    std::vector<Rational> u2_vector(int j) const { return basis.column(1 + j); }  // j in 0..n-3
};

// T_p = sum_{k=2}^n P_{1,k} z_k^(p+1) over the z-ring (spec: t_matrix).
struct TMatrix {
    int n = 0;
    int p = -1;
    RFMatrix matrix;
};
TMatrix t_matrix(int n, const std::vector<RatFunc>& xi, int p);
RatMatrix t_minus1(int n);
Eigensystem t_minus1_eigensystem(int n);

// Power-series state around z1 = infinity: coefficients G_lowest, G_lowest+1, ...
// of V(u) = sum u^j G_j (vectors of length n over the coefficient field).
template <class F>
struct SeriesState {
    long lowest_index = 0;
    std::vector<std::vector<F>> coefs;
    std::vector<long> resonant_indices;

    long next_index() const { return lowest_index + static_cast<long>(coefs.size()); }
    const std::vector<F>& at(long index) const {
        return coefs.at(static_cast<size_t>(index - lowest_index));
    }
    bool has(long index) const {
        return index >= lowest_index && index < next_index();
    }
};

template <class F>
std::vector<F> rat_mat_apply(const RatMatrix& m, const std::vector<F>& v) {
    std::vector<F> r;
    r.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        F acc = v[0] * m.at(i, 0);
        for (int j = 1; j < m.cols(); ++j) acc = acc + v[static_cast<size_t>(j)] * m.at(i, j);
        r.push_back(std::move(acc));
    }
    return r;
}

// Advances the fundamental recursion
//   [(q+1) + rho * T_{-1}] G_{q+1} = -rho * sum_{j+l=q, j>=0} T_j G_l
// solving through the eigenbasis of T_{-1}. At resonant indices
// ((q+1) + rho*lambda = 0) solvability is verified and the kernel component
// of the particular solution is set to zero.
template <class F>
class SeriesEngine {
public:
    SeriesEngine(int n, long rho, std::vector<F> xi)
        : n_(n), rho_(rho), xi_(std::move(xi)), eig_(Eigensystem::natural(n)) {
        if (static_cast<int>(xi_.size()) != n - 1) throw Error("series engine: xi must have n-1 entries");
        if (rho_ == 0) throw Error("series engine: rho must be a nonzero integer");
        nvars_ = 0;
        if constexpr (std::is_same_v<F, RatFunc>) nvars_ = xi_.front().nvars();
        pow_cache_.assign(xi_.size(), {});
    }

    int n() const { return n_; }
    long rho() const { return rho_; }
    const Eigensystem& eigensystem() const { return eig_; }
    F constant(const Rational& c) const { return FieldTraits<F>::from_rational(c, nvars_); }

    std::vector<F> constant_vector(const std::vector<Rational>& v) const {
        std::vector<F> r;
        r.reserve(v.size());
        for (const auto& c : v) r.push_back(constant(c));
        return r;
    }

    // T_p g = sum_k xi_k^(p+1) * (swap coordinates 1 and k of g)
    std::vector<F> t_apply(long p, const std::vector<F>& g) const {
        std::vector<F> acc(static_cast<size_t>(n_), constant(Rational(0)));
        for (int k = 2; k <= n_; ++k) {
            const F& w = xi_power(k - 2, p + 1);
            std::vector<F> swapped = swap_coords(g, 1, k);
            for (int i = 0; i < n_; ++i)
                acc[static_cast<size_t>(i)] =
                    acc[static_cast<size_t>(i)] + swapped[static_cast<size_t>(i)] * w;
        }
        return acc;
    }

    SeriesState<F> seeded(long index, std::vector<F> g) const {
        SeriesState<F> s;
        s.lowest_index = index;
        s.coefs.push_back(std::move(g));
        return s;
    }
    SeriesState<F> seeded(long index, const std::vector<Rational>& g) const {
        return seeded(index, constant_vector(g));
    }

    void advance(SeriesState<F>& s) const {
        const long q1 = s.next_index();  // q+1
        const long q = q1 - 1;
        // right side: -rho * sum_{j>=0, j+l=q} T_j G_l
        std::vector<F> rhs(static_cast<size_t>(n_), constant(Rational(0)));
        for (long l = s.lowest_index; l <= q; ++l) {
            const long j = q - l;
            const std::vector<F>& g = s.at(l);
            bool all_zero = true;
            for (const auto& e : g)
                if (!kz::is_zero(e)) {
                    all_zero = false;
                    break;
                }
            if (all_zero) continue;
            std::vector<F> tg = t_apply(j, g);
            for (int i = 0; i < n_; ++i)
                rhs[static_cast<size_t>(i)] = rhs[static_cast<size_t>(i)] + tg[static_cast<size_t>(i)];
        }
        const Rational neg_rho(-rho_);
        for (auto& e : rhs) e = e * neg_rho;

        // solve in the eigenbasis
        std::vector<F> w = rat_mat_apply(eig_.basis_inv, rhs);
        bool resonant = false;
        for (int i = 0; i < n_; ++i) {
            const Rational factor = Rational(q1) + Rational(rho_) * eig_.eigenvalues[static_cast<size_t>(i)];
            if (factor.is_zero()) {
                resonant = true;
                if (!kz::is_zero(w[static_cast<size_t>(i)]))
                    throw ResonanceObstructionError(
                        "resonance obstruction at index " + std::to_string(q1) +
                        ", eigen-coordinate " + std::to_string(i));
                // kernel component of the particular solution stays zero
            } else {
                w[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] * factor.inverse();
            }
        }
        s.coefs.push_back(rat_mat_apply(eig_.basis, w));
        if (resonant) s.resonant_indices.push_back(q1);
    }

    void advance_to(SeriesState<F>& s, long top_index) const {
        while (s.next_index() <= top_index) advance(s);
    }

    // Indices q+1 in (from, to] where (q+1) + rho*lambda = 0 for an eigenvalue.
    std::vector<long> predicted_resonances(long from, long to) const {
        std::vector<long> out;
        for (long idx = from + 1; idx <= to; ++idx)
            for (const auto& lam : eig_.eigenvalues)
                if ((Rational(idx) + Rational(rho_) * lam).is_zero()) {
                    out.push_back(idx);
                    break;
                }
        return out;
    }

private:
    const F& xi_power(int k, long e) const {
        auto& cache = pow_cache_[static_cast<size_t>(k)];
        if (cache.empty()) cache.push_back(constant(Rational(1)));
        while (static_cast<long>(cache.size()) <= e)
            cache.push_back(cache.back() * xi_[static_cast<size_t>(k)]);
        return cache[static_cast<size_t>(e)];
    }

    int n_;
    long rho_;
    std::vector<F> xi_;
    Eigensystem eig_;
    int nvars_ = 0;
    mutable std::vector<std::vector<F>> pow_cache_;
};

// One-step functional form (spec: advance_recursion).
template <class F>
SeriesState<F> advance_recursion(const SeriesState<F>& state, int n, long rho,
                                 const std::vector<F>& xi) {
    SeriesEngine<F> engine(n, rho, xi);
    SeriesState<F> s = state;
    engine.advance(s);
    return s;
}

} // namespace kz
