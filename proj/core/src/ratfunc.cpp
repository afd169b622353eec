#include "kzsolve/ratfunc.hpp"

#include <algorithm>

namespace kz {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.nvars(), Rational(1))) {
    normalize();
}

RatFunc RatFunc::zero(int nvars) { return RatFunc(MultiPoly(nvars)); }

RatFunc RatFunc::constant(int nvars, const Rational& c) {
    return RatFunc(MultiPoly::constant(nvars, c));
}

RatFunc RatFunc::variable(int nvars, int var) { return RatFunc(MultiPoly::variable(nvars, var)); }

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.nvars(), Rational(1));
        return;
    }
    if (num_.nvars() != den_.nvars()) {
        // promote the constant side
        if (num_.is_constant() && den_.nvars() > 0)
            num_ = MultiPoly::constant(den_.nvars(), num_.constant_value());
        else if (den_.is_constant() && num_.nvars() > 0)
            den_ = MultiPoly::constant(num_.nvars(), den_.constant_value());
        else
            throw Error("variable count mismatch in rational function");
    }
    if (!den_.is_one() && !den_.is_constant()) {
        const MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divided_exact(g);
            den_ = den_.divided_exact(g);
        }
    }
    const Rational lc = den_.leading_coef();
    if (!lc.is_one()) {
        const Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDenominatorError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const MultiPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const MultiPoly ea = a.den_.divided_exact(g);
    const MultiPoly eb = b.den_.divided_exact(g);
    return RatFunc(a.num_ * eb + b.num_ * ea, a.den_ * eb);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero(std::max(a.nvars(), b.nvars()));
    const MultiPoly g1 = poly_gcd(a.num_, b.den_);
    const MultiPoly g2 = poly_gcd(b.num_, a.den_);
    const MultiPoly n = a.num_.divided_exact(g1) * b.num_.divided_exact(g2);
    const MultiPoly d = a.den_.divided_exact(g2) * b.den_.divided_exact(g1);
    return RatFunc(n, d);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominatorError("division by the zero rational function");
    return a * b.inverse();
}

RatFunc RatFunc::operator*(const Rational& c) const {
    if (c.is_zero()) return RatFunc::zero(nvars());
    RatFunc r(*this);
    r.num_ = r.num_ * c;
    return r;
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc::constant(nvars(), Rational(1));
    const RatFunc base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    RatFunc r = RatFunc::constant(nvars(), Rational(1));
    RatFunc b = base;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::derivative(int var) const {
    if (is_polynomial()) return RatFunc(num_.derivative(var));
    const MultiPoly dden = den_.derivative(var);
    if (dden.is_zero()) return RatFunc(num_.derivative(var), den_);
    // (n' d - n d') / d^2 with the common factor g = gcd(d, d') split off
    const MultiPoly g = poly_gcd(den_, dden);
    const MultiPoly e = den_.divided_exact(g);
    return RatFunc(num_.derivative(var) * e - num_ * dden.divided_exact(g), den_ * e);
}

Rational RatFunc::evaluate(const std::vector<Rational>& point) const {
    const Rational d = den_.evaluate(point);
    if (d.is_zero()) throw DegeneratePointError("evaluation at a pole");
    return num_.evaluate(point) / d;
}

RatFunc RatFunc::substitute(int var, const Rational& value) const {
    const MultiPoly d = den_.substitute(var, value);
    if (d.is_zero()) throw DegeneratePointError("substitution lands on a pole");
    return RatFunc(num_.substitute(var, value), d);
}

RatFunc RatFunc::substitute(int var, const RatFunc& value) const {
    std::vector<RatFunc> values;
    values.reserve(static_cast<size_t>(nvars()));
    for (int v = 0; v < nvars(); ++v)
        values.push_back(v == var ? value : RatFunc::variable(value.nvars(), v));
    return substitute_all(values);
}

namespace {

RatFunc eval_poly_at(const MultiPoly& p, const std::vector<RatFunc>& values, int nvars_out) {
    RatFunc acc = RatFunc::zero(nvars_out);
    // memoized powers per variable
    std::vector<std::vector<RatFunc>> pows(values.size());
    auto power = [&](int v, unsigned e) -> const RatFunc& {
        auto& cache = pows[static_cast<size_t>(v)];
        if (cache.empty()) cache.push_back(RatFunc::constant(nvars_out, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * values[static_cast<size_t>(v)]);
        return cache[e];
    };
    for (const auto& t : p.terms()) {
        RatFunc term = RatFunc::constant(nvars_out, t.coef);
        for (int v = 0; v < p.nvars(); ++v) {
            const unsigned e = t.mono.exponent(v);
            if (e) term = term * power(v, e);
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace

RatFunc RatFunc::substitute_all(const std::vector<RatFunc>& values) const {
    if (static_cast<int>(values.size()) < nvars()) throw Error("substitute_all: too few values");
    const int nv_out = values.empty() ? 0 : values.front().nvars();
    const RatFunc n = eval_poly_at(num_, values, nv_out);
    const RatFunc d = eval_poly_at(den_, values, nv_out);
    if (d.is_zero()) throw DegeneratePointError("substitution lands on a pole");
    return n / d;
}

RatFunc RatFunc::swap_vars(int a, int b) const {
    return RatFunc(num_.swap_vars(a, b), den_.swap_vars(a, b));
}

RatFunc RatFunc::negate_var(int var) const {
    return RatFunc(num_.negate_var(var), den_.negate_var(var));
}

int RatFunc::order_at_zero(int var) const {
    if (is_zero()) return 1 << 20;
    return num_.low_degree_in(var) - den_.low_degree_in(var);
}

int RatFunc::pole_order_at(const MultiPoly& lin) const {
    int order = 0;
    MultiPoly d = den_, q;
    while (MultiPoly::try_divide(d, lin, q)) {
        ++order;
        d = q;
    }
    return order;
}

RatFunc RatFunc::project_to_univariate(int var) const {
    for (int v = 0; v < nvars(); ++v)
        if (v != var && uses_var(v)) throw Error("function is not univariate in the chosen variable");
    auto move_var = [&](const MultiPoly& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms())
            ts.push_back({Monomial().with_exponent(0, t.mono.exponent(var)), t.coef});
        return MultiPoly::from_terms(1, std::move(ts));
    };
    return RatFunc(move_var(num_), move_var(den_));
}

RatFunc RatFunc::embed_univariate(int nvars, int var) const {
    if (this->nvars() > 1) throw Error("embed_univariate expects a univariate function");
    auto move_var = [&](const MultiPoly& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms())
            ts.push_back({Monomial().with_exponent(var, t.mono.exponent(0)), t.coef});
        return MultiPoly::from_terms(nvars, std::move(ts));
    };
    return RatFunc(move_var(num_), move_var(den_));
}

std::string RatFunc::str(const std::string& var_prefix) const {
    if (den_.is_one()) return num_.str(var_prefix);
    return "(" + num_.str(var_prefix) + ")/(" + den_.str(var_prefix) + ")";
}

RatFunc rf_normalize(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num, den); }

RatFunc rf_partial_derivative(const RatFunc& f, int var) {
    if (var < 0 || var >= std::max(1, f.nvars())) throw InvalidIndexError("variable index out of range");
    return f.derivative(var);
}

InfinityExpansion expand_at_infinity(const RatFunc& f, int var, int order) {
    if (order < 0) throw Error("expansion order must be non-negative");
    const int nv = f.nvars();
    if (f.is_zero()) return {0, std::vector<RatFunc>(static_cast<size_t>(order) + 1, RatFunc::zero(nv))};

    // Write f = u^(dd-dn) * N(u)/D(u) where u = 1/x and N, D are polynomial
    // in u with D(0) != 0; then divide power series.
    const auto ncoefs = f.num().coefficients_in(var);  // by power of x
    const auto dcoefs = f.den().coefficients_in(var);
    const int dn = static_cast<int>(ncoefs.size()) - 1;
    const int dd = static_cast<int>(dcoefs.size()) - 1;
    const int lowest = dd - dn;

    const size_t len = static_cast<size_t>(order) + 1;
    // N[u^i] = ncoefs[dn - i], D[u^i] = dcoefs[dd - i]
    auto at = [&](const std::vector<MultiPoly>& c, int top, size_t i) {
        const int idx = top - static_cast<int>(i);
        return idx >= 0 ? RatFunc(c[static_cast<size_t>(idx)]) : RatFunc::zero(nv);
    };
    std::vector<RatFunc> series(len, RatFunc::zero(nv));
    const RatFunc d0 = at(dcoefs, dd, 0);
    for (size_t i = 0; i < len; ++i) {
        RatFunc acc = at(ncoefs, dn, i);
        for (size_t j = 1; j <= i; ++j) acc = acc - at(dcoefs, dd, j) * series[i - j];
        series[i] = acc / d0;
    }
    return {lowest, std::move(series)};
}

InfinityExpansion expand_at_infinity(const RatFunc& f, int var, int order, int min_index) {
    InfinityExpansion e = expand_at_infinity(f, var, order);
    if (!f.is_zero() && e.lowest < min_index)
        throw NotExpandableError("pole at infinity of order " + std::to_string(-e.lowest) +
                                 " exceeds the allowed polynomial part");
    return e;
}

std::vector<Rational> taylor_coefficients(const RatFunc& f, const Rational& center, int order) {
    if (f.nvars() > 1) throw Error("taylor_coefficients expects a univariate function");
    const MultiPoly n = f.num().shift_var(0, center);
    const MultiPoly d = f.den().shift_var(0, center);
    auto nc = n.coefficients_in(0);
    auto dc = d.coefficients_in(0);
    auto coef = [](const std::vector<MultiPoly>& c, size_t i) {
        return i < c.size() ? c[i].constant_value() : Rational(0);
    };
    const Rational d0 = coef(dc, 0);
    if (d0.is_zero()) throw DegeneratePointError("Taylor expansion at a pole");
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (size_t i = 0; i < out.size(); ++i) {
        Rational acc = coef(nc, i);
        for (size_t j = 1; j <= i; ++j) acc -= coef(dc, j) * out[i - j];
        out[i] = acc / d0;
    }
    return out;
}

} // namespace kz
