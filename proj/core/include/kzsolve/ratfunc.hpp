#pragma once

#include <string>
#include <vector>

#include "kzsolve/multipoly.hpp"

namespace kz {

// Reduced rational function num/den. Canonical form: gcd(num, den) = 1 and
// the denominator's graded-lex leading coefficient is +1; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(0), den_(MultiPoly::constant(0, Rational(1))) {}
    RatFunc(MultiPoly num, MultiPoly den);  // normalizes; throws ZeroDenominatorError
    explicit RatFunc(MultiPoly num);
    static RatFunc zero(int nvars);
    static RatFunc constant(int nvars, const Rational& c);
    static RatFunc variable(int nvars, int var);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc inverse() const;  // throws ZeroDenominatorError on zero
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc operator*(const Rational& c) const;
    RatFunc pow(long e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;  // throws DegeneratePointError at poles
    RatFunc substitute(int var, const Rational& value) const;
    RatFunc substitute(int var, const RatFunc& value) const;
    RatFunc substitute_all(const std::vector<RatFunc>& values) const;
    RatFunc swap_vars(int a, int b) const;
    RatFunc negate_var(int var) const;

    int degree_in(int var) const { return num_.degree_in(var) - den_.degree_in(var); }
    bool uses_var(int var) const { return num_.uses_var(var) || den_.uses_var(var); }
    // Order of vanishing along x_var = 0 (negative at a pole); zero -> large sentinel.
    int order_at_zero(int var) const;
    // Multiplicity of the factor `lin` (an affine-linear polynomial) in the
    // denominator: the pole order of this function on {lin = 0}.
    int pole_order_at(const MultiPoly& lin) const;

    // Map to a polynomial ring with fewer variables: keep only `var`,
    // which becomes variable 0. Requires all other variables absent.
    RatFunc project_to_univariate(int var) const;
    // Inverse of the above: place a univariate function's variable at `var`.
    RatFunc embed_univariate(int nvars, int var) const;

    std::string str(const std::string& var_prefix = "z") const;

private:
    void normalize();
    MultiPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// Unique canonical reduced form of num/den (spec: normalize).
RatFunc rf_normalize(const MultiPoly& num, const MultiPoly& den);

// Quotient-rule derivative (spec: rf_partial_derivative).
RatFunc rf_partial_derivative(const RatFunc& f, int var);

// Expansion of f at infinity in the chosen variable: with u = 1/x,
// f = sum_{j>=lowest} coef[j-lowest] * u^j, coefficients rational in the
// remaining variables. Returns coefficients for u^lowest .. u^(lowest+order).
// When min_index is supplied, throws NotExpandableError if lowest < min_index.
struct InfinityExpansion {
    int lowest;
    std::vector<RatFunc> coefs;  // coefs[i] multiplies u^(lowest+i)
};
InfinityExpansion expand_at_infinity(const RatFunc& f, int var, int order);
InfinityExpansion expand_at_infinity(const RatFunc& f, int var, int order, int min_index);

// Taylor coefficients of a univariate rational function around x = center,
// orders 0..order. The center must not be a pole.
std::vector<Rational> taylor_coefficients(const RatFunc& f, const Rational& center, int order);

} // namespace kz
