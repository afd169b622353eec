#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kzsolve/rational.hpp"

namespace kz {

// Exponent vector packed into one 64-bit word, one byte per variable,
// variable 0 in the most significant byte. With that layout the
// graded-lexicographic order (x0 > x1 > ...) is the pair
// (total degree, packed word) compared as integers.
class Monomial {
public:
    static constexpr int kMaxVars = 8;
    static constexpr unsigned kMaxExp = 255;

    Monomial() : packed_(0) {}
    explicit Monomial(uint64_t packed) : packed_(packed) {}
    static Monomial unit(int var);  // x_var^1
    static Monomial from_exponents(const std::vector<unsigned>& exps);

    unsigned exponent(int var) const { return (packed_ >> shift(var)) & 0xffu; }
    std::vector<unsigned> exponents(int nvars) const;
    int total_degree() const;
    bool is_one() const { return packed_ == 0; }
    uint64_t packed() const { return packed_; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;            // this | o
    Monomial divided_by(const Monomial& o) const;     // requires o | this
    Monomial pow(unsigned e) const;
    Monomial with_exponent(int var, unsigned e) const;
    Monomial swap_vars(int a, int b) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.packed_ == b.packed_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.packed_ != b.packed_; }

    // graded-lex, true when a < b
    static bool grlex_less(const Monomial& a, const Monomial& b);

private:
    static int shift(int var) { return 8 * (7 - var); }
    uint64_t packed_;
};

struct Term {
    Monomial mono;
    Rational coef;
};

// Sparse multivariate polynomial over Rational. Terms are kept in
// graded-lex descending order with no zero coefficients; the zero
// polynomial has no terms. Binary operations require equal variable
// counts except that a constant (0-variable) operand promotes.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, const Monomial& m, const Rational& c);
    // Terms in any order, possibly with repeats/zeros; canonicalizes.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    bool is_one() const { return is_constant() && constant_value().is_one(); }

    const Term& leading_term() const;  // requires nonzero
    Rational leading_coef() const { return leading_term().coef; }
    Rational coef_of(const Monomial& m) const;

    int total_degree() const;          // zero -> -1
    int degree_in(int var) const;      // zero -> -1
    int low_degree_in(int var) const;  // zero -> -1; else min exponent
    bool uses_var(int var) const { return degree_in(var) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    MultiPoly substitute(int var, const Rational& value) const;
    MultiPoly swap_vars(int a, int b) const;
    MultiPoly negate_var(int var) const;  // x_var -> -x_var
    MultiPoly shift_var(int var, const Rational& c) const;  // x_var -> x_var + c

    // Dense coefficient list of powers of x_var; entries share nvars but do
    // not use x_var. Zero polynomial -> empty list.
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly from_coefficients_in(int var, const std::vector<MultiPoly>& coefs);

    // Exact division; q such that this == q * d. Throws Error when not divisible.
    MultiPoly divided_exact(const MultiPoly& d) const;
    static bool try_divide(const MultiPoly& a, const MultiPoly& d, MultiPoly& q);

    MultiPoly monic() const;  // divide by leading coefficient; zero stays zero

    std::string str(const std::string& var_prefix = "z") const;

private:
    void normalize_sorted();  // sorts, merges, strips zeros
    int nvars_;
    std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

// Fully reduced gcd, graded-lex monic (1 for coprime inputs, including
// when either input is a nonzero constant). gcd(0, b) = monic b.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

} // namespace kz
