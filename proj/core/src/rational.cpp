#include "kzsolve/rational.hpp"

#include <ostream>

namespace kz {

Rational::Rational(long n, long d) : v_(static_cast<signed long>(n), static_cast<signed long>(d)) {
    if (d == 0) throw ZeroDenominatorError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (sgn(d) == 0) throw ZeroDenominatorError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n, mpz_class(1));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (sgn(d) == 0) throw ZeroDenominatorError("zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error("rational " + str() + " is not a small integer");
    return v_.get_num().get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDenominatorError("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominatorError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ZeroDenominatorError("0 raised to a negative power");
        return Rational(0);
    }
    const bool neg = e < 0;
    const unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return neg ? Rational(d, n) : Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b, mpz_class(1));
}

Rational factorial(long n) {
    if (n < 0) throw Error("factorial of negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f, mpz_class(1));
}

} // namespace kz
