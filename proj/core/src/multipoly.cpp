#include "kzsolve/multipoly.hpp"

#include <algorithm>
#include <unordered_map>

namespace kz {

namespace {

int checked_nvars(int nvars) {
    if (nvars < 0 || nvars > Monomial::kMaxVars)
        throw Error("variable count " + std::to_string(nvars) + " out of range");
    return nvars;
}

// Common variable count with constant promotion.
int join_nvars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() == b.nvars()) return a.nvars();
    if (a.nvars() == 0) return b.nvars();
    if (b.nvars() == 0) return a.nvars();
    throw Error("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                std::to_string(b.nvars()));
}

} // namespace

Monomial Monomial::unit(int var) {
    Monomial m;
    return m.with_exponent(var, 1);
}

Monomial Monomial::from_exponents(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVars) throw Error("too many variables in exponent vector");
    Monomial m;
    for (size_t i = 0; i < exps.size(); ++i) m = m.with_exponent(static_cast<int>(i), exps[i]);
    return m;
}

std::vector<unsigned> Monomial::exponents(int nvars) const {
    std::vector<unsigned> e(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) e[static_cast<size_t>(i)] = exponent(i);
    return e;
}

int Monomial::total_degree() const {
    uint64_t p = packed_;
    int d = 0;
    while (p) {
        d += static_cast<int>(p & 0xffu);
        p >>= 8;
    }
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    for (int v = 0; v < kMaxVars; ++v)
        if (exponent(v) + o.exponent(v) > kMaxExp) throw Error("monomial exponent overflow");
    return Monomial(packed_ + o.packed_);
}

bool Monomial::divides(const Monomial& o) const {
    for (int v = 0; v < kMaxVars; ++v)
        if (exponent(v) > o.exponent(v)) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) throw Error("monomial not divisible");
    return Monomial(packed_ - o.packed_);
}

Monomial Monomial::pow(unsigned e) const {
    Monomial m;
    for (int v = 0; v < kMaxVars; ++v) {
        const unsigned x = exponent(v) * e;
        if (x > kMaxExp) throw Error("monomial exponent overflow");
        m = m.with_exponent(v, x);
    }
    return m;
}

Monomial Monomial::with_exponent(int var, unsigned e) const {
    if (var < 0 || var >= kMaxVars) throw InvalidIndexError("variable index out of range");
    if (e > kMaxExp) throw Error("monomial exponent overflow");
    uint64_t p = packed_;
    p &= ~(0xffull << shift(var));
    p |= static_cast<uint64_t>(e) << shift(var);
    return Monomial(p);
}

Monomial Monomial::swap_vars(int a, int b) const {
    const unsigned ea = exponent(a), eb = exponent(b);
    return with_exponent(a, eb).with_exponent(b, ea);
}

bool Monomial::grlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.packed_ < b.packed_;
}

MultiPoly::MultiPoly(int nvars) : nvars_(checked_nvars(nvars)) {}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw InvalidIndexError("variable index out of range");
    MultiPoly p(nvars);
    p.terms_.push_back({Monomial::unit(var), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Monomial& m, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize_sorted();
    return p;
}

void MultiPoly::normalize_sorted() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::grlex_less(b.mono, a.mono);  // descending
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
    }
    terms_ = std::move(merged);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
    throw Error("polynomial is not constant");
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

Rational MultiPoly::coef_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coef;
    return Rational(0);
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.front().mono.total_degree();
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exponent(var)));
    return d;
}

int MultiPoly::low_degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = static_cast<int>(Monomial::kMaxExp) + 1;
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.exponent(var)));
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) { return *this = *this + o; }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this = *this - o; }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(join_nvars(a, b));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->mono == ib->mono) {
            Rational c = ia->coef + ib->coef;
            if (!c.is_zero()) r.terms_.push_back({ia->mono, std::move(c)});
            ++ia;
            ++ib;
        } else if (Monomial::grlex_less(ib->mono, ia->mono)) {
            r.terms_.push_back(*ia++);
        } else {
            r.terms_.push_back(*ib++);
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const int nv = join_nvars(a, b);
    MultiPoly r(nv);
    if (a.is_zero() || b.is_zero()) return r;
    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            const Monomial m = ta.mono.times(tb.mono);
            auto [it, inserted] = acc.try_emplace(m.packed(), ta.coef * tb.coef);
            if (!inserted) it->second += ta.coef * tb.coef;
        }
    r.terms_.reserve(acc.size());
    for (auto& [packed, coef] : acc)
        if (!coef.is_zero()) r.terms_.push_back({Monomial(packed), std::move(coef)});
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) {
        return Monomial::grlex_less(y.mono, x.mono);
    });
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c.is_zero()) return MultiPoly(nvars_);
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(nvars_, Rational(1));
    MultiPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.nvars_ != b.nvars_ && !a.is_constant() && !b.is_constant()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& t : terms_) {
        const unsigned e = t.mono.exponent(var);
        if (e == 0) continue;
        r.terms_.push_back({t.mono.with_exponent(var, e - 1), t.coef * Rational(static_cast<long>(e))});
    }
    r.normalize_sorted();
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) < nvars_) throw Error("evaluation point too short");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (int i = 0; i < nvars_; ++i) {
            const unsigned e = t.mono.exponent(i);
            if (e) v *= point[static_cast<size_t>(i)].pow(static_cast<long>(e));
        }
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
    MultiPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        const unsigned e = t.mono.exponent(var);
        Rational c = t.coef;
        if (e) c *= value.pow(static_cast<long>(e));
        if (!c.is_zero()) r.terms_.push_back({t.mono.with_exponent(var, 0), c});
    }
    r.normalize_sorted();
    return r;
}

MultiPoly MultiPoly::swap_vars(int a, int b) const {
    MultiPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono.swap_vars(a, b), t.coef});
    r.normalize_sorted();
    return r;
}

MultiPoly MultiPoly::negate_var(int var) const {
    MultiPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        const bool odd = t.mono.exponent(var) & 1u;
        r.terms_.push_back({t.mono, odd ? -t.coef : t.coef});
    }
    r.normalize_sorted();
    return r;
}

MultiPoly MultiPoly::shift_var(int var, const Rational& c) const {
    if (c.is_zero()) return *this;
    // x^e -> sum_k C(e,k) c^(e-k) x^k
    MultiPoly r(nvars_);
    for (const auto& t : terms_) {
        const unsigned e = t.mono.exponent(var);
        for (unsigned k = 0; k <= e; ++k) {
            const Rational coef =
                t.coef * binomial(static_cast<long>(e), static_cast<long>(k)) * c.pow(static_cast<long>(e - k));
            if (!coef.is_zero()) r.terms_.push_back({t.mono.with_exponent(var, k), coef});
        }
    }
    r.normalize_sorted();
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    const int d = degree_in(var);
    if (d < 0) return {};
    std::vector<MultiPoly> coefs(static_cast<size_t>(d) + 1, MultiPoly(nvars_));
    for (const auto& t : terms_) {
        const unsigned e = t.mono.exponent(var);
        coefs[e].terms_.push_back({t.mono.with_exponent(var, 0), t.coef});
    }
    for (auto& c : coefs) c.normalize_sorted();
    return coefs;
}

MultiPoly MultiPoly::from_coefficients_in(int var, const std::vector<MultiPoly>& coefs) {
    if (coefs.empty()) return MultiPoly(0);
    MultiPoly r(coefs.front().nvars());
    for (size_t e = 0; e < coefs.size(); ++e) {
        if (coefs[e].is_zero()) continue;
        if (r.nvars_ == 0) r.nvars_ = coefs[e].nvars();
        for (const auto& t : coefs[e].terms())
            r.terms_.push_back({t.mono.with_exponent(var, static_cast<unsigned>(e)), t.coef});
    }
    r.normalize_sorted();
    return r;
}

bool MultiPoly::try_divide(const MultiPoly& a, const MultiPoly& d, MultiPoly& q) {
    if (d.is_zero()) throw ZeroDenominatorError("division by zero polynomial");
    const int nv = join_nvars(a, d);
    q = MultiPoly(nv);
    if (a.is_zero()) return true;
    if (d.is_constant()) {
        q = a * d.constant_value().inverse();
        return true;
    }
    MultiPoly r = a;
    const Monomial& dm = d.leading_term().mono;
    const Rational dc = d.leading_coef();
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        const Term& lt = r.leading_term();
        if (!dm.divides(lt.mono)) return false;
        Term t{lt.mono.divided_by(dm), lt.coef / dc};
        r -= d * MultiPoly::monomial(nv, t.mono, t.coef);
        qterms.push_back(std::move(t));
    }
    q = MultiPoly::from_terms(nv, std::move(qterms));
    return true;
}

MultiPoly MultiPoly::divided_exact(const MultiPoly& d) const {
    MultiPoly q;
    if (!try_divide(*this, d, q)) throw Error("polynomial division is not exact");
    return q;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coef().inverse();
}

std::string MultiPoly::str(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            const unsigned e = t.mono.exponent(v);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += var_prefix + std::to_string(v + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += c.str();
        } else {
            if (!c.is_one()) out += c.str() + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

// Variables actually present.
uint64_t var_mask(const MultiPoly& p) {
    uint64_t mask = 0;
    for (int v = 0; v < p.nvars(); ++v)
        if (p.degree_in(v) > 0) mask |= 1ull << v;
    return mask;
}

// Dense list of coefficients of powers of `var`.
std::vector<MultiPoly> coef_list(const MultiPoly& p, int var) { return p.coefficients_in(var); }

MultiPoly content_in(const MultiPoly& p, int var);

// Univariate (rational coefficients) gcd by monic Euclid; inputs nonzero in var only.
MultiPoly univariate_gcd(MultiPoly a, MultiPoly b, int var) {
    auto degree = [&](const MultiPoly& p) { return p.degree_in(var); };
    while (!b.is_zero()) {
        // a mod b
        MultiPoly r = a;
        const int db = degree(b);
        const Rational blc = b.coefficients_in(var).back().constant_value();
        while (!r.is_zero() && degree(r) >= db) {
            const auto rc = r.coefficients_in(var);
            const Rational rlc = rc.back().constant_value();
            const int dr = static_cast<int>(rc.size()) - 1;
            MultiPoly t = MultiPoly::monomial(r.nvars(), Monomial::unit(var).pow(static_cast<unsigned>(dr - db)),
                                              rlc / blc);
            r -= t * b;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Pseudo-remainder of a by b in var: lc(b)^(da-db+1) * a = q*b + r.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var) {
    const int db = b.degree_in(var);
    auto bc = b.coefficients_in(var);
    const MultiPoly blc = bc.back();
    MultiPoly r = a;
    int dr = r.degree_in(var);
    while (!r.is_zero() && dr >= db) {
        auto rc = r.coefficients_in(var);
        const MultiPoly rlc = rc.back();
        const MultiPoly xshift =
            MultiPoly::monomial(r.nvars(), Monomial::unit(var).pow(static_cast<unsigned>(dr - db)), Rational(1));
        r = r * blc - b * (rlc * xshift);
        const int dnew = r.degree_in(var);
        if (dnew == dr) throw Error("pseudo-division failed to reduce degree");
        dr = dnew;
    }
    return r;
}

// gcd of all coefficients of powers of var.
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly g(p.nvars());
    for (const auto& c : coef_list(p, var)) {
        if (c.is_zero()) continue;
        if (c.is_constant()) return MultiPoly::constant(p.nvars(), Rational(1));
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return g;
    }
    if (g.is_zero()) return MultiPoly::constant(p.nvars(), Rational(1));
    return g;
}

// Quick certificate that gcd of the primitive parts is 1: map all variables
// but `var` to fixed values; if the degrees in var survive and the univariate
// images are coprime, any common factor involving var is ruled out.
bool primitive_gcd_is_one_hint(const MultiPoly& a, const MultiPoly& b, int var) {
    static const long seeds[3][7] = {
        {3, 5, 7, 11, 13, 17, 19}, {2, 9, 4, 15, 8, 21, 5}, {10, 3, 14, 6, 22, 9, 12}};
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Rational> point;
        point.reserve(static_cast<size_t>(a.nvars()));
        int si = 0;
        for (int v = 0; v < a.nvars(); ++v) point.emplace_back(seeds[attempt][si++ % 7]);
        MultiPoly ia = a, ib = b;
        for (int v = 0; v < a.nvars(); ++v) {
            if (v == var) continue;
            ia = ia.substitute(v, point[static_cast<size_t>(v)]);
            ib = ib.substitute(v, point[static_cast<size_t>(v)]);
        }
        if (ia.degree_in(var) != a.degree_in(var) || ib.degree_in(var) != b.degree_in(var))
            continue;  // degree dropped, try other values
        const MultiPoly g = univariate_gcd(ia, ib, var);
        if (g.is_constant()) return true;
        return false;  // images share a factor; no conclusion, run the full gcd
    }
    return false;
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const int nv = join_nvars(a, b);
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(nv, Rational(1));

    const uint64_t shared = var_mask(a) & var_mask(b);
    if (shared == 0) return MultiPoly::constant(nv, Rational(1));
    int var = 0;
    {
        // main variable: the shared one with the smallest degree sum
        int best = -1, best_score = 0;
        for (int v = 0; v < nv; ++v) {
            if (!(shared & (1ull << v))) continue;
            const int score = a.degree_in(v) + b.degree_in(v);
            if (best < 0 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        var = best;
    }

    const MultiPoly ca = content_in(a, var);
    const MultiPoly cb = content_in(b, var);
    const MultiPoly pa = a.divided_exact(ca);
    const MultiPoly pb = b.divided_exact(cb);
    const MultiPoly cg = poly_gcd(ca, cb);

    // Primitive-part gcd.
    MultiPoly pg(nv);
    const bool univariate = (var_mask(pa) | var_mask(pb)) == (1ull << var);
    if (univariate) {
        pg = univariate_gcd(pa, pb, var);
    } else if (primitive_gcd_is_one_hint(pa, pb, var)) {
        pg = MultiPoly::constant(nv, Rational(1));
    } else {
        MultiPoly r0 = pa, r1 = pb;
        if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
        while (!r1.is_zero()) {
            MultiPoly r2 = pseudo_rem(r0, r1, var);
            if (!r2.is_zero()) r2 = r2.divided_exact(content_in(r2, var));
            r0 = std::move(r1);
            r1 = std::move(r2);
        }
        if (r0.degree_in(var) <= 0) {
            pg = MultiPoly::constant(nv, Rational(1));
        } else {
            pg = r0;
            // the PRS tail is primitive in var but may not divide both inputs'
            // primitive parts if intermediate swell introduced content
            MultiPoly q;
            if (!MultiPoly::try_divide(pa, pg, q) || !MultiPoly::try_divide(pb, pg, q))
                throw Error("gcd internal check failed");
        }
    }
    return (cg * pg).monic();
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(join_nvars(a, b));
    return (a * b.divided_exact(poly_gcd(a, b))).monic();
}

} // namespace kz
