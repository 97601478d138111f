#include "dluroth/poly.hpp"

#include <stdexcept>

namespace dluroth {

SparsePoly::SparsePoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

SparsePoly::SparsePoly(long c) : SparsePoly(Rational(c)) {}

SparsePoly::SparsePoly(Var v) { terms_.emplace(Monomial(v), Rational(1)); }

SparsePoly::SparsePoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

SparsePoly SparsePoly::from_terms(const std::vector<std::pair<Monomial, Rational>>& terms) {
    SparsePoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational SparsePoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

int SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();
}

int SparsePoly::degree_in(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
    return d;
}

const Monomial& SparsePoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& SparsePoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rational SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Var> SparsePoly::vars() const {
    std::set<Var> s;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.factors()) s.insert(v);
    }
    return s;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
    SparsePoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    *this = *this * c;
    return *this;
}

SparsePoly SparsePoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    SparsePoly r(1L);
    SparsePoly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

SparsePoly SparsePoly::partial(Var v) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        r.add_term(m.with_exponent(v, e - 1), c * Rational(e));
    }
    return r;
}

SparsePoly SparsePoly::subst(Var v, const SparsePoly& value) const {
    SparsePoly r;
    std::map<int, SparsePoly> powers;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
        r += SparsePoly(m.without(v), c) * it->second;
    }
    return r;
}

SparsePoly SparsePoly::eval_partial(const std::map<Var, Rational>& point) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        Rational scale = c;
        Monomial rest;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) {
                rest = rest * Monomial(v, e);
            } else {
                Rational p(1);
                for (int i = 0; i < e; ++i) p *= it->second;
                scale *= p;
            }
        }
        r.add_term(rest, scale);
    }
    return r;
}

Rational SparsePoly::eval(const std::map<Var, Rational>& point) const {
    SparsePoly r = eval_partial(point);
    if (!r.is_constant()) throw std::invalid_argument("eval point misses variables");
    return r.constant_value();
}

std::map<int, SparsePoly> SparsePoly::collect_by(Var v) const {
    std::map<int, SparsePoly> out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        out[e].add_term(m.without(v), c);
    }
    return out;
}

std::map<Monomial, SparsePoly, CanonicalGreater> SparsePoly::split_by(
    const std::function<bool(Var)>& select) const {
    std::map<Monomial, SparsePoly, CanonicalGreater> out;
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<Var, int>> sel, rest;
        for (const auto& f : m.factors()) (select(f.first) ? sel : rest).push_back(f);
        out[Monomial::from_factors(sel)].add_term(Monomial::from_factors(rest), c);
    }
    return out;
}

Rational SparsePoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd_int(num_gcd, c.numerator());
        den_lcm = lcm_int(den_lcm, c.denominator());
    }
    Rational c(mpq_class(num_gcd) / mpq_class(den_lcm));
    return leading_coeff().sign() < 0 ? -c : c;
}

SparsePoly SparsePoly::primitive() const {
    if (terms_.empty()) return *this;
    return *this * content().inverse();
}

std::optional<SparsePoly> SparsePoly::try_divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    SparsePoly q, r = *this;
    const Monomial& dm = divisor.leading_monomial();
    const Rational& dc = divisor.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!dm.divides(rm)) return std::nullopt;
        SparsePoly t(rm.divide(dm), r.leading_coeff() / dc);
        q += t;
        r -= t * divisor;
    }
    return q;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            s += a.str();
        } else if (a.is_one()) {
            s += m.str();
        } else {
            s += a.str() + "*" + m.str();
        }
    }
    return s;
}

SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    a += b;
    return a;
}

SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    a -= b;
    return a;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) { return p * c; }

}  // namespace dluroth
