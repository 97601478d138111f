#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dluroth/monomial.hpp"
#include "dluroth/rational.hpp"

namespace dluroth {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored descending in the canonical order, so begin() is the
// leading term. No zero coefficients are ever stored.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalGreater>;

    SparsePoly() = default;
    explicit SparsePoly(const Rational& c);
    explicit SparsePoly(long c);
    explicit SparsePoly(Var v);
    SparsePoly(const Monomial& m, const Rational& c);
    static SparsePoly from_terms(const std::vector<std::pair<Monomial, Rational>>& terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // 0 for the zero polynomial, the coefficient of 1 otherwise (pre: is_constant()).
    Rational constant_value() const;
    size_t term_count() const { return terms_.size(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    // Max exponent of v across terms; 0 when v is absent, -1 for the zero polynomial.
    int degree_in(Var v) const;
    const TermMap& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    Rational coeff(const Monomial& m) const;
    std::set<Var> vars() const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly& operator*=(const SparsePoly& o);
    SparsePoly operator*(const Rational& c) const;
    SparsePoly& operator*=(const Rational& c);
    SparsePoly pow(int k) const;
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly partial(Var v) const;
    SparsePoly subst(Var v, const SparsePoly& value) const;
    SparsePoly eval_partial(const std::map<Var, Rational>& point) const;
    // pre: point covers every variable of the polynomial
    Rational eval(const std::map<Var, Rational>& point) const;
    // Coefficients of powers of v, as polynomials not involving v.
    std::map<int, SparsePoly> collect_by(Var v) const;
    // Split every monomial into (part with selected vars, rest); groups
    // coefficients-in-the-rest by the selected part.
    std::map<Monomial, SparsePoly, CanonicalGreater> split_by(
        const std::function<bool(Var)>& select) const;

    // Rational c with (*this)/c integer-coprime and positive-leading; 0 for zero.
    Rational content() const;
    SparsePoly primitive() const;
    // Quotient when the division leaves no remainder, nullopt otherwise.
    std::optional<SparsePoly> try_divide_exact(const SparsePoly& divisor) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

SparsePoly operator+(SparsePoly a, const SparsePoly& b);
SparsePoly operator-(SparsePoly a, const SparsePoly& b);
SparsePoly operator*(const Rational& c, const SparsePoly& p);

}  // namespace dluroth
