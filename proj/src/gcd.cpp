#include "dluroth/gcd.hpp"

#include <algorithm>
#include <stdexcept>

namespace dluroth {

namespace {

SparsePoly divide_exact(const SparsePoly& p, const SparsePoly& d) {
    auto q = p.try_divide_exact(d);
    if (!q) throw std::logic_error("expected exact polynomial division");
    return *q;
}

// lc(b)^(deg a - deg b + 1) * a mod b, as univariate polynomials in v.
SparsePoly pseudo_remainder(SparsePoly a, const SparsePoly& b, Var v) {
    int db = b.degree_in(v);
    SparsePoly lb = b.collect_by(v)[db];
    int e = a.degree_in(v) - db + 1;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        SparsePoly la = a.collect_by(v)[da];
        a = a * lb - la * SparsePoly(Monomial(v, da - db), Rational(1)) * b;
        --e;
    }
    for (; e > 0; --e) a *= lb;
    return a;
}

SparsePoly content_in(const SparsePoly& p, Var v) {
    SparsePoly c;
    for (const auto& [deg, coeff] : p.collect_by(v)) {
        c = c.is_zero() ? coeff.primitive() : gcd_multivariate(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_constant() ? SparsePoly(1L) : c;
}

}  // namespace

SparsePoly gcd_multivariate(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return SparsePoly(1L);

    std::set<Var> common;
    for (Var v : a.vars()) {
        if (b.degree_in(v) > 0) common.insert(v);
    }
    if (common.empty()) return SparsePoly(1L);
    Var v = *common.begin();

    SparsePoly ca = content_in(a, v), cb = content_in(b, v);
    SparsePoly c = gcd_multivariate(ca, cb);
    SparsePoly A = divide_exact(a, ca), B = divide_exact(b, cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    // Subresultant remainder sequence on the primitive parts.
    SparsePoly g(1L), h(1L);
    SparsePoly result;
    while (true) {
        int delta = A.degree_in(v) - B.degree_in(v);
        SparsePoly r = pseudo_remainder(A, B, v);
        if (r.is_zero()) {
            result = divide_exact(B, content_in(B, v));
            break;
        }
        if (r.degree_in(v) == 0) {
            result = SparsePoly(1L);
            break;
        }
        A = B;
        B = divide_exact(r, g * h.pow(delta));
        g = A.collect_by(v)[A.degree_in(v)];
        h = delta == 0 ? h : divide_exact(g.pow(delta), h.pow(delta - 1));
    }
    return (c * result).primitive();
}

}  // namespace dluroth
