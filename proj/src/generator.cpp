#include "dluroth/generator.hpp"

#include <algorithm>

#include "dluroth/errors.hpp"
#include "dluroth/matrix.hpp"

namespace dluroth {

namespace {

std::map<Var, Rational> z_assignment(const GeneratorInput& gens,
                                     const std::vector<Rational>& x_values) {
    std::map<Var, Rational> a;
    for (int j = 1; j <= gens.n; ++j) {
        for (int k = 0; k <= gens.e; ++k) {
            a.emplace(Var::x(j, k), x_values[static_cast<size_t>(k) * gens.n + (j - 1)]);
        }
    }
    return a;
}

bool proportional_over_q(const SparsePoly& a, const SparsePoly& b) {
    return a.primitive() == b.primitive();
}

SparsePoly rename_u_to_y(const SparsePoly& p) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::pair<Var, int>> fs;
        for (const auto& [v, e] : m.factors()) {
            fs.emplace_back(v.is_u() ? Var::y(v.order()) : v, e);
        }
        terms.emplace_back(Monomial::from_factors(fs), c);
    }
    return SparsePoly::from_terms(terms);
}

}  // namespace

LurothResult specialize_minimal_polynomial(const SparsePoly& M, const ProlongedSystem& sys,
                                           CounterRng& rng, long coeff_bound, int attempts,
                                           const std::vector<std::vector<Rational>>&
                                               forced_points) {
    const GeneratorInput& gens = sys.input;
    if (!forced_points.empty() && forced_points.size() != 2) {
        throw std::invalid_argument("exactly two forced points required");
    }
    int budget = forced_points.empty() ? attempts : 1;
    for (int attempt = 1; attempt <= budget; ++attempt) {
        std::vector<Rational> u1 = forced_points.empty()
                                       ? draw_admissible_point(sys, rng, coeff_bound, attempts)
                                       : forced_points[0];
        std::vector<Rational> u2 = forced_points.empty()
                                       ? draw_admissible_point(sys, rng, coeff_bound, attempts)
                                       : forced_points[1];
        SparsePoly m1 = M.eval_partial(z_assignment(gens, eval_jet(gens, u1)));
        SparsePoly m2 = M.eval_partial(z_assignment(gens, eval_jet(gens, u2)));
        if (m1.is_zero() || m2.is_zero() || proportional_over_q(m1, m2)) continue;

        LurothResult r;
        r.M1 = m1;
        r.M2 = m2;
        r.v = normalize_generator(m1, m2);
        r.u1 = std::move(u1);
        r.u2 = std::move(u2);
        r.attempts_used = attempt;
        return r;
    }
    throw RetryError("degenerate specialization");
}

DiffRatFun normalize_generator(const SparsePoly& M1, const SparsePoly& M2) {
    DiffRatFun v(M1, M2);
    if (v.is_constant()) throw RetryError("constant generator");
    return v;
}

std::pair<bool, DiffRatFun> verify_generator(const GeneratorInput& gens, const SparsePoly& M,
                                             const DiffRatFun& v) {
    std::vector<Var> xvars;
    int max_k = 0;
    for (Var w : M.vars()) {
        if (w.is_x()) {
            xvars.push_back(w);
            max_k = std::max(max_k, w.order());
        }
    }
    auto table = parametrization_table(gens, max_k);

    std::map<Var, std::vector<SparsePoly>> num_pow, den_pow;
    SparsePoly common_den(1L);
    for (Var w : xvars) {
        const DiffRatFun& f = table[w.x_index() - 1][w.order()];
        int dmax = M.degree_in(w);
        std::vector<SparsePoly> np{SparsePoly(1L)}, dp{SparsePoly(1L)};
        for (int i = 1; i <= dmax; ++i) {
            np.push_back(np.back() * f.num());
            dp.push_back(dp.back() * f.den());
        }
        common_den *= dp[dmax];
        num_pow.emplace(w, std::move(np));
        den_pow.emplace(w, std::move(dp));
    }

    // Numerator of M-tilde(y): x-variables replaced by the parametrization,
    // u-variables of M renamed to y, all over common_den.
    SparsePoly mt;
    for (const auto& [m, c] : M.terms()) {
        std::vector<std::pair<Var, int>> rest;
        for (const auto& [w, e] : m.factors()) {
            if (!w.is_x()) rest.emplace_back(Var::y(w.order()), e);
        }
        SparsePoly part(Monomial::from_factors(rest), c);
        for (Var w : xvars) {
            int a = m.exponent_of(w);
            part *= num_pow.at(w)[a];
            part *= den_pow.at(w)[M.degree_in(w) - a];
        }
        mt += part;
    }

    SparsePoly dy = v.den() * rename_u_to_y(v.num()) - v.num() * rename_u_to_y(v.den());

    auto is_y = [](Var w) { return w.is_y(); };
    auto A = mt.split_by(is_y);
    auto B = dy.split_by(is_y);
    if (mt.is_zero() || dy.is_zero()) return {false, DiffRatFun()};

    std::vector<Monomial> keys;
    for (const auto& [k, p] : A) keys.push_back(k);
    for (const auto& [k, p] : B) {
        if (!A.count(k)) keys.push_back(k);
    }
    auto coeff_of = [](const std::map<Monomial, SparsePoly, CanonicalGreater>& m,
                       const Monomial& k) {
        auto it = m.find(k);
        return it == m.end() ? SparsePoly() : it->second;
    };
    for (size_t i = 0; i < keys.size(); ++i) {
        for (size_t j = i + 1; j < keys.size(); ++j) {
            SparsePoly cross = coeff_of(A, keys[i]) * coeff_of(B, keys[j]) -
                               coeff_of(A, keys[j]) * coeff_of(B, keys[i]);
            if (!cross.is_zero()) return {false, DiffRatFun()};
        }
    }
    for (const Monomial& k : keys) {
        SparsePoly bk = coeff_of(B, k);
        if (!bk.is_zero()) {
            SparsePoly ak = coeff_of(A, k);
            if (ak.is_zero()) return {false, DiffRatFun()};
            return {true, DiffRatFun(ak, common_den * bk)};
        }
    }
    return {false, DiffRatFun()};
}

BoundsReport bounds_report(const GeneratorInput& gens) {
    BoundsReport b;
    b.order_bound = *std::min_element(gens.gen_order.begin(), gens.gen_order.end());
    mpz_class base = gens.d + 1;
    mpz_pow_ui(b.bezout_bound.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(gens.e + 1) * gens.n);
    base = static_cast<long>(gens.n) * gens.d * (gens.e + 1) + 1;
    mpz_pow_ui(b.structured_bound.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(2 * gens.e + 1));
    return b;
}

bool homographic_equivalence(const DiffRatFun& v, const DiffRatFun& w) {
    SparsePoly cols[4] = {v.num() * w.den(), v.den() * w.den(),
                          -(v.num() * w.num()), -(v.den() * w.num())};
    std::set<Monomial, CanonicalGreater> monos;
    for (const auto& p : cols) {
        for (const auto& [m, c] : p.terms()) monos.insert(m);
    }
    ExactMatrix mat(monos.size(), 4);
    size_t row = 0;
    for (const Monomial& m : monos) {
        for (size_t c = 0; c < 4; ++c) mat.at(row, c) = cols[c].coeff(m);
        ++row;
    }
    auto kernel = nullspace_exact(mat);
    auto det = [](const std::vector<Rational>& k) { return k[0] * k[3] - k[1] * k[2]; };
    for (const auto& k : kernel) {
        if (!det(k).is_zero()) return true;
    }
    // ad - bc is a quadratic form; by polarization it vanishes on the whole
    // kernel iff it vanishes on a basis and on all pairwise sums.
    for (size_t i = 0; i < kernel.size(); ++i) {
        for (size_t j = i + 1; j < kernel.size(); ++j) {
            std::vector<Rational> s(4);
            for (size_t t = 0; t < 4; ++t) s[t] = kernel[i][t] + kernel[j][t];
            if (!det(s).is_zero()) return true;
        }
    }
    return false;
}

}  // namespace dluroth
