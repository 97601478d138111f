#include "dluroth/system.hpp"

#include <string>

#include "dluroth/diff.hpp"
#include "dluroth/errors.hpp"
#include "dluroth/gcd.hpp"

namespace dluroth {

GeneratorInput make_generator_input(
    const std::vector<std::pair<SparsePoly, SparsePoly>>& pairs) {
    if (pairs.empty()) throw InputError("no generators");
    GeneratorInput in;
    in.n = static_cast<int>(pairs.size());
    for (size_t j = 0; j < pairs.size(); ++j) {
        const auto& [p, q] = pairs[j];
        std::string tag = std::to_string(j + 1);
        if (q.is_zero()) throw InputError("zero denominator in generator " + tag);
        for (Var v : p.vars()) {
            if (!v.is_u()) throw InputError("generator " + tag + " involves a non-u variable");
        }
        for (Var v : q.vars()) {
            if (!v.is_u()) throw InputError("generator " + tag + " involves a non-u variable");
        }
        DiffRatFun f(p, q);
        if (f.is_constant()) throw InputError("constant generator " + tag);
        if (!p.is_zero() && !gcd_multivariate(p, q).is_constant()) in.reduced_warning = true;
        in.gens.push_back(f);
        in.gen_order.push_back(f.order().value_or(0));
        int deg = std::max(f.num().total_degree(), f.den().total_degree());
        in.d = std::max(in.d, deg);
        in.e = std::max(in.e, in.gen_order.back());
    }
    if (in.e == 0) throw InputError("purely algebraic input unsupported");
    return in;
}

ProlongedSystem build_system(const GeneratorInput& gens) {
    ProlongedSystem sys;
    sys.input = gens;
    sys.q = SparsePoly(1L);
    std::vector<SparsePoly> layer0;
    for (int j = 1; j <= gens.n; ++j) {
        const DiffRatFun& f = gens.gens[j - 1];
        layer0.push_back(f.den() * SparsePoly(Var::x(j, 0)) - f.num());
        sys.q *= f.den();
    }
    sys.layers.push_back(std::move(layer0));
    return sys;
}

ProlongedSystem prolong(ProlongedSystem sys) {
    sys.layers.resize(1);
    for (int k = 1; k <= sys.input.e; ++k) {
        std::vector<SparsePoly> layer;
        for (const SparsePoly& f : sys.layers.back()) layer.push_back(derive(f));
        sys.layers.push_back(std::move(layer));
    }
    return sys;
}

DiffRatFun parametrization_derivative(const GeneratorInput& gens, int j, int k) {
    DiffRatFun f = gens.gens[j - 1];
    for (int i = 0; i < k; ++i) f = f.derive();
    return f;
}

std::vector<std::vector<DiffRatFun>> parametrization_table(const GeneratorInput& gens,
                                                           int max_k) {
    std::vector<std::vector<DiffRatFun>> table(gens.n);
    for (int j = 1; j <= gens.n; ++j) {
        table[j - 1].push_back(gens.gens[j - 1]);
        for (int k = 1; k <= max_k; ++k) table[j - 1].push_back(table[j - 1].back().derive());
    }
    return table;
}

std::map<Var, Rational> jet_assignment(const std::vector<Rational>& point) {
    std::map<Var, Rational> a;
    for (size_t i = 0; i < point.size(); ++i) a.emplace(Var::u(static_cast<int>(i)), point[i]);
    return a;
}

std::vector<Rational> eval_jet(const GeneratorInput& gens,
                               const std::vector<std::vector<DiffRatFun>>& table,
                               const std::vector<Rational>& point) {
    std::map<Var, Rational> a = jet_assignment(point);
    for (const auto& row : table) {
        for (const auto& f : row) {
            if (f.den().eval(a).is_zero()) throw SingularPointError("singular specialization point");
        }
    }
    std::vector<Rational> x(static_cast<size_t>(gens.n) * (gens.e + 1), Rational(0));
    for (int j = 1; j <= gens.n; ++j) {
        for (int k = 0; k <= gens.e; ++k) {
            x[static_cast<size_t>(k) * gens.n + (j - 1)] = table[j - 1][k].eval(a);
        }
    }
    return x;
}

std::vector<Rational> eval_jet(const GeneratorInput& gens, const std::vector<Rational>& point) {
    return eval_jet(gens, parametrization_table(gens, gens.e), point);
}

std::vector<Rational> draw_admissible_point(const ProlongedSystem& sys, CounterRng& rng,
                                            long bound, int attempts) {
    std::map<Var, Rational> a;
    for (int t = 0; t < attempts; ++t) {
        std::vector<Rational> p = rng.next_point(2 * sys.input.e + 1, bound);
        if (!sys.q.eval(jet_assignment(p)).is_zero()) return p;
    }
    throw RetryError("no admissible point found");
}

std::map<Var, Rational> full_assignment(const GeneratorInput& gens,
                                        const std::vector<Rational>& point) {
    std::map<Var, Rational> a = jet_assignment(point);
    std::vector<Rational> x = eval_jet(gens, point);
    for (int j = 1; j <= gens.n; ++j) {
        for (int k = 0; k <= gens.e; ++k) {
            a.emplace(Var::x(j, k), x[static_cast<size_t>(k) * gens.n + (j - 1)]);
        }
    }
    return a;
}

ExactMatrix jacobian_matrix(const ProlongedSystem& sys, int k,
                            const std::map<Var, Rational>& assignment) {
    int n = sys.input.n, e = sys.input.e;
    ExactMatrix m(static_cast<size_t>(k) * n, static_cast<size_t>(k) * (n + 1));
    for (int layer = 0; layer < k; ++layer) {
        for (int j = 1; j <= n; ++j) {
            size_t row = static_cast<size_t>(layer) * n + (j - 1);
            const SparsePoly& f = sys.layers[layer][j - 1];
            for (int i = 0; i < k; ++i) {
                for (int h = 0; h <= n; ++h) {
                    Var v = h == 0 ? Var::u(e + i) : Var::x(h, e + i);
                    size_t col = static_cast<size_t>(i) * (n + 1) + h;
                    SparsePoly pd = f.partial(v);
                    if (!pd.is_zero()) m.at(row, col) = pd.eval(assignment);
                }
            }
        }
    }
    return m;
}

JacobianProfile jacobian_profile(const ProlongedSystem& sys,
                                 const std::vector<Rational>& point) {
    int n = sys.input.n, e = sys.input.e;
    std::map<Var, Rational> a = full_assignment(sys.input, point);
    JacobianProfile prof;
    prof.point = point;
    for (int k = 1; k <= e + 1; ++k) prof.ranks.push_back(rank_exact(jacobian_matrix(sys, k, a)));

    prof.matches_expected = true;
    for (int k = 1; k <= e; ++k) {
        if (prof.ranks[k - 1] != static_cast<size_t>(k)) prof.matches_expected = false;
    }
    if (prof.ranks[e] != static_cast<size_t>(e + n)) prof.matches_expected = false;

    // The index is the least k with rank(J_{k+1}) - rank(J_k) = n. When n = 1
    // every step jumps by n, so a profile matching the expected one is read as
    // index e directly.
    if (prof.matches_expected) {
        prof.index = e;
    } else {
        size_t prev = 0;
        for (size_t k = 0; k < prof.ranks.size(); ++k) {
            if (prof.ranks[k] - prev == static_cast<size_t>(n)) {
                prof.index = static_cast<int>(k);
                break;
            }
            prev = prof.ranks[k];
        }
    }
    return prof;
}

Rational x_block_minor(const ProlongedSystem& sys, int i,
                       const std::map<Var, Rational>& assignment) {
    int n = sys.input.n;
    ExactMatrix m(static_cast<size_t>(i) * n, static_cast<size_t>(i) * n);
    for (int layer = 0; layer < i; ++layer) {
        for (int j = 1; j <= n; ++j) {
            size_t row = static_cast<size_t>(layer) * n + (j - 1);
            const SparsePoly& f = sys.layers[layer][j - 1];
            for (int l = 0; l < i; ++l) {
                for (int h = 1; h <= n; ++h) {
                    size_t col = static_cast<size_t>(l) * n + (h - 1);
                    SparsePoly pd = f.partial(Var::x(h, l));
                    if (!pd.is_zero()) m.at(row, col) = pd.eval(assignment);
                }
            }
        }
    }
    return determinant_exact(m);
}

}  // namespace dluroth
