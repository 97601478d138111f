#include "dluroth/basis.hpp"

#include <algorithm>

#include "dluroth/errors.hpp"

namespace dluroth {

namespace {

// Gradient over u^[2e] of N/D at the point; the 1/D^2 factor is dropped
// since row scaling cannot change any rank.
std::vector<Rational> gradient_row(const DiffRatFun& f, const std::map<Var, Rational>& a,
                                   int dim) {
    Rational nv = f.num().eval(a), dv = f.den().eval(a);
    std::vector<Rational> row(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        Var v = Var::u(i);
        SparsePoly dn = f.num().partial(v), dd = f.den().partial(v);
        Rational g(0);
        if (!dn.is_zero()) g += dn.eval(a) * dv;
        if (!dd.is_zero()) g -= dd.eval(a) * nv;
        row[i] = g;
    }
    return row;
}

size_t rank_of_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    return rank_exact(ExactMatrix::from_rows(rows));
}

}  // namespace

Basis select_basis(const ProlongedSystem& sys, CounterRng& rng, long coeff_bound,
                   int attempts) {
    const GeneratorInput& gens = sys.input;
    int n = gens.n, e = gens.e;
    int dim = 2 * e + 1;
    auto table = parametrization_table(gens, e);

    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<Rational> point = draw_admissible_point(sys, rng, coeff_bound, attempts);
        std::map<Var, Rational> a = jet_assignment(point);

        std::vector<std::vector<Rational>> rows;
        size_t rank = 0;
        Basis b;
        for (int k = 0; k <= e; ++k) {
            for (int j = 1; j <= n; ++j) {
                rows.push_back(gradient_row(table[j - 1][k], a, dim));
                size_t r = rank_of_rows(rows);
                if (r > rank) {
                    rank = r;
                    b.Z.push_back(Var::x(j, k));
                } else {
                    rows.pop_back();
                }
            }
        }
        for (int i = 0; i <= e; ++i) {
            std::vector<Rational> unit(dim, Rational(0));
            unit[i] = Rational(1);
            rows.push_back(std::move(unit));
            size_t r = rank_of_rows(rows);
            if (r > rank) {
                rank = r;
                b.U.push_back(Var::u(i));
            } else {
                rows.pop_back();
            }
        }
        if (static_cast<int>(b.Z.size() + b.U.size()) != dim) continue;

        int k0 = 0;
        while (std::find(b.U.begin(), b.U.end(), Var::u(k0)) != b.U.end()) ++k0;
        if (k0 > e) continue;
        b.k0 = k0;
        return b;
    }
    throw RetryError("basis selection failed (unlucky points or invalid input)");
}

}  // namespace dluroth
