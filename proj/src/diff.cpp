#include "dluroth/diff.hpp"

#include <stdexcept>

namespace dluroth {

SparsePoly derive(const SparsePoly& p) {
    SparsePoly out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            Monomial rest = m.with_exponent(v, e - 1) * Monomial(v.shifted());
            out += SparsePoly(rest, c * Rational(e));
        }
    }
    return out;
}

SparsePoly derive(SparsePoly p, int times) {
    for (int i = 0; i < times; ++i) p = derive(p);
    return p;
}

std::optional<int> order_of(const SparsePoly& p) {
    std::optional<int> best;
    for (Var v : p.vars()) {
        if (!best || v.order() > *best) best = v.order();
    }
    return best;
}

std::optional<int> order_of(const SparsePoly& p, uint32_t kind) {
    std::optional<int> best;
    for (Var v : p.vars()) {
        if (v.kind() == kind && (!best || v.order() > *best)) best = v.order();
    }
    return best;
}

KindOrdering KindOrdering::u_then_x(int n) {
    KindOrdering ord;
    ord.kinds.push_back(Var::u(0).kind());
    for (int j = 1; j <= n; ++j) ord.kinds.push_back(Var::x(j, 0).kind());
    return ord;
}

int KindOrdering::position(uint32_t kind) const {
    for (size_t i = 0; i < kinds.size(); ++i) {
        if (kinds[i] == kind) return static_cast<int>(i) + 1;
    }
    return -1;
}

int ritt_class(const SparsePoly& p, const KindOrdering& ord) {
    int best = 0;
    for (Var v : p.vars()) {
        int pos = ord.position(v.kind());
        if (pos < 0) throw std::invalid_argument("variable kind outside the ordering");
        best = std::max(best, pos);
    }
    return best;
}

Var leader(const SparsePoly& p, const KindOrdering& ord) {
    int cls = ritt_class(p, ord);
    if (cls == 0) throw std::invalid_argument("no leader");
    uint32_t kind = ord.kinds[cls - 1];
    int k = *order_of(p, kind);
    return kind == Var::u(0).kind() ? Var::u(k) : Var::x(static_cast<int>(kind), k);
}

std::pair<SparsePoly, SparsePoly> separant_initial(const SparsePoly& p, const KindOrdering& ord) {
    Var l = leader(p, ord);
    SparsePoly sep = p.partial(l);
    SparsePoly init = p.collect_by(l).rbegin()->second;
    return {sep, init};
}

int compare_rank(const SparsePoly& a, const SparsePoly& b, const KindOrdering& ord) {
    int ca = ritt_class(a, ord), cb = ritt_class(b, ord);
    if (ca != cb) return ca < cb ? -1 : 1;
    if (ca == 0) return 0;
    Var la = leader(a, ord), lb = leader(b, ord);
    if (la.order() != lb.order()) return la.order() < lb.order() ? -1 : 1;
    int da = a.degree_in(la), db = b.degree_in(lb);
    if (da != db) return da < db ? -1 : 1;
    return 0;
}

}  // namespace dluroth
