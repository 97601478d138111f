#include "dluroth/groebner.hpp"

#include <set>
#include <tuple>

#include "dluroth/errors.hpp"
#include "dluroth/gcd.hpp"

namespace dluroth {

namespace {

// Product of a block-graded reverse-lexicographic order on the eliminated
// variables with the same order on the kept ones; any monomial touching an
// eliminated variable exceeds every kept-only monomial.
class BlockOrder {
public:
    explicit BlockOrder(std::set<Var> kept) : kept_(std::move(kept)) {}

    bool is_kept(Var v) const { return kept_.count(v) > 0; }

    // 1 when a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        int c = grevlex_cmp(a, b, false);
        if (c != 0) return c;
        return grevlex_cmp(a, b, true);
    }

    const Monomial& leading(const SparsePoly& p) const {
        auto it = p.terms().begin();
        const Monomial* best = &it->first;
        for (++it; it != p.terms().end(); ++it) {
            if (cmp(it->first, *best) > 0) best = &it->first;
        }
        return *best;
    }

private:
    int grevlex_cmp(const Monomial& a, const Monomial& b, bool kept_side) const {
        int da = 0, db = 0;
        for (const auto& [v, e] : a.factors()) {
            if (is_kept(v) == kept_side) da += e;
        }
        for (const auto& [v, e] : b.factors()) {
            if (is_kept(v) == kept_side) db += e;
        }
        if (da != db) return da < db ? -1 : 1;
        // Equal degree: the smaller exponent on the smallest differing
        // variable wins.
        auto ia = a.factors().begin(), ib = b.factors().begin();
        while (true) {
            while (ia != a.factors().end() && is_kept(ia->first) != kept_side) ++ia;
            while (ib != b.factors().end() && is_kept(ib->first) != kept_side) ++ib;
            if (ia == a.factors().end() || ib == b.factors().end()) return 0;
            if (ia->first < ib->first) return -1;
            if (ib->first < ia->first) return 1;
            if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
            ++ia;
            ++ib;
        }
    }

    std::set<Var> kept_;
};

SparsePoly make_monic(const SparsePoly& p, const BlockOrder& ord) {
    return p * p.coeff(ord.leading(p)).inverse();
}

// Full normal form against the monic set G.
SparsePoly normal_form(SparsePoly h, const std::vector<SparsePoly>& G,
                       const std::vector<Monomial>& lts, const BlockOrder& ord) {
    SparsePoly result;
    while (!h.is_zero()) {
        Monomial lm = ord.leading(h);
        Rational lc = h.coeff(lm);
        bool reduced = false;
        for (size_t i = 0; i < G.size(); ++i) {
            if (lts[i].divides(lm)) {
                h -= SparsePoly(lm.divide(lts[i]), lc) * G[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result += SparsePoly(lm, lc);
            h -= SparsePoly(lm, lc);
        }
    }
    return result;
}

}  // namespace

SparsePoly eliminate_groebner(const ProlongedSystem& sys, const Basis& basis,
                              const GroebnerLimits& limits) {
    std::set<Var> kept(basis.Z.begin(), basis.Z.end());
    kept.insert(basis.U.begin(), basis.U.end());
    kept.insert(Var::u(basis.k0));
    BlockOrder ord(kept);

    std::vector<SparsePoly> G;
    std::vector<Monomial> lts;
    auto push = [&](const SparsePoly& p) {
        SparsePoly m = make_monic(p, ord);
        G.push_back(m);
        lts.push_back(ord.leading(m));
    };
    for (const auto& layer : sys.layers) {
        for (const auto& f : layer) push(f);
    }
    push(SparsePoly(1L) - SparsePoly(Var::sat()) * sys.q);

    // Pair queue keyed by the lcm under the block order (normal selection).
    struct PairLess {
        const BlockOrder* ord;
        bool operator()(const std::tuple<Monomial, size_t, size_t>& a,
                        const std::tuple<Monomial, size_t, size_t>& b) const {
            int c = ord->cmp(std::get<0>(a), std::get<0>(b));
            if (c != 0) return c < 0;
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            return std::get<2>(a) < std::get<2>(b);
        }
    };
    std::set<std::tuple<Monomial, size_t, size_t>, PairLess> pairs(PairLess{&ord});
    std::set<std::pair<size_t, size_t>> done;
    auto queue_pair = [&](size_t i, size_t j) {
        if (lts[i].coprime(lts[j])) {
            done.emplace(i, j);  // product criterion
            return;
        }
        pairs.emplace(lts[i].lcm(lts[j]), i, j);
    };
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) queue_pair(i, j);
    }

    size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > limits.max_pairs || G.size() > limits.max_basis) {
            throw OracleUnavailableError("oracle unavailable");
        }
        auto [l, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        done.emplace(i, j);

        // Chain criterion: some k with lt_k | lcm and both side pairs settled.
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == i || k == j || !lts[k].divides(l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) skip = true;
        }
        if (skip) continue;

        SparsePoly s = SparsePoly(l.divide(lts[i]), Rational(1)) * G[i] -
                       SparsePoly(l.divide(lts[j]), Rational(1)) * G[j];
        SparsePoly r = normal_form(std::move(s), G, lts, ord);
        if (r.is_zero()) continue;
        if (r.total_degree() > limits.max_degree) {
            throw OracleUnavailableError("oracle unavailable");
        }
        size_t idx = G.size();
        push(r);
        for (size_t k = 0; k < idx; ++k) queue_pair(k, idx);
    }

    SparsePoly m;
    for (const SparsePoly& g : G) {
        bool pure = true;
        for (Var v : g.vars()) {
            if (!ord.is_kept(v)) {
                pure = false;
                break;
            }
        }
        if (!pure) continue;
        m = m.is_zero() ? g.primitive() : gcd_multivariate(m, g);
    }
    if (m.is_zero() || m.is_constant()) {
        throw OracleMismatchError("oracle found no eliminating polynomial");
    }
    return m.primitive();
}

}  // namespace dluroth
