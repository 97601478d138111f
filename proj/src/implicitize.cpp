#include "dluroth/implicitize.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "dluroth/errors.hpp"
#include "dluroth/matrix.hpp"

namespace dluroth {

namespace {

void enumerate(const std::vector<Var>& vars, size_t i, int left,
               std::vector<std::pair<Var, int>>& acc, std::vector<Monomial>& out) {
    if (i == vars.size()) {
        out.push_back(Monomial::from_factors(acc));
        return;
    }
    for (int e = 0; e <= left; ++e) {
        if (e > 0) acc.emplace_back(vars[i], e);
        enumerate(vars, i + 1, left - e, acc, out);
        if (e > 0) acc.pop_back();
    }
}

constexpr uint64_t kPrime = (1ull << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::optional<uint64_t> residue(const Rational& r) {
    uint64_t den = mpz_fdiv_ui(r.denominator().get_mpz_t(), kPrime);
    if (den == 0) return std::nullopt;
    uint64_t num = mpz_fdiv_ui(r.numerator().get_mpz_t(), kPrime);
    if (r.sign() < 0 && num != 0) num = kPrime - num;
    return mulmod(num, powmod(den, kPrime - 2));
}

size_t rank_mod_p(std::vector<std::vector<uint64_t>>& a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        uint64_t inv = powmod(a[r][c], kPrime - 2);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            uint64_t f = mulmod(a[i][c], inv);
            for (size_t j = c; j < cols; ++j) {
                uint64_t s = mulmod(f, a[r][j]);
                a[i][j] = a[i][j] >= s ? a[i][j] - s : a[i][j] + kPrime - s;
            }
        }
        ++r;
    }
    return r;
}

struct SamplePoint {
    std::map<Var, std::vector<Rational>> powers;          // value^0..value^D
    std::map<Var, std::vector<uint64_t>> powers_mod;      // same, mod kPrime
    bool mod_ok = true;
};

SamplePoint sample_values(const std::vector<Var>& vars, const GeneratorInput& gens,
                          const std::vector<std::vector<DiffRatFun>>& table,
                          const std::vector<Rational>& point, int max_deg) {
    std::vector<Rational> x = eval_jet(gens, table, point);
    SamplePoint s;
    for (Var v : vars) {
        Rational val = v.is_u() ? point[v.order()]
                                : x[static_cast<size_t>(v.order()) * gens.n + (v.x_index() - 1)];
        std::vector<Rational> pw{Rational(1)};
        for (int i = 1; i <= max_deg; ++i) pw.push_back(pw.back() * val);
        std::vector<uint64_t> pm;
        for (const Rational& r : pw) {
            auto m = residue(r);
            if (!m) {
                s.mod_ok = false;
                break;
            }
            pm.push_back(*m);
        }
        s.powers_mod.emplace(v, std::move(pm));
        s.powers.emplace(v, std::move(pw));
    }
    return s;
}

Rational eval_monomial(const SamplePoint& s, const Monomial& m) {
    Rational r(1);
    for (const auto& [v, e] : m.factors()) r *= s.powers.at(v)[e];
    return r;
}

uint64_t eval_monomial_mod(const SamplePoint& s, const Monomial& m) {
    uint64_t r = 1;
    for (const auto& [v, e] : m.factors()) r = mulmod(r, s.powers_mod.at(v)[e]);
    return r;
}

}  // namespace

std::vector<Monomial> monomials_up_to(const std::vector<Var>& vars, int degree) {
    std::vector<Monomial> out;
    std::vector<std::pair<Var, int>> acc;
    enumerate(vars, 0, degree, acc, out);
    std::sort(out.begin(), out.end(), CanonicalGreater{});
    return out;
}

bool vanish_check_symbolic(const GeneratorInput& gens, const SparsePoly& M,
                           const Basis& basis) {
    (void)basis;
    std::vector<Var> xvars;
    int max_k = 0;
    for (Var v : M.vars()) {
        if (v.is_x()) {
            xvars.push_back(v);
            max_k = std::max(max_k, v.order());
        }
    }
    auto table = parametrization_table(gens, max_k);

    // For each x-variable keep num^a and den^(dmax-a); the common denominator
    // multiple of every term is then the product of den^dmax, so the sum is a
    // polynomial and vanishing is an exact zero test.
    std::map<Var, std::vector<SparsePoly>> num_pow, den_pow;
    for (Var v : xvars) {
        const DiffRatFun& f = table[v.x_index() - 1][v.order()];
        int dmax = M.degree_in(v);
        std::vector<SparsePoly> np{SparsePoly(1L)}, dp{SparsePoly(1L)};
        for (int i = 1; i <= dmax; ++i) {
            np.push_back(np.back() * f.num());
            dp.push_back(dp.back() * f.den());
        }
        num_pow.emplace(v, std::move(np));
        den_pow.emplace(v, std::move(dp));
    }

    SparsePoly total;
    for (const auto& [m, c] : M.terms()) {
        std::vector<std::pair<Var, int>> rest;
        for (const auto& [v, e] : m.factors()) {
            if (!v.is_x()) rest.emplace_back(v, e);
        }
        SparsePoly part(Monomial::from_factors(rest), c);
        for (Var v : xvars) {
            int a = m.exponent_of(v);
            int dmax = M.degree_in(v);
            part *= num_pow.at(v)[a];
            part *= den_pow.at(v)[dmax - a];
        }
        total += part;
    }
    return total.is_zero();
}

MinimalPolynomial minimal_polynomial(const ProlongedSystem& sys, const Basis& basis,
                                     CounterRng& rng, long max_degree, long coeff_bound,
                                     int attempts) {
    const GeneratorInput& gens = sys.input;
    std::vector<Var> w = basis.Z;
    w.insert(w.end(), basis.U.begin(), basis.U.end());
    w.push_back(Var::u(basis.k0));
    auto table = parametrization_table(gens, gens.e);
    Var uk0 = Var::u(basis.k0);

    size_t samples_total = 0;
    for (long D = 1; D <= max_degree; ++D) {
        std::vector<Monomial> monos = monomials_up_to(w, static_cast<int>(D));
        size_t m = monos.size();
        size_t rows = m + 8;
        bool kernel_vanished = false;

        for (int attempt = 0; attempt < attempts; ++attempt) {
            std::vector<SamplePoint> pts;
            pts.reserve(rows);
            bool mod_ok = true;
            for (size_t i = 0; i < rows; ++i) {
                std::vector<Rational> p = draw_admissible_point(sys, rng, coeff_bound, attempts);
                pts.push_back(sample_values(w, gens, table, p, D));
                mod_ok = mod_ok && pts.back().mod_ok;
            }
            samples_total += rows;

            if (mod_ok) {
                std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(m));
                for (size_t i = 0; i < rows; ++i) {
                    for (size_t j = 0; j < m; ++j) a[i][j] = eval_monomial_mod(pts[i], monos[j]);
                }
                // Full rank modulo a prime certifies a trivial kernel over Q.
                if (rank_mod_p(a) == m) {
                    kernel_vanished = true;
                    break;
                }
            }

            ExactMatrix mat(rows, m);
            for (size_t i = 0; i < rows; ++i) {
                for (size_t j = 0; j < m; ++j) mat.at(i, j) = eval_monomial(pts[i], monos[j]);
            }
            auto kernel = nullspace_exact(mat);
            if (kernel.empty()) {
                kernel_vanished = true;
                break;
            }
            if (kernel.size() > 1) continue;

            SparsePoly M;
            for (size_t j = 0; j < m; ++j) M += SparsePoly(monos[j], kernel[0][j]);
            M = M.primitive();
            if (M.degree_in(uk0) == 0) continue;
            if (!vanish_check_symbolic(gens, M, basis)) continue;
            return {M, M.total_degree(), samples_total, 1, true};
        }
        // Every resample at this degree produced a kernel that never certified.
        if (!kernel_vanished) throw RetryError("inconsistent sampling");
    }
    throw RetryError("degree cap reached");
}

}  // namespace dluroth
