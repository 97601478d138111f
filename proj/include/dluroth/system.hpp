#pragma once

#include <map>
#include <vector>

#include "dluroth/matrix.hpp"
#include "dluroth/ratfun.hpp"
#include "dluroth/rng.hpp"

namespace dluroth {

// The generators P_j/Q_j of G, reduced, with the derived instance parameters.
struct GeneratorInput {
    std::vector<DiffRatFun> gens;  // u-variables only
    int n = 0;                     // generator count
    int d = 0;                     // max total degree over all P_j, Q_j
    int e = 0;                     // max order over all P_j, Q_j
    std::vector<int> gen_order;    // ord(P_j/Q_j) per generator
    bool reduced_warning = false;  // some pair needed reduction
};

// Validates and reduces the pairs; throws InputError on zero denominators,
// constant generators, or purely algebraic input (e = 0).
GeneratorInput make_generator_input(const std::vector<std::pair<SparsePoly, SparsePoly>>& pairs);

// F_j^(k) for 0 <= k <= layer count - 1, plus the saturation polynomial q.
struct ProlongedSystem {
    GeneratorInput input;
    std::vector<std::vector<SparsePoly>> layers;  // layers[k][j-1] = F_j^(k)
    SparsePoly q;                                 // product of the Q_j
};

// Layer 0 only: F_j = Q_j x_j - P_j.
ProlongedSystem build_system(const GeneratorInput& gens);

// Extends to layers 0..e by repeated derivation.
ProlongedSystem prolong(ProlongedSystem sys);

// k-th derivative of P_j/Q_j, reduced; j is 1-based.
DiffRatFun parametrization_derivative(const GeneratorInput& gens, int j, int k);

// table[j-1][k] = parametrization_derivative(j, k) for k = 0..max_k
std::vector<std::vector<DiffRatFun>> parametrization_table(const GeneratorInput& gens, int max_k);

// Assignment u^(i) -> point[i].
std::map<Var, Rational> jet_assignment(const std::vector<Rational>& point);

// Values of x_j^(k) at the jet through point (length 2e+1, orders 0..2e);
// result index k*n + (j-1). Throws SingularPointError when q vanishes.
std::vector<Rational> eval_jet(const GeneratorInput& gens, const std::vector<Rational>& point);
std::vector<Rational> eval_jet(const GeneratorInput& gens,
                               const std::vector<std::vector<DiffRatFun>>& table,
                               const std::vector<Rational>& point);

// Draws integer points in [-bound, bound]^(2e+1) until q does not vanish.
std::vector<Rational> draw_admissible_point(const ProlongedSystem& sys, CounterRng& rng,
                                            long bound, int attempts);

// Combined assignment for u^[2e] and the x-jet through it.
std::map<Var, Rational> full_assignment(const GeneratorInput& gens,
                                        const std::vector<Rational>& point);

struct JacobianProfile {
    std::vector<size_t> ranks;     // rank J_1 .. rank J_{e+1}
    std::vector<Rational> point;   // evaluation point for u^[2e]
    bool matches_expected = false; // profile equals (1, 2, ..., e, e+n)
    int index = -1;                // differentiation index recovered from the profile
};

// J_k: rows F^(0..k-1), columns (x,u)^(e..e+k-1), evaluated at the jet.
ExactMatrix jacobian_matrix(const ProlongedSystem& sys, int k,
                            const std::map<Var, Rational>& assignment);

JacobianProfile jacobian_profile(const ProlongedSystem& sys, const std::vector<Rational>& point);

// Determinant of the Jacobian of F^[i-1] in the x^[i-1] columns at the jet;
// equals q(point)^i for a quasi-regular system.
Rational x_block_minor(const ProlongedSystem& sys, int i,
                       const std::map<Var, Rational>& assignment);

}  // namespace dluroth
