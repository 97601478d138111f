#pragma once

#include <vector>

#include "dluroth/basis.hpp"
#include "dluroth/system.hpp"

namespace dluroth {

struct MinimalPolynomial {
    SparsePoly M;  // integer-primitive, positive leading coefficient
    int degree = 0;
    size_t samples = 0;
    size_t kernel_dim = 0;
    bool symbolically_verified = false;
};

// All monomials in the given variables of total degree <= degree,
// canonically sorted, leading first.
std::vector<Monomial> monomials_up_to(const std::vector<Var>& vars, int degree);

// Substitutes every x_j^(k) of M by the k-th derivative of P_j/Q_j, clears
// denominators, and tests exact vanishing as a polynomial in u^[2e].
bool vanish_check_symbolic(const GeneratorInput& gens, const SparsePoly& M, const Basis& basis);

// Least-degree polynomial relation among Z, U and u^(k0) on the variety,
// found by sampling and certified by vanish_check_symbolic.
MinimalPolynomial minimal_polynomial(const ProlongedSystem& sys, const Basis& basis,
                                     CounterRng& rng, long max_degree, long coeff_bound,
                                     int attempts);

}  // namespace dluroth
