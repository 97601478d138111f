#pragma once

#include <utility>
#include <vector>

#include "dluroth/basis.hpp"
#include "dluroth/system.hpp"

namespace dluroth {

struct LurothResult {
    SparsePoly M1, M2;            // specializations of M, as drawn
    DiffRatFun v;                 // reduced generator M1/M2
    std::vector<Rational> u1, u2; // the two specialization points
    DiffRatFun gamma;             // proportionality witness from verification
    bool verified = false;
    int attempts_used = 0;
};

struct BoundsReport {
    int order_bound = 0;          // min_j ord(P_j/Q_j)
    mpz_class bezout_bound;       // (d+1)^((e+1)n)
    mpz_class structured_bound;   // (nd(e+1)+1)^(2e+1)
};

// Substitutes two random admissible jets into the Z-variables of M and forms
// the generator; retries while a specialization degenerates (zero or
// proportional results). forced_points, when nonempty, must hold exactly the
// two points to use and disables retries.
LurothResult specialize_minimal_polynomial(const SparsePoly& M, const ProlongedSystem& sys,
                                           CounterRng& rng, long coeff_bound, int attempts,
                                           const std::vector<std::vector<Rational>>&
                                               forced_points = {});

// M1/M2 reduced, denominator integer-primitive positive-leading; rejects
// constant ratios.
DiffRatFun normalize_generator(const SparsePoly& M1, const SparsePoly& M2);

// Checks that M with x-variables replaced by the parametrization and
// u-variables renamed to y is proportional (over F(u^[2e])) to
// M2(u) M1(y) - M1(u) M2(y); returns the factor gamma on success.
std::pair<bool, DiffRatFun> verify_generator(const GeneratorInput& gens, const SparsePoly& M,
                                             const DiffRatFun& v);

BoundsReport bounds_report(const GeneratorInput& gens);

// True when w = (a v + b)/(c v + d) for rationals with ad - bc nonzero.
bool homographic_equivalence(const DiffRatFun& v, const DiffRatFun& w);

}  // namespace dluroth
