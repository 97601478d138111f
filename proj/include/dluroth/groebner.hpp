#pragma once

#include "dluroth/basis.hpp"
#include "dluroth/system.hpp"

namespace dluroth {

struct GroebnerLimits {
    size_t max_basis = 400;
    size_t max_pairs = 50000;
    int max_degree = 40;
};

// Independent route to the minimal polynomial: Buchberger on the prolonged
// system saturated by 1 - t*q, under a block order eliminating everything
// outside Z, U, u^(k0); the kept-variables elements are folded by gcd.
// Throws OracleUnavailableError when a size guard trips.
SparsePoly eliminate_groebner(const ProlongedSystem& sys, const Basis& basis,
                              const GroebnerLimits& limits = {});

}  // namespace dluroth
