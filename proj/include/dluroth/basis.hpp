#pragma once

#include <vector>

#include "dluroth/system.hpp"

namespace dluroth {

// Transcendence basis B0 = {Z, U} of the coordinate functions on the variety,
// with Z among x-derivatives (maximal) and U among u^[e].
struct Basis {
    std::vector<Var> Z;
    std::vector<Var> U;
    int k0 = 0;  // min k with u^(k) outside B0
};

// Greedy selection in the fixed order: x_j^(k) by (k, j) ascending, then
// u^(i) by i ascending; a candidate enters when its gradient row over u^[2e]
// at a random admissible point raises the exact rank. Size must reach 2e+1.
Basis select_basis(const ProlongedSystem& sys, CounterRng& rng, long coeff_bound, int attempts);

}  // namespace dluroth
