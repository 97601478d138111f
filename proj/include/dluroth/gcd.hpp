#pragma once

#include "dluroth/poly.hpp"

namespace dluroth {

// Greatest common divisor, integer-primitive with positive leading coefficient.
// gcd(p, 0) is the normalized p; gcd of two zeros is rejected.
SparsePoly gcd_multivariate(const SparsePoly& a, const SparsePoly& b);

}  // namespace dluroth
