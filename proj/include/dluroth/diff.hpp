#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dluroth/poly.hpp"

namespace dluroth {

// delta(z^(i)) = z^(i+1) extended by linearity and the Leibniz rule.
SparsePoly derive(const SparsePoly& p);
SparsePoly derive(SparsePoly p, int times);

// Highest derivative order appearing, over all kinds or one kind;
// nullopt when no such variable occurs (the max over an empty set).
std::optional<int> order_of(const SparsePoly& p);
std::optional<int> order_of(const SparsePoly& p, uint32_t kind);

// Variable-kind ordering, lowest first; positions are 1-based, 0 = constant.
struct KindOrdering {
    std::vector<uint32_t> kinds;
    static KindOrdering u_then_x(int n);
    int position(uint32_t kind) const;  // -1 when the kind is not covered
};

int ritt_class(const SparsePoly& p, const KindOrdering& ord);

// Highest derivative of the class kind (pre: ritt_class > 0).
Var leader(const SparsePoly& p, const KindOrdering& ord);

// (separant, initial) = (dp/d leader, coefficient of the highest leader power).
std::pair<SparsePoly, SparsePoly> separant_initial(const SparsePoly& p, const KindOrdering& ord);

// Ritt rank: by class, then leader order, then leader degree. Test helper.
int compare_rank(const SparsePoly& a, const SparsePoly& b, const KindOrdering& ord);

}  // namespace dluroth
