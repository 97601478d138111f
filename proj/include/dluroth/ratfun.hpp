#pragma once

#include <map>
#include <string>

#include "dluroth/poly.hpp"

namespace dluroth {

// num/den with gcd(num, den) = 1 and den integer-primitive, positive-leading.
class DiffRatFun {
public:
    DiffRatFun() : num_(), den_(1L) {}
    explicit DiffRatFun(const SparsePoly& p) : num_(p), den_(1L) {}
    DiffRatFun(const SparsePoly& num, const SparsePoly& den);

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Max derivative order over numerator and denominator; nullopt for constants.
    std::optional<int> order() const;

    DiffRatFun operator+(const DiffRatFun& o) const;
    DiffRatFun operator-(const DiffRatFun& o) const;
    DiffRatFun operator*(const DiffRatFun& o) const;
    DiffRatFun operator/(const DiffRatFun& o) const;
    DiffRatFun derive() const;
    bool operator==(const DiffRatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const DiffRatFun& o) const { return !(*this == o); }

    // pre: point covers all variables and the denominator does not vanish there
    Rational eval(const std::map<Var, Rational>& point) const;

    std::string str() const;

private:
    SparsePoly num_, den_;
};

}  // namespace dluroth
