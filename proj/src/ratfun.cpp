#include "dluroth/ratfun.hpp"

#include <stdexcept>

#include "dluroth/diff.hpp"
#include "dluroth/gcd.hpp"

namespace dluroth {

DiffRatFun::DiffRatFun(const SparsePoly& num, const SparsePoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = SparsePoly(1L);
        return;
    }
    SparsePoly g = gcd_multivariate(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.try_divide_exact(g);
        den_ = *den_.try_divide_exact(g);
    }
    Rational c = den_.content();
    num_ *= c.inverse();
    den_ *= c.inverse();
}

std::optional<int> DiffRatFun::order() const {
    auto a = order_of(num_), b = order_of(den_);
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

DiffRatFun DiffRatFun::operator+(const DiffRatFun& o) const {
    return DiffRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

DiffRatFun DiffRatFun::operator-(const DiffRatFun& o) const {
    return DiffRatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

DiffRatFun DiffRatFun::operator*(const DiffRatFun& o) const {
    return DiffRatFun(num_ * o.num_, den_ * o.den_);
}

DiffRatFun DiffRatFun::operator/(const DiffRatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return DiffRatFun(num_ * o.den_, den_ * o.num_);
}

DiffRatFun DiffRatFun::derive() const {
    return DiffRatFun(dluroth::derive(num_) * den_ - num_ * dluroth::derive(den_), den_ * den_);
}

Rational DiffRatFun::eval(const std::map<Var, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at the point");
    return num_.eval(point) / d;
}

std::string DiffRatFun::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace dluroth
