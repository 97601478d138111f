#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dluroth {

// A differential variable z^(k): the indeterminate u, one of the tags x_j,
// the auxiliary indeterminate y used by generator verification, or the
// saturation variable t of the Groebner oracle. The global order is
// (derivative order, kind) with u below x1 < x2 < ... at equal order.
class Var {
public:
    static constexpr uint16_t kU = 0;
    static constexpr uint16_t kY = 0x7ffe;
    static constexpr uint16_t kT = 0x7fff;

    Var() : code_(0) {}

    static Var u(int order) { return Var(kU, order); }
    static Var x(int j, int order) { return Var(static_cast<uint16_t>(j), order); }
    static Var y(int order) { return Var(kY, order); }
    static Var sat() { return Var(kT, 0); }

    uint16_t kind() const { return static_cast<uint16_t>(code_ & 0xffff); }
    int order() const { return static_cast<int>(code_ >> 16); }
    bool is_u() const { return kind() == kU; }
    bool is_x() const { return kind() >= 1 && kind() < kY; }
    bool is_y() const { return kind() == kY; }
    int x_index() const { return kind(); }  // 1-based, valid when is_x()

    Var shifted() const { return Var(kind(), order() + 1); }

    // Canonical text form: u, u', u'', u^(3), x1, x1', x1^(2), y, t.
    std::string str() const;

    friend bool operator==(Var a, Var b) { return a.code_ == b.code_; }
    friend bool operator!=(Var a, Var b) { return a.code_ != b.code_; }
    friend bool operator<(Var a, Var b) { return a.code_ < b.code_; }
    friend bool operator>(Var a, Var b) { return a.code_ > b.code_; }
    friend bool operator<=(Var a, Var b) { return a.code_ <= b.code_; }
    friend bool operator>=(Var a, Var b) { return a.code_ >= b.code_; }

    uint32_t code() const { return code_; }

private:
    Var(uint16_t kind, int order)
        : code_((static_cast<uint32_t>(order) << 16) | kind) {}
    uint32_t code_;
};

// Power product of differential variables; exponents are positive and the
// factor list is kept sorted by Var.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Var v, int exp = 1);
    static Monomial from_factors(std::vector<std::pair<Var, int>> factors);

    bool is_one() const { return factors_.empty(); }
    int total_degree() const;
    int exponent_of(Var v) const;
    bool contains(Var v) const { return exponent_of(v) > 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;           // this | o
    Monomial divide(const Monomial& o) const;        // this / o, o | this required
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    // Exponent set to zero for v (used when substituting a variable away).
    Monomial without(Var v) const;
    Monomial with_exponent(Var v, int exp) const;

    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

    std::string str() const;  // "u*x1^2", "1" for the empty product

private:
    std::vector<std::pair<Var, int>> factors_;
};

// Graded order used for canonical storage and printing: total degree first,
// ties broken at the first variable (in global order) where exponents differ,
// larger exponent winning. This is a monomial order, so leading terms behave
// under products and exact division.
int canonical_cmp(const Monomial& a, const Monomial& b);

struct CanonicalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_cmp(a, b) > 0;
    }
};

}  // namespace dluroth
