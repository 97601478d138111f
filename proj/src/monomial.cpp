#include "dluroth/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dluroth {

std::string Var::str() const {
    if (kind() == kT) return "t";
    std::string base;
    bool prime_style = false;
    if (is_u()) {
        base = "u";
        prime_style = order() <= 2;
    } else if (is_y()) {
        base = "y";
        prime_style = order() <= 2;
    } else {
        base = "x" + std::to_string(x_index());
        prime_style = order() <= 1;
    }
    if (prime_style) return base + std::string(static_cast<size_t>(order()), '\'');
    return base + "^(" + std::to_string(order()) + ")";
}

Monomial::Monomial(Var v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) factors_.emplace_back(v, exp);
}

Monomial Monomial::from_factors(std::vector<std::pair<Var, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(Var v) const {
    for (const auto& [w, e] : factors_) {
        if (w == v) return e;
        if (w > v) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto b = o.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (b != o.factors_.end() && b->first < v) ++b;
        if (b == o.factors_.end() || b->first != v || b->second < e) return false;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto b = o.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (b != o.factors_.end() && b->first < v) {
            throw std::invalid_argument("monomial division is not exact");
        }
        if (b != o.factors_.end() && b->first == v) {
            if (b->second > e) throw std::invalid_argument("monomial division is not exact");
            if (e - b->second > 0) r.factors_.emplace_back(v, e - b->second);
            ++b;
        } else {
            r.factors_.emplace_back(v, e);
        }
    }
    if (b != o.factors_.end()) throw std::invalid_argument("monomial division is not exact");
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else return false;
    }
    return true;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (const auto& f : factors_) {
        if (f.first != v) r.factors_.push_back(f);
    }
    return r;
}

Monomial Monomial::with_exponent(Var v, int exp) const {
    Monomial r = without(v);
    if (exp > 0) {
        auto it = std::lower_bound(
            r.factors_.begin(), r.factors_.end(), v,
            [](const auto& f, Var w) { return f.first < w; });
        r.factors_.insert(it, {v, exp});
    }
    return r;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += v.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

int canonical_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.begin();
    auto ib = fb.begin();
    while (ia != fa.end() && ib != fb.end()) {
        if (ia->first < ib->first) return 1;   // a has the lower variable
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != fa.end()) return 1;
    if (ib != fb.end()) return -1;
    return 0;
}

}  // namespace dluroth
