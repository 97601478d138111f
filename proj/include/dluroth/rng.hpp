#pragma once

#include <cstdint>
#include <vector>

#include "dluroth/rational.hpp"

namespace dluroth {

// Counter-based generator: draw i is a pure function of (seed, i), so runs are
// reproducible regardless of evaluation order.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    uint64_t raw(uint64_t index) const {
        uint64_t z = seed_ + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t next_u64() { return raw(counter_++); }

    // Uniform integer in [-bound, bound]; the modulo bias is irrelevant here,
    // only reproducibility and spread matter.
    long next_int(long bound) {
        uint64_t span = 2 * static_cast<uint64_t>(bound) + 1;
        return static_cast<long>(next_u64() % span) - bound;
    }

    std::vector<Rational> next_point(size_t dim, long bound) {
        std::vector<Rational> p;
        p.reserve(dim);
        for (size_t i = 0; i < dim; ++i) p.emplace_back(next_int(bound));
        return p;
    }

    uint64_t position() const { return counter_; }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace dluroth
