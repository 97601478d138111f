#pragma once

#include <cstddef>
#include <vector>

#include "dluroth/rational.hpp"

namespace dluroth {

class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Exact rank over the rationals, fraction-free elimination.
size_t rank_exact(const ExactMatrix& m);

// Basis of the right kernel; each vector scaled so its first nonzero entry is 1.
std::vector<std::vector<Rational>> nullspace_exact(const ExactMatrix& m);

// pre: square matrix
Rational determinant_exact(const ExactMatrix& m);

}  // namespace dluroth
