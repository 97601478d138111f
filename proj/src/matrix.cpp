#include "dluroth/matrix.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace dluroth {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> a;
    std::vector<mpz_class> row_scale;       // original row i was multiplied by row_scale[i]
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col) in the echelon matrix
    int swap_sign = 1;
};

mpz_class divexact_checked(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("fraction-free elimination divided inexactly");
    return q;
}

// Bareiss elimination with row pivoting; entries stay minors of the scaled matrix.
Echelon echelon_form(const ExactMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    e.a.assign(rows, std::vector<mpz_class>(cols));
    e.row_scale.assign(rows, mpz_class(1));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < cols; ++j) l = lcm_int(l, m.at(i, j).denominator());
        e.row_scale[i] = l;
        for (size_t j = 0; j < cols; ++j) {
            mpq_class v = m.at(i, j).raw() * mpq_class(l);
            e.a[i][j] = v.get_num();
        }
    }
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && e.a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(e.a[p], e.a[r]);
            std::swap(e.row_scale[p], e.row_scale[r]);
            e.swap_sign = -e.swap_sign;
        }
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                e.a[i][j] = divexact_checked(e.a[i][j] * e.a[r][c] - e.a[i][c] * e.a[r][j], prev);
            }
            e.a[i][c] = 0;
        }
        prev = e.a[r][c];
        e.pivots.emplace_back(r, c);
        ++r;
    }
    return e;
}

}  // namespace

size_t rank_exact(const ExactMatrix& m) { return echelon_form(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace_exact(const ExactMatrix& m) {
    size_t cols = m.cols();
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = Rational(1);
        for (size_t k = e.pivots.size(); k-- > 0;) {
            auto [r, c] = e.pivots[k];
            if (c > f) continue;
            mpq_class s = 0;
            for (size_t j = c + 1; j <= f; ++j) {
                if (!x[j].is_zero()) s += mpq_class(e.a[r][j]) * x[j].raw();
            }
            x[c] = Rational(mpq_class(-s / mpq_class(e.a[r][c])));
        }
        for (size_t j = 0; j < cols; ++j) {
            if (!x[j].is_zero()) {
                Rational lead = x[j];
                for (size_t k = j; k < cols; ++k) {
                    if (!x[k].is_zero()) x[k] /= lead;
                }
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Rational determinant_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of nonsquare matrix");
    if (m.rows() == 0) return Rational(1);
    Echelon e = echelon_form(m);
    if (e.pivots.size() < m.rows()) return Rational(0);
    mpq_class det = mpq_class(e.a[m.rows() - 1][m.cols() - 1]) * e.swap_sign;
    for (const auto& s : e.row_scale) det /= mpq_class(s);
    return Rational(det);
}

}  // namespace dluroth
