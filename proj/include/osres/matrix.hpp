#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "osres/cyclotomic.hpp"
#include "osres/rational.hpp"

namespace osres {

namespace detail {

// Multiplies a row by a nonzero rational so its entries become "integral"
// (denominator-free), which keeps fraction-free elimination fraction-free.
inline void make_row_integral(std::vector<Rational>& row) {
    mpz_class l(1);
    for (const auto& x : row)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    if (l == 1) return;
    const Rational f{mpz_class(l)};
    for (auto& x : row) x *= f;
}

inline void make_row_integral(std::vector<Cyclotomic>& row) {
    mpz_class l(1);
    for (const auto& x : row)
        for (const auto& c : x.coeffs())
            if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    if (l == 1) return;
    const Cyclotomic f{Rational{mpz_class(l)}};
    for (auto& x : row) x *= f;
}

inline void check_common_field(const std::vector<Rational>&) {}

// All non-rational entries must share one conductor.
inline void check_common_field(const std::vector<Cyclotomic>& entries) {
    int conductor = 0;
    for (const auto& x : entries) {
        if (x.is_rational()) continue;
        if (conductor == 0)
            conductor = x.conductor();
        else if (conductor != x.conductor())
            throw std::invalid_argument("incompatible fields");
    }
}

}  // namespace detail

// Dense matrix over an exact field (Rational or Cyclotomic of one
// conductor). Rank uses fraction-free Bareiss elimination with pivots chosen
// by smallest bit weight, so intermediate coefficient growth stays bounded
// by minor sizes.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& v = (*this)(i, k);
                if (is_zero_value(v)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const F& w = rhs(k, j);
                    if (!is_zero_value(w)) out(i, j) += v * w;
                }
            }
        return out;
    }

    // Columns of `rhs` appended on the right.
    Matrix hstack(const Matrix& rhs) const {
        if (rows_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(rows_, cols_ + rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
        }
        return out;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix out(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
        return out;
    }

    // Exact rank, fraction-free (Bareiss), smallest-bit-weight pivoting.
    std::size_t rank() const { return eliminate_rank(/*min_weight_pivot=*/true); }

    // Exact rank with an independent pivot strategy (first nonzero); a
    // self-check hook for tests.
    std::size_t rank_first_pivot() const { return eliminate_rank(/*min_weight_pivot=*/false); }

    // Basis of the right kernel; size always cols() - rank().
    std::vector<std::vector<F>> kernel_basis() const {
        Matrix r = *this;
        std::vector<std::size_t> pivot_col;
        r.row_reduce(pivot_col);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<F> v(cols_, F(0));
            v[free_col] = F(1);
            for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
                v[pivot_col[pr]] = -r(pr, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Indices of a maximal set of linearly independent columns.
    std::vector<std::size_t> independent_columns() const {
        Matrix r = *this;
        std::vector<std::size_t> pivot_col;
        r.row_reduce(pivot_col);
        return pivot_col;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;

    static bool is_zero_value(const F& x) {
        using osres::is_zero;
        return is_zero(x);
    }
    static std::size_t weight(const F& x) {
        using osres::pivot_weight;
        return pivot_weight(x);
    }

    std::size_t eliminate_rank(bool min_weight_pivot) const {
        detail::check_common_field(a_);
        // Work on a row-scaled copy; scaling by nonzero rationals preserves rank.
        std::vector<std::vector<F>> m(rows_, std::vector<F>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
        for (auto& row : m) detail::make_row_integral(row);

        std::vector<std::size_t> col_of(cols_);
        for (std::size_t j = 0; j < cols_; ++j) col_of[j] = j;

        F prev_pivot(1);
        std::size_t r = 0;
        const std::size_t steps = std::min(rows_, cols_);
        while (r < steps) {
            // Pivot search over the remaining submatrix.
            std::size_t pi = rows_, pj = cols_;
            std::size_t best = 0;
            for (std::size_t i = r; i < rows_; ++i)
                for (std::size_t j = r; j < cols_; ++j) {
                    const F& x = m[i][col_of[j]];
                    if (is_zero_value(x)) continue;
                    if (!min_weight_pivot) {
                        pi = i;
                        pj = j;
                        goto found;
                    }
                    const std::size_t w = weight(x);
                    if (pi == rows_ || w < best) {
                        pi = i;
                        pj = j;
                        best = w;
                    }
                }
        found:
            if (pi == rows_) break;
            std::swap(m[r], m[pi]);
            std::swap(col_of[r], col_of[pj]);
            const F pivot = m[r][col_of[r]];
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const F& head = m[i][col_of[r]];
                const bool head_zero = is_zero_value(head);
                for (std::size_t j = r + 1; j < cols_; ++j) {
                    F& x = m[i][col_of[j]];
                    if (head_zero)
                        x = x * pivot / prev_pivot;  // exact: Bareiss minors
                    else
                        x = (x * pivot - head * m[r][col_of[j]]) / prev_pivot;
                }
                m[i][col_of[r]] = F(0);
            }
            prev_pivot = pivot;
            ++r;
        }
        return r;
    }

    // In-place reduced row echelon form (classical, with division); records
    // pivot columns in order.
    void row_reduce(std::vector<std::size_t>& pivot_col) {
        detail::check_common_field(a_);
        pivot_col.clear();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && is_zero_value((*this)(p, c))) ++p;
            if (p == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(p, j));
            const F inv = F(1) / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const F f = (*this)(i, c);
                if (is_zero_value(f)) continue;
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivot_col.push_back(c);
            ++r;
        }
    }
};

using MatrixQ = Matrix<Rational>;

// Entrywise embedding of a rational matrix into Q(zeta_n).
inline Matrix<Cyclotomic> lift_to_cyclotomic(const MatrixQ& m, int conductor) {
    Matrix<Cyclotomic> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Cyclotomic::from_rational(m(i, j), conductor);
    return out;
}

}  // namespace osres
