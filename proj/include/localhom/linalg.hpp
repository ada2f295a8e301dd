#pragma once

// Exact dense matrices over Z and Q, and the Smith normal form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "localhom/error.hpp"

namespace localhom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
        : rows_(rows), cols_(cols), data_(std::move(row_major)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("matrix data does not match its shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& factor) {
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
    }
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& factor) {
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Debug dump: row-major grid.
    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline RationalMatrix to_rational(const IntegerMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

/// d = u * a * v with u, v unimodular and d diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
        return out;
    }
};

namespace detail {

// Position of the nonzero entry of least absolute value in the lower-right
// block starting at (t, t); ties go to the smallest (row, col).
inline bool min_abs_entry(const IntegerMatrix& d, std::size_t t, std::size_t& row,
                          std::size_t& col) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const auto& x = d(i, j);
            if (x == 0) continue;
            Integer ax = abs(x);
            if (!found || ax < best) {
                best = std::move(ax);
                row = i;
                col = j;
                found = true;
                if (best == 1) return true;
            }
        }
    return found;
}

template <bool Track>
void smith_reduce(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        std::size_t pr = 0, pc = 0;
        if (!min_abs_entry(d, t, pr, pc)) break;
        d.swap_rows(t, pr);
        d.swap_cols(t, pc);
        if constexpr (Track) {
            u->swap_rows(t, pr);
            v->swap_cols(t, pc);
        }
        const Integer pivot = d(t, t);

        bool clear = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (d(i, t) == 0) continue;
            Integer q = -(d(i, t) / pivot);
            d.add_row(i, t, q);
            if constexpr (Track) u->add_row(i, t, q);
            if (d(i, t) != 0) clear = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (d(t, j) == 0) continue;
            Integer q = -(d(t, j) / pivot);
            d.add_col(j, t, q);
            if constexpr (Track) v->add_col(j, t, q);
            if (d(t, j) != 0) clear = false;
        }
        if (!clear) continue;

        // Row and column are clear; enforce divisibility of the remaining block.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (d(i, j) % pivot != 0) {
                    d.add_row(t, i, Integer(1));
                    if constexpr (Track) u->add_row(t, i, Integer(1));
                    divisible = false;
                    break;
                }
        if (!divisible) continue;

        if (d(t, t) < 0) {
            d.negate_row(t);
            if constexpr (Track) u->negate_row(t);
        }
        ++t;
    }
}

}  // namespace detail

/// Smith normal form with transforms. The pivot is always the entry of least
/// absolute value in the active block, so transcripts are deterministic.
inline SnfResult smith_normal_form(const IntegerMatrix& a) {
    SnfResult r{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols())};
    detail::smith_reduce<true>(r.d, &r.u, &r.v);
    return r;
}

/// Nonzero diagonal entries of the Smith normal form, without transforms.
inline std::vector<Integer> invariant_factors(IntegerMatrix a) {
    detail::smith_reduce<false>(a, nullptr, nullptr);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()) && a(i, i) != 0; ++i)
        out.push_back(a(i, i));
    return out;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Integer determinant(IntegerMatrix a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return n == 0 ? Integer(1) : sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Rational elimination

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            a.add_row(i, r, Rational(-a(i, c)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank_over_rationals(const RationalMatrix& a) {
    auto copy = a;
    return row_reduce(copy).size();
}

inline std::size_t rank_over_rationals(const IntegerMatrix& a) {
    return rank_over_rationals(to_rational(a));
}

/// Scales a rational vector to integers with content 1. The sign is left as
/// produced by the elimination.
inline std::vector<Integer> primitive_integer_vector(const RationalVector& x) {
    Integer lcm = 1;
    for (const auto& q : x)
        if (q != 0) lcm = boost::multiprecision::lcm(lcm, denominator(q));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& q : x) {
        Integer z = numerator(q) * (lcm / denominator(q));
        g = boost::multiprecision::gcd(g, z);
        out.push_back(std::move(z));
    }
    if (g > 1)
        for (auto& z : out) z /= g;
    return out;
}

/// Basis of the rational null space, one vector per free column in
/// ascending order, each cleared to integer entries with content 1.
inline std::vector<RationalVector> kernel_basis_over_rationals(const RationalMatrix& a) {
    auto r = a;
    const auto pivots = row_reduce(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(a.cols());
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, free);
        RationalVector cleared;
        for (auto& z : primitive_integer_vector(x)) cleared.emplace_back(z);
        basis.push_back(std::move(cleared));
    }
    return basis;
}

inline std::vector<RationalVector> kernel_basis_over_rationals(const IntegerMatrix& a) {
    return kernel_basis_over_rationals(to_rational(a));
}

/// Solves a x = b for a of full column rank; returns nullopt if b is not in
/// the column space.
inline std::optional<RationalVector> solve_full_column_rank(const RationalMatrix& a,
                                                            const RationalVector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side has the wrong length");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    if (pivots.size() != a.cols()) throw ConsistencyError("solve: matrix is not of full column rank");
    RationalVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

}  // namespace localhom
