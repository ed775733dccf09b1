#pragma once

#include <functional>
#include <vector>

#include "cohom1/errors.hpp"
#include "cohom1/series.hpp"

namespace cohom1 {

// Small dense matrix over an exact scalar ring (Rational, AffineScalar or
// TruncatedSeries).  Everything here is O(n^3)-naive on purpose: the
// isotropy complements in scope have dimension at most ~10 and the cost
// lives in the coefficient arithmetic, not the loops.
template <class S>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}
    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    S& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const S& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] + b.d_[k];
        return m;
    }
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] - b.d_[k];
        return m;
    }
    friend DenseMatrix operator-(const DenseMatrix& a) {
        DenseMatrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = -a.d_[k];
        return m;
    }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const S& aik = a(i, k);
                for (int j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }
    friend DenseMatrix operator*(const S& k, const DenseMatrix& a) {
        DenseMatrix m(a.r_, a.c_);
        for (size_t i = 0; i < a.d_.size(); ++i) m.d_[i] = k * a.d_[i];
        return m;
    }
    DenseMatrix& operator+=(const DenseMatrix& o) { return *this = *this + o; }
    DenseMatrix& operator-=(const DenseMatrix& o) { return *this = *this - o; }

    DenseMatrix transposed() const {
        DenseMatrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    S trace() const {
        S t{};
        for (int i = 0; i < r_; ++i) t += (*this)(i, i);
        return t;
    }

    template <class F>
    auto map(F f) const -> DenseMatrix<decltype(f(std::declval<S>()))> {
        DenseMatrix<decltype(f(std::declval<S>()))> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    DenseMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
        return m;
    }

    bool operator==(const DenseMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<S> d_;
};

using RationalMatrix = DenseMatrix<Rational>;
using AffineMatrix = DenseMatrix<AffineScalar>;
using SeriesMatrix = DenseMatrix<TruncatedSeries>;

// Exact Gauss-Jordan inverse over the rationals.
inline RationalMatrix inverse(RationalMatrix a) {
    int n = a.rows();
    if (n != a.cols()) throw NotInvertible("inverse of non-square matrix");
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw NotInvertible("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline SeriesMatrix to_series(const RationalMatrix& a) {
    return a.map([](const Rational& q) { return TruncatedSeries(q); });
}

inline SeriesMatrix truncated(const SeriesMatrix& a, int hi) {
    return a.map([hi](const TruncatedSeries& s) { return s.truncated(hi); });
}

// Inverse of a series matrix of the form t^shift (C0 + R) with C0 an
// invertible constant rational matrix and R of positive valuation, via a
// Neumann expansion, valid through absolute order max_abs_order.
inline SeriesMatrix inverse_shifted(const SeriesMatrix& a, int shift, int max_abs_order) {
    int n = a.rows();
    RationalMatrix c0(n, n);
    SeriesMatrix rest(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TruncatedSeries s = a(i, j).shifted(-shift);
            if (s.ord() < 0) throw NotInvertible("series matrix has entries below leading order");
            AffineScalar lead = s.coeff(0);
            if (!lead.is_constant())
                throw NotInvertible("leading matrix block depends on unknowns");
            c0(i, j) = lead.constant();
            TruncatedSeries r = s - TruncatedSeries(lead);
            rest(i, j) = r;
        }
    RationalMatrix c0inv = inverse(c0);
    int rel = max_abs_order + shift;
    SeriesMatrix x = truncated(to_series(c0inv) * rest, rel);  // valuation >= 1
    SeriesMatrix acc = SeriesMatrix::identity(n);
    SeriesMatrix term = SeriesMatrix::identity(n);
    for (int j = 1; j <= rel; ++j) {
        // bound the factor so the product never forms a coefficient beyond
        // rel (term has valuation >= j - 1, x has valuation >= 1)
        term = truncated(term * truncated(-x, rel - j + 1), rel);
        bool zero = true;
        for (int i = 0; i < n && zero; ++i)
            for (int k = 0; k < n && zero; ++k)
                if (!term(i, k).identically_zero()) zero = false;
        if (zero) break;
        acc += term;
    }
    SeriesMatrix out = truncated(acc * to_series(c0inv), rel);
    return out.map([shift, max_abs_order](const TruncatedSeries& s) {
        return s.shifted(-shift).truncated(max_abs_order);
    });
}

}  // namespace cohom1
