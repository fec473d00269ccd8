#pragma once

// I x I matrices of truncated series: the matrix ring hosting Hilbert
// series h(M) of graded R-bimodules, Cartan polynomials and their
// inverses/determinants, and the zeta infinite product.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncalg/series.hpp"

namespace ncalg {

inline constexpr int kDefaultDetBound = 12;

template <class C>
class MatSeries {
public:
    MatSeries(int dim, int order)
        : dim_(check_dim(dim)), order_(order),
          e_(static_cast<size_t>(dim) * dim, Series<C>(order)) {}

    static MatSeries identity(int dim, int order) {
        MatSeries m(dim, order);
        for (int i = 0; i < dim; ++i) m(i, i) = Series<C>::one(order);
        return m;
    }

    int dim() const { return dim_; }
    int order() const { return order_; }

    Series<C>& operator()(int i, int j) { return e_[idx(i, j)]; }
    const Series<C>& operator()(int i, int j) const { return e_[idx(i, j)]; }

    bool is_zero() const {
        for (const auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Series<C> want = (i == j) ? Series<C>::one(order_) : Series<C>(order_);
                if (!((*this)(i, j) == want)) return false;
            }
        return true;
    }

    friend MatSeries operator+(const MatSeries& a, const MatSeries& b) {
        a.require_same_shape(b);
        MatSeries r(a.dim_, a.order_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend MatSeries operator-(const MatSeries& a, const MatSeries& b) {
        a.require_same_shape(b);
        MatSeries r(a.dim_, a.order_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    MatSeries operator-() const {
        MatSeries r(dim_, order_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }
    friend MatSeries operator*(const MatSeries& a, const MatSeries& b) {
        a.require_same_shape(b);
        MatSeries r(a.dim_, a.order_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const Series<C>& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const MatSeries& a, const MatSeries& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

    MatSeries substitute_power(int s) const {
        MatSeries r(dim_, order_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].substitute_power(s);
        return r;
    }

    MatSeries truncate(int new_order) const {
        MatSeries r(dim_, new_order);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].truncate(new_order);
        return r;
    }

    // Neumann-series inverse sum_k (1-A)^k, valid when the constant-term
    // matrix is the identity (the Cartan-polynomial case).
    MatSeries inverse() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const C want = (i == j) ? C(1) : C(0);
                if (!((*this)(i, j)[0] == want))
                    throw std::domain_error(
                        "mat_inv: constant-term matrix must be the identity");
            }
        MatSeries b = identity(dim_, order_) - *this;  // valuation >= 1
        MatSeries acc = identity(dim_, order_);
        MatSeries p = identity(dim_, order_);
        for (int k = 1; k <= order_; ++k) {
            p = p * b;
            if (p.is_zero()) break;
            acc = acc + p;
        }
        return acc;
    }

    // Exact determinant by expansion along rows with subset memoization
    // (no division, so it works over the integer-coefficient ring).
    Series<C> det(int dim_bound = kDefaultDetBound) const {
        if (dim_ > dim_bound)
            throw std::invalid_argument(
                "mat_det: dimension " + std::to_string(dim_) +
                " exceeds the bound " + std::to_string(dim_bound) +
                "; raise it explicitly (--det-bound) if intended");
        const uint32_t full = (dim_ >= 32) ? 0u : (uint32_t{1} << dim_);
        std::vector<Series<C>> minor(full, Series<C>(order_));
        minor[0] = Series<C>::one(order_);
        for (uint32_t s = 1; s < full; ++s) {
            const int row = std::popcount(s) - 1;
            Series<C> acc(order_);
            int pos = 0;  // index of column j within s
            for (int j = 0; j < dim_; ++j) {
                if (!(s & (uint32_t{1} << j))) continue;
                const Series<C>& a = (*this)(row, j);
                if (!a.is_zero()) {
                    Series<C> term = a * minor[s ^ (uint32_t{1} << j)];
                    // Cofactor sign for expansion along the last row of the
                    // rows {0..row} x columns s submatrix.
                    if ((row + pos) % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
                ++pos;
            }
            minor[s] = std::move(acc);
        }
        return minor[full - 1];
    }

private:
    static int check_dim(int dim) {
        if (dim <= 0) throw std::invalid_argument("mat_series: dimension must be positive");
        return dim;
    }
    size_t idx(int i, int j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw std::out_of_range("mat_series: index out of range");
        return static_cast<size_t>(i) * dim_ + j;
    }
    void require_same_shape(const MatSeries& o) const {
        if (dim_ != o.dim_ || order_ != o.order_)
            throw std::invalid_argument("mat_series: shape or order mismatch");
    }

    int dim_;
    int order_;
    std::vector<Series<C>> e_;
};

using ZMatSeries = MatSeries<Int>;
using QMatSeries = MatSeries<Rat>;

// prod_{s=1}^{order} 1/det(P(t^s)) for P with P(0) = identity. Since the
// determinant is a polynomial map, det(P(t^s)) = (det P)(t^s), so the
// base determinant is computed once.
template <class C>
Series<C> infinite_product_zeta(const MatSeries<C>& p, int det_bound = kDefaultDetBound) {
    const int n = p.order();
    Series<C> d = p.det(det_bound);
    if (!(d[0] == C(1)))
        throw std::domain_error("infinite_product_zeta: det must have constant term 1");
    Series<C> r = Series<C>::one(n);
    for (int s = 1; s <= n; ++s) r *= d.substitute_power(s).inverse();
    return r;
}

} // namespace ncalg
