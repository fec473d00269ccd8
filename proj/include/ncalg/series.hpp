#pragma once

// Truncated one-variable power series with exact coefficients.
//
// A series keeps coefficients of t^0..t^N for a fixed truncation order N.
// Binary operations require equal orders; re-truncation is explicit via
// truncate(). Coefficient rings: mpz_class (exact integers), mpq_class
// (exact rationals), std::complex<double> (numeric, used by the Monte
// Carlo engine).

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ncalg {

using Int = mpz_class;
using Rat = mpq_class;
using Cplx = std::complex<double>;

namespace detail {

template <class C>
inline bool coeff_is_zero(const C& c) { return c == C(0); }
inline bool coeff_is_zero(const Cplx& c) { return c == Cplx(0.0, 0.0); }

// Inverse of a constant term, where defined for the coefficient ring.
inline Int coeff_inverse(const Int& c) {
    if (c != 1 && c != -1)
        throw std::domain_error("series: constant term " + c.get_str() +
                                " is not invertible over the integers");
    return c;
}
inline Rat coeff_inverse(const Rat& c) {
    if (c == 0) throw std::domain_error("series: constant term 0 is not invertible");
    return Rat(1) / c;
}
inline Cplx coeff_inverse(const Cplx& c) {
    if (c == Cplx(0.0, 0.0))
        throw std::domain_error("series: constant term 0 is not invertible");
    return Cplx(1.0, 0.0) / c;
}

} // namespace detail

template <class C>
class Series {
public:
    Series() : coeffs_(1, C(0)) {}
    explicit Series(int order) : coeffs_(check_order(order) + 1, C(0)) {}
    Series(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        check_order(order);
        coeffs_.resize(static_cast<size_t>(order) + 1, C(0));
    }

    static Series one(int order) {
        Series s(order);
        s.coeffs_[0] = C(1);
        return s;
    }
    // c * t^k, truncated (vanishes if k > order).
    static Series monomial(int order, int k, const C& c) {
        Series s(order);
        if (k >= 0 && k <= order) s.coeffs_[static_cast<size_t>(k)] = c;
        return s;
    }
    // 1 - t^k
    static Series one_minus_tk(int order, int k) {
        Series s = one(order);
        if (k >= 1 && k <= order) s.coeffs_[static_cast<size_t>(k)] = C(-1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& operator[](int r) const { return coeffs_.at(static_cast<size_t>(r)); }
    C& at(int r) { return coeffs_.at(static_cast<size_t>(r)); }
    const std::vector<C>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const C& c : coeffs_)
            if (!detail::coeff_is_zero(c)) return false;
        return true;
    }

    Series truncate(int new_order) const {
        if (new_order > order())
            throw std::invalid_argument("series: truncate cannot raise the order");
        std::vector<C> v(coeffs_.begin(), coeffs_.begin() + new_order + 1);
        return Series(new_order, std::move(v));
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.require_same_order(b);
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        a.require_same_order(b);
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }
    Series operator-() const {
        Series r(order());
        for (int i = 0; i <= order(); ++i) r.coeffs_[i] = -coeffs_[i];
        return r;
    }

    // Cauchy product, truncated at the shared order.
    friend Series operator*(const Series& a, const Series& b) {
        a.require_same_order(b);
        const int n = a.order();
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (detail::coeff_is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Multiplicative inverse: b with a*b = 1 up to the order. Requires an
    // invertible constant term (for integers: +-1).
    Series inverse() const {
        const int n = order();
        const C u = detail::coeff_inverse(coeffs_[0]);
        Series b(n);
        b.coeffs_[0] = u;
        for (int m = 1; m <= n; ++m) {
            C acc(0);
            for (int k = 1; k <= m; ++k) acc += coeffs_[k] * b.coeffs_[m - k];
            b.coeffs_[m] = -(u * acc);
        }
        return b;
    }

    // f(t) -> f(t^s), same truncation order.
    Series substitute_power(int s) const {
        if (s <= 0) throw std::invalid_argument("series: substitution power must be positive");
        const int n = order();
        Series r(n);
        for (int i = 0; static_cast<long>(i) * s <= n; ++i)
            r.coeffs_[static_cast<size_t>(i) * s] = coeffs_[i];
        return r;
    }

    Series pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Series base = *this;
        Series r = one(order());
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series: order must be nonnegative");
        return order;
    }
    void require_same_order(const Series& o) const {
        if (order() != o.order())
            throw std::invalid_argument("series: order mismatch (" +
                                        std::to_string(order()) + " vs " +
                                        std::to_string(o.order()) + ")");
    }

    std::vector<C> coeffs_;
};

using ZSeries = Series<Int>;
using QSeries = Series<Rat>;
using CSeries = Series<Cplx>;

inline QSeries to_rational(const ZSeries& f) {
    std::vector<Rat> v(f.coeffs().begin(), f.coeffs().end());
    return QSeries(f.order(), std::move(v));
}

// Fails if any coefficient has a nontrivial denominator.
inline ZSeries to_integer(const QSeries& f, const char* what = "series") {
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) {
        if (q.get_den() != 1)
            throw std::domain_error(std::string(what) + ": non-integer coefficient " +
                                    q.get_str());
        v.push_back(q.get_num());
    }
    return ZSeries(f.order(), std::move(v));
}

// log of a series with constant term 1 (rational or complex coefficients):
// n*l_n = n*a_n - sum_{k=1}^{n-1} k*l_k*a_{n-k}.
template <class C>
Series<C> log_series(const Series<C>& a) {
    if (!(a[0] == C(1))) throw std::domain_error("log_series: constant term must be 1");
    const int n = a.order();
    Series<C> l(n);
    for (int m = 1; m <= n; ++m) {
        C acc = a[m] * C(m);
        for (int k = 1; k < m; ++k) acc -= l[k] * C(k) * a[m - k];
        l.at(m) = acc / C(m);
    }
    return l;
}

// exp of a series with zero constant term: n*b_n = sum_{k=1}^{n} k*a_k*b_{n-k}.
template <class C>
Series<C> exp_series(const Series<C>& a) {
    if (!detail::coeff_is_zero(a[0]))
        throw std::domain_error("exp_series: constant term must be 0");
    const int n = a.order();
    Series<C> b = Series<C>::one(n);
    for (int m = 1; m <= n; ++m) {
        C acc(0);
        for (int k = 1; k <= m; ++k) acc += a[k] * C(k) * b[m - k];
        b.at(m) = acc / C(m);
    }
    return b;
}

// Hilbert series of Sym of a graded super-space with signed dimension
// series f (f(0)=0): prod_{r>=1} (1-t^r)^(-f_r). Negative f_r (odd
// components) contribute positive powers of (1-t^r).
inline ZSeries sym_exp(const ZSeries& f) {
    if (f[0] != 0) throw std::domain_error("sym_exp: constant term must be 0");
    const int n = f.order();
    ZSeries r = ZSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        if (f[k] == 0) continue;
        if (!f[k].fits_slong_p())
            throw std::domain_error("sym_exp: exponent at t^" + std::to_string(k) +
                                    " does not fit a machine word");
        r *= ZSeries::one_minus_tk(n, k).pow(-f[k].get_si());
    }
    return r;
}

namespace detail {

inline std::vector<int> mobius_table(int n) {
    std::vector<int> mu(static_cast<size_t>(n) + 1, 1);
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    std::vector<int> primes;
    for (int i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int p : primes) {
            long ip = static_cast<long>(i) * p;
            if (ip > n) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    return mu;
}

} // namespace detail

// Inverse of sym_exp: the unique integer series f with sym_exp(f) = H.
// c_m = m*[t^m] log H; f_m = (1/m) sum_{d|m} mu(m/d) c_d. Throws if the
// result is not integral (H is then not a plethystic exponential of an
// integer series).
inline ZSeries sym_log(const ZSeries& h) {
    if (h[0] != 1) throw std::domain_error("sym_log: constant term must be 1");
    const int n = h.order();
    QSeries l = log_series(to_rational(h));
    std::vector<int> mu = detail::mobius_table(n);
    QSeries f(n);
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (int d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            if (mu[m / d] == 0) continue;
            acc += Rat(mu[m / d]) * Rat(d) * l[d];
        }
        f.at(m) = acc / Rat(m);
    }
    return to_integer(f, "sym_log: input is not a plethystic exponential of an integer series");
}

} // namespace ncalg
