#pragma once

// Monte Carlo side: Haar unitary sampling, trace-moment estimates, and the
// numeric truncated-series matrix integral whose coefficients stabilize to
// the zeta product. Reproducible by contract: a master seed plus
// per-sample substreams, with a fixed-order pairwise reduction, so results
// do not depend on the thread count.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "ncalg/datum.hpp"
#include "ncalg/series.hpp"

namespace ncalg {

using CMat = Eigen::MatrixXcd;

inline int worker_count() {
    if (const char* env = std::getenv("NCALG_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// diagonal phases of R divided out.
inline CMat haar_unitary(int d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("haar_unitary: d >= 1 required");
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = Cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMat> qr(a);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        Cplx rjj = r(j, j);
        double m = std::abs(rjj);
        q.col(j) *= (m > 0) ? (rjj / m) : Cplx(1.0, 0.0);
    }
    return q;
}

// Tr(u^k) for k = 0..max_k via eigenvalues (one decomposition per matrix).
inline std::vector<Cplx> trace_powers(const CMat& u, int max_k) {
    Eigen::ComplexEigenSolver<CMat> es(u, /*computeEigenvectors=*/false);
    const auto& ev = es.eigenvalues();
    std::vector<Cplx> tr(static_cast<size_t>(max_k) + 1, Cplx(0.0, 0.0));
    std::vector<Cplx> pow(static_cast<size_t>(ev.size()), Cplx(1.0, 0.0));
    tr[0] = Cplx(static_cast<double>(ev.size()), 0.0);
    for (int k = 1; k <= max_k; ++k) {
        Cplx s(0.0, 0.0);
        for (long i = 0; i < ev.size(); ++i) {
            pow[static_cast<size_t>(i)] *= ev(i);
            s += pow[static_cast<size_t>(i)];
        }
        tr[static_cast<size_t>(k)] = s;
    }
    return tr;
}

struct MCEstimate {
    std::vector<double> mean;
    std::vector<double> stderr_;
    double imag_max = 0.0;  // largest imaginary part of any coefficient mean
    long samples = 0;
    unsigned long long seed = 0;
    std::vector<int> dims;
};

namespace detail {

inline std::mt19937_64 substream(unsigned long long seed, long index) {
    std::seed_seq sq{static_cast<unsigned long long>(0x9e3779b97f4a7c15ull), seed,
                     static_cast<unsigned long long>(index)};
    return std::mt19937_64(sq);
}

// Fixed-order pairwise sum (stable against thread-count changes and better
// conditioned than a running sum).
inline Cplx pairwise_sum(const std::vector<Cplx>& v, size_t lo, size_t hi) {
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

template <class Fn>
void run_samples(long samples, Fn&& per_sample) {
    const int workers = worker_count();
    if (workers <= 1 || samples < 2 * workers) {
        for (long i = 0; i < samples; ++i) per_sample(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (long i = w; i < samples; i += workers) per_sample(i);
        });
    for (auto& t : pool) t.join();
}

// Means and standard errors over per-sample coefficient rows.
inline MCEstimate reduce(const std::vector<std::vector<Cplx>>& rows) {
    const long samples = static_cast<long>(rows.size());
    const size_t width = rows.front().size();
    MCEstimate est;
    est.samples = samples;
    std::vector<Cplx> column(static_cast<size_t>(samples));
    for (size_t c = 0; c < width; ++c) {
        for (long i = 0; i < samples; ++i) column[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)][c];
        Cplx mean = pairwise_sum(column, 0, column.size()) / Cplx(static_cast<double>(samples), 0.0);
        for (long i = 0; i < samples; ++i) {
            Cplx d = rows[static_cast<size_t>(i)][c] - mean;
            column[static_cast<size_t>(i)] = Cplx(std::norm(d), 0.0);
        }
        double var = (samples > 1)
                         ? pairwise_sum(column, 0, column.size()).real() / static_cast<double>(samples - 1)
                         : 0.0;
        est.mean.push_back(mean.real());
        est.stderr_.push_back(std::sqrt(var / static_cast<double>(samples)));
        est.imag_max = std::max(est.imag_max, std::abs(mean.imag()));
    }
    return est;
}

} // namespace detail

struct MomentFactor {
    int s = 1;   // trace power
    int m = 0;   // exponent of Tr(u^s)
    int n = 0;   // exponent of conj(Tr(u^s))
};

// MC estimate of E[prod_s (Tr u^s)^{m_s} conj(Tr u^s)^{n_s}] over Haar
// measure on U(d); the exact value is prod_s s^{m_s} m_s! delta_{m_s,n_s}
// once d is large enough.
inline MCEstimate ds_moment(int d, const std::vector<MomentFactor>& factors, long samples,
                            unsigned long long seed) {
    if (samples < 1) throw std::invalid_argument("ds_moment: samples >= 1 required");
    int max_s = 1;
    for (const MomentFactor& f : factors) {
        if (f.s < 1 || f.m < 0 || f.n < 0) throw std::invalid_argument("ds_moment: bad factor");
        max_s = std::max(max_s, f.s);
    }
    std::vector<std::vector<Cplx>> rows(static_cast<size_t>(samples));
    detail::run_samples(samples, [&](long i) {
        std::mt19937_64 rng = detail::substream(seed, i);
        std::vector<Cplx> tr = trace_powers(haar_unitary(d, rng), max_s);
        Cplx v(1.0, 0.0);
        for (const MomentFactor& f : factors) {
            for (int k = 0; k < f.m; ++k) v *= tr[static_cast<size_t>(f.s)];
            for (int k = 0; k < f.n; ++k) v *= std::conj(tr[static_cast<size_t>(f.s)]);
        }
        rows[static_cast<size_t>(i)] = {v};
    });
    MCEstimate est = detail::reduce(rows);
    est.seed = seed;
    est.dims = {d};
    return est;
}

// The integrand of the matrix integral at a fixed tuple g of unitaries,
// as a truncated complex series: prod over (i, j, r) with
// c^r_ij = dim V_ij[r] - dim L_ij[r] of det(1 - t^r g_i^* (x) g_j)^{-c^r_ij},
// evaluated through the log: log det(1 - t^r M)^{-1} =
// sum_k Tr(M^k) t^{rk} / k with Tr((g_i^* (x) g_j)^k) =
// conj(Tr g_i^k) Tr(g_j^k). The big tensor operator is never formed.
inline CSeries integrand_series(const VLDatum& datum, const std::vector<CMat>& g, int order) {
    datum.validate();
    if (static_cast<int>(g.size()) != datum.num_vertices)
        throw std::invalid_argument("integrand_series: one unitary per vertex required");
    std::vector<std::vector<Cplx>> tr;
    for (const CMat& u : g) tr.push_back(trace_powers(u, order));
    CSeries log(order);
    for (int i = 0; i < datum.num_vertices; ++i)
        for (int j = 0; j < datum.num_vertices; ++j)
            for (int r = 1; r <= std::min(order, datum.order); ++r) {
                long c = datum.dimsV[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(r)] -
                         datum.dimsL[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(r)];
                if (c == 0) continue;
                for (int k = 1; r * k <= order; ++k)
                    log.at(r * k) += Cplx(static_cast<double>(c) / k, 0.0) *
                                     std::conj(tr[static_cast<size_t>(i)][static_cast<size_t>(k)]) *
                                     tr[static_cast<size_t>(j)][static_cast<size_t>(k)];
            }
    return exp_series(log);
}

// Coefficientwise MC average of integrand_series over Haar tuples.
inline MCEstimate mc_matrix_integral(const VLDatum& datum, const std::vector<int>& dims,
                                     int order, long samples, unsigned long long seed) {
    datum.validate();
    if (static_cast<int>(dims.size()) != datum.num_vertices)
        throw std::invalid_argument("mc_matrix_integral: one dimension per vertex required");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("mc_matrix_integral: dimensions must be >= 1");
    if (samples < 1) throw std::invalid_argument("mc_matrix_integral: samples >= 1 required");
    std::vector<std::vector<Cplx>> rows(static_cast<size_t>(samples));
    detail::run_samples(samples, [&](long i) {
        std::mt19937_64 rng = detail::substream(seed, i);
        std::vector<CMat> g;
        for (int d : dims) g.push_back(haar_unitary(d, rng));
        rows[static_cast<size_t>(i)] = integrand_series(datum, g, order).coeffs();
    });
    MCEstimate est = detail::reduce(rows);
    est.seed = seed;
    est.dims = dims;
    return est;
}

} // namespace ncalg
