#include "nlslab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

namespace nlslab::kern {

namespace {
std::atomic<bool> g_parallel{true};
constexpr std::size_t kChunk = 4096; // reduction granularity, fixed for determinism
} // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

void nonlinear_phase_serial(cplx* u, std::size_t n, double dt, double expo) {
    for (std::size_t i = 0; i < n; ++i) {
        const double a2 = std::norm(u[i]);
        if (a2 == 0.0) continue;
        const double phase = dt * std::pow(a2, 0.5 * expo);
        u[i] *= cplx(std::cos(phase), std::sin(phase));
    }
}

void nonlinear_phase_omp(cplx* u, std::size_t n, double dt, double expo) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const double a2 = std::norm(u[i]);
        if (a2 == 0.0) continue;
        const double phase = dt * std::pow(a2, 0.5 * expo);
        u[i] *= cplx(std::cos(phase), std::sin(phase));
    }
}

void nonlinear_phase(cplx* u, std::size_t n, double dt, double expo) {
    parallel_enabled() ? nonlinear_phase_omp(u, n, dt, expo) : nonlinear_phase_serial(u, n, dt, expo);
}

void linear_phase_serial(cplx* u, const double* k2, std::size_t n, double dt) {
    for (std::size_t i = 0; i < n; ++i) {
        const double phase = -k2[i] * dt;
        u[i] *= cplx(std::cos(phase), std::sin(phase));
    }
}

void linear_phase_omp(cplx* u, const double* k2, std::size_t n, double dt) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const double phase = -k2[i] * dt;
        u[i] *= cplx(std::cos(phase), std::sin(phase));
    }
}

void linear_phase(cplx* u, const double* k2, std::size_t n, double dt) {
    parallel_enabled() ? linear_phase_omp(u, k2, n, dt) : linear_phase_serial(u, k2, n, dt);
}

void real_multiplier_serial(cplx* u, const double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) u[i] *= m[i];
}

void real_multiplier_omp(cplx* u, const double* m, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) u[i] *= m[i];
}

void real_multiplier(cplx* u, const double* m, std::size_t n) {
    parallel_enabled() ? real_multiplier_omp(u, m, n) : real_multiplier_serial(u, m, n);
}

namespace {

// Chunked reduction: partials are combined in chunk order so the result is
// independent of thread count.
template <typename F>
double reduce_chunked(std::size_t n, bool parallel, F&& chunk_sum) {
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    if (nchunks <= 1) return chunk_sum(0, n);
    std::vector<double> partial(nchunks);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
            const std::size_t lo = c * kChunk;
            partial[c] = chunk_sum(lo, std::min(lo + kChunk, n));
        }
    } else {
        for (std::size_t c = 0; c < nchunks; ++c) {
            const std::size_t lo = c * kChunk;
            partial[c] = chunk_sum(lo, std::min(lo + kChunk, n));
        }
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

} // namespace

double sum_abs2_serial(const cplx* u, std::size_t n) {
    return reduce_chunked(n, false, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::norm(u[i]);
        return s;
    });
}

double sum_abs2_omp(const cplx* u, std::size_t n) {
    return reduce_chunked(n, true, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::norm(u[i]);
        return s;
    });
}

double sum_abs2(const cplx* u, std::size_t n) {
    return parallel_enabled() ? sum_abs2_omp(u, n) : sum_abs2_serial(u, n);
}

double sum_abs2_weighted_serial(const cplx* u, const double* w, std::size_t n) {
    return reduce_chunked(n, false, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += w[i] * std::norm(u[i]);
        return s;
    });
}

double sum_abs2_weighted_omp(const cplx* u, const double* w, std::size_t n) {
    return reduce_chunked(n, true, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += w[i] * std::norm(u[i]);
        return s;
    });
}

double sum_abs2_weighted(const cplx* u, const double* w, std::size_t n) {
    return parallel_enabled() ? sum_abs2_weighted_omp(u, w, n) : sum_abs2_weighted_serial(u, w, n);
}

double sum_abs_pow_serial(const cplx* u, std::size_t n, double p) {
    return reduce_chunked(n, false, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::pow(std::norm(u[i]), 0.5 * p);
        return s;
    });
}

double sum_abs_pow_omp(const cplx* u, std::size_t n, double p) {
    return reduce_chunked(n, true, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::pow(std::norm(u[i]), 0.5 * p);
        return s;
    });
}

double sum_abs_pow(const cplx* u, std::size_t n, double p) {
    return parallel_enabled() ? sum_abs_pow_omp(u, n, p) : sum_abs_pow_serial(u, n, p);
}

double sup_abs_serial(const cplx* u, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::norm(u[i]));
    return std::sqrt(m);
}

double sup_abs_omp(const cplx* u, std::size_t n) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (long long i = 0; i < static_cast<long long>(n); ++i) m = std::max(m, std::norm(u[i]));
    return std::sqrt(m);
}

double sup_abs(const cplx* u, std::size_t n) {
    return parallel_enabled() ? sup_abs_omp(u, n) : sup_abs_serial(u, n);
}

namespace {

template <typename F>
cplx reduce_chunked_c(std::size_t n, bool parallel, F&& chunk_sum) {
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    if (nchunks <= 1) return chunk_sum(0, n);
    std::vector<cplx> partial(nchunks);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
            const std::size_t lo = c * kChunk;
            partial[c] = chunk_sum(lo, std::min(lo + kChunk, n));
        }
    } else {
        for (std::size_t c = 0; c < nchunks; ++c) {
            const std::size_t lo = c * kChunk;
            partial[c] = chunk_sum(lo, std::min(lo + kChunk, n));
        }
    }
    cplx s(0.0, 0.0);
    for (const cplx& p : partial) s += p;
    return s;
}

} // namespace

cplx inner_serial(const cplx* a, const cplx* b, std::size_t n) {
    return reduce_chunked_c(n, false, [&](std::size_t lo, std::size_t hi) {
        cplx s(0.0, 0.0);
        for (std::size_t i = lo; i < hi; ++i) s += std::conj(a[i]) * b[i];
        return s;
    });
}

cplx inner_omp(const cplx* a, const cplx* b, std::size_t n) {
    return reduce_chunked_c(n, true, [&](std::size_t lo, std::size_t hi) {
        cplx s(0.0, 0.0);
        for (std::size_t i = lo; i < hi; ++i) s += std::conj(a[i]) * b[i];
        return s;
    });
}

cplx inner(const cplx* a, const cplx* b, std::size_t n) {
    return parallel_enabled() ? inner_omp(a, b, n) : inner_serial(a, b, n);
}

} // namespace nlslab::kern
