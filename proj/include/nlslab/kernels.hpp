// Data-parallel inner loops: OpenMP versions plus serial references.
//
// Every kernel has a *_serial reference used in tests; the unsuffixed entry
// dispatches on the process-wide parallel switch.  Reductions accumulate
// fixed-size chunk partials and combine them in chunk order, so results do
// not depend on the number of threads.
#pragma once

#include <complex>
#include <cstddef>

#include "nlslab/grid.hpp"

namespace nlslab::kern {

// Process-wide switch for the OpenMP paths (default on).
bool parallel_enabled();
void set_parallel(bool on);

// u[i] *= exp(i * dt * |u[i]|^expo)   (exact nonlinear sub-flow phase)
void nonlinear_phase_serial(cplx* u, std::size_t n, double dt, double expo);
void nonlinear_phase_omp(cplx* u, std::size_t n, double dt, double expo);
void nonlinear_phase(cplx* u, std::size_t n, double dt, double expo);

// u[i] *= exp(-i * k2[i] * dt)        (free-propagator multiplier)
void linear_phase_serial(cplx* u, const double* k2, std::size_t n, double dt);
void linear_phase_omp(cplx* u, const double* k2, std::size_t n, double dt);
void linear_phase(cplx* u, const double* k2, std::size_t n, double dt);

// u[i] *= m[i]                        (real multiplier, e.g. dealias mask)
void real_multiplier_serial(cplx* u, const double* m, std::size_t n);
void real_multiplier_omp(cplx* u, const double* m, std::size_t n);
void real_multiplier(cplx* u, const double* m, std::size_t n);

// sum |u[i]|^2
double sum_abs2_serial(const cplx* u, std::size_t n);
double sum_abs2_omp(const cplx* u, std::size_t n);
double sum_abs2(const cplx* u, std::size_t n);

// sum w[i] * |u[i]|^2
double sum_abs2_weighted_serial(const cplx* u, const double* w, std::size_t n);
double sum_abs2_weighted_omp(const cplx* u, const double* w, std::size_t n);
double sum_abs2_weighted(const cplx* u, const double* w, std::size_t n);

// sum |u[i]|^p
double sum_abs_pow_serial(const cplx* u, std::size_t n, double p);
double sum_abs_pow_omp(const cplx* u, std::size_t n, double p);
double sum_abs_pow(const cplx* u, std::size_t n, double p);

// max |u[i]|
double sup_abs_serial(const cplx* u, std::size_t n);
double sup_abs_omp(const cplx* u, std::size_t n);
double sup_abs(const cplx* u, std::size_t n);

// sum conj(a[i]) * b[i]
cplx inner_serial(const cplx* a, const cplx* b, std::size_t n);
cplx inner_omp(const cplx* a, const cplx* b, std::size_t n);
cplx inner(const cplx* a, const cplx* b, std::size_t n);

} // namespace nlslab::kern
