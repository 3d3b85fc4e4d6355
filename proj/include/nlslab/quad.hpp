// Quadrature helpers: radial integrals over R^d and periodic box sums.
#pragma once

#include <functional>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

// Surface factor for radial integration: int_{R^d} f = omega_d * int_0^inf f(r) r^{d-1} dr,
// with the d=1 convention of an even extension to the whole line.
inline double radial_weight(int dim) { return dim == 1 ? 2.0 : 2.0 * M_PI; }

// Composite Simpson on a uniform grid (trapezoid correction for the last
// interval when the point count is even).
double simpson_uniform(const std::vector<double>& f, double h);

// int_{R^d} f(|y|) dy for samples on the uniform radial grid r_i = i*h.
double radial_integral(const std::vector<double>& f, double h, int dim);

// Periodic box integral: plain sum times the cell volume (spectrally exact).
double box_integral_abs2(const Field& f);
cplx box_inner(const Field& a, const Field& b); // int conj(a) b

} // namespace nlslab
