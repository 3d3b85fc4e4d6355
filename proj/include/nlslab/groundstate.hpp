// Ground state Q of  Q'' + (d-1)/r Q' - Q + Q^{1+4/d} = 0  by shooting, plus
// the Lambda operator and the conserved functionals used by every module.
#pragma once

#include <string>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

struct GroundStateProfile {
    int dimension = 1;
    double h = 0.0;   // radial grid spacing, r_i = i*h
    double r_max = 0.0;
    std::vector<double> q;   // Q(r_i)
    std::vector<double> qp;  // Q'(r_i)
    double q0 = 0.0;         // shooting value Q(0)
    double decay_rate = 0.0; // fitted exponential rate on the last decade
    double decay_amp = 0.0;  // Q ~ decay_amp * e^{-decay_rate r} * r^{-(d-1)/2}

    double r(std::size_t i) const { return i * h; }
    std::size_t size() const { return q.size(); }

    // Cubic Hermite evaluation (exact derivative samples); exponential
    // continuation beyond r_max.
    double eval(double r) const;
    double eval_deriv(double r) const;
    double eval_second(double r) const; // from the ODE itself

    double mass() const;
    double energy() const;
    double h1_semi() const; // int |Q'|^2
};

struct GroundStateReport {
    bool positive_decreasing = false;
    double max_ode_residual = 0.0;
    double far_field_value = 0.0;
    double energy_abs = 0.0;
    double q_lambda_q = 0.0; // (Q, Lambda Q)
    bool pass(double tol) const;
};

// Shooting with overshoot/undershoot bisection on Q(0); RK4 with a series
// start at the origin; far tail stitched to the exact linear-decay branch.
GroundStateProfile solve_ground_state(int dimension, double r_max, double tol, double grid_h = 1e-3);

GroundStateReport validate_ground_state(const GroundStateProfile& g, double tol);

// Closed form for d=1:  Q(x) = 3^{1/4} cosh(2x)^{-1/2}.
double ground_state_closed_form_1d(double x);

// Lambda f = (d/2) f + y . grad f, spectral gradient on the periodic grid.
Field apply_lambda(const Field& f);

// Radial version on profile-like samples: (d/2) f + r f'.
std::vector<double> apply_lambda_radial(const std::vector<double>& f, const std::vector<double>& fp, double h,
                                        int dim);

struct Functionals {
    double mass = 0.0;
    double energy = 0.0;
    double momentum[2] = {0.0, 0.0};
    double grad_sq = 0.0;     // int |grad u|^2
    double exp_weighted = 0.0; // int |u|^2 e^{-|y|}
    double sup = 0.0;
    bool finite = true;
};

// Conserved quantities of the field (periodic grid, spectral derivatives).
Functionals functionals(const Field& u);

} // namespace nlslab
