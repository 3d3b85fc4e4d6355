// Modified blow-up profiles Q~_b = Q_b phi_b, their defect Psi_b, the Gamma_b
// scale and the linear radiation tail zeta_b.
#pragma once

#include <vector>

#include "nlslab/groundstate.hpp"

namespace nlslab {

struct ProfileGeometry {
    double b = 0.0;
    double eta = 0.01;
    double R_b = 0.0;       // (2/|b|) sqrt(1-eta)
    double R_b_minus = 0.0; // sqrt(1-eta) R_b
    double A_b = 0.0;       // e^{a pi/|b|}
    double a_exponent = 0.1;

    static ProfileGeometry make(double b, double eta = 0.01, double a_exponent = 0.1);
};

struct ModifiedProfile {
    ProfileGeometry geom;
    int dimension = 1;
    double h = 0.0; // radial spacing, support [0, r(N)]
    std::vector<double> p, pp;      // phase-reduced P_b and P_b' (pre-cutoff)
    std::vector<cplx> val, d1, d2;  // Q~_b and its first two radial derivatives
    std::vector<double> cutoff;     // phi_b samples
    std::vector<cplx> psi;          // Psi_b (filled by compute_psi_b)
    double p0 = 0.0;                // P(0)
    double mass_excess = 0.0;       // ||Q~_b||_2^2 - ||Q||_2^2
    bool polished = false;          // banded-Newton tail relaxation applied

    double r(std::size_t i) const { return i * h; }
    std::size_t size() const { return val.size(); }
    double support_radius() const { return (size() - 1) * h; }

    cplx eval(double r) const;
    cplx eval_d1(double r) const;
    cplx eval_d2(double r) const;

    double mass() const;
    double weighted_y2_mass() const; // ||y Q~_b||_2^2
};

// Phase reduction P = Q_b e^{i b r^2/4}: shoot on P(0) in a window around
// Q(0) for P(R_b) = 0 with P > 0 inside; for small b the tail is polished by
// banded Newton relaxation of the same two-point problem.
ModifiedProfile solve_modified_profile(double b, double eta, const GroundStateProfile& ground,
                                       double a_exponent = 0.1, double grid_h = 0.0);

// Psi_b = -Lap Q~ + Q~ - i b Lambda Q~ - Q~ |Q~|^{4/d}, 4th-order differences
// with even folding at the origin; stored into profile.psi and returned.
std::vector<cplx> compute_psi_b(ModifiedProfile& profile);

struct GammaB {
    double proxy = 0.0;     // e^{-pi/|b|}
    double log_proxy = 0.0; // -pi/|b|
    double lower = 0.0, upper = 0.0;
    double log_lower = 0.0, log_upper = 0.0;
};

GammaB gamma_b(double b, double c_eta = 0.2);

struct RadiationTail {
    double h = 0.0; // radial spacing, grid [0, r_out]
    std::vector<cplx> zeta;
    std::vector<cplx> zeta_cut; // zeta * chi_A, supported in |y| <= 2A
    double residual_rel = 0.0;  // ||Lap z - z + ib Lambda z - Psi||_inf / ||Psi||_inf
    double grad_sq = 0.0;       // int |grad zeta|^2 on the grid
    double f1_tilde = 0.0;      // b/4 ||yQ~||^2 + 1/2 Im int y grad zeta~ conj(zeta~)
};

// Two-point boundary-value solve of  Lap z - z + i b Lambda z = Psi_b with a
// decaying far-field Robin condition; banded LU.
RadiationTail solve_radiation(double b, const ModifiedProfile& profile, double a_exponent = 0.1);

struct ProfileFamilyEntry {
    double b = 0.0;
    double mass_excess = 0.0;
    double log_weighted_distance = 0.0; // log of sup_y e^{(1-eta) theta(b|y|)/b} |Q~_b - Q|
    double h_norm[4] = {0, 0, 0, 0};    // H^0..H^3 of Q~_b (radial-derivative Sobolev)
};

struct ProfileFamilyReport {
    std::vector<ProfileFamilyEntry> entries;
    double ground_h3 = 0.0;
    double mass_excess_slope = 0.0; // log-log fit of mass excess vs b
    bool weighted_distance_decreasing = false;
};

// theta(r) of the convergence weight; theta(2) = pi/2 exactly.
double profile_theta(double r);

ProfileFamilyReport profile_family_report(const std::vector<double>& b_list, const GroundStateProfile& ground,
                                          double eta = 0.01);

} // namespace nlslab
