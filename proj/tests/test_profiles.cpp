#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nlslab/profiles.hpp"
#include "nlslab/quad.hpp"

using namespace nlslab;

namespace {

const GroundStateProfile& ground1d() {
    static GroundStateProfile g = solve_ground_state(1, 20.0, 1e-7);
    return g;
}

} // namespace

TEST_CASE("geometry relations are exact") {
    ProfileGeometry g = ProfileGeometry::make(0.2, 0.01, 0.1);
    CHECK(g.R_b == doctest::Approx(2.0 / 0.2 * std::sqrt(0.99)).epsilon(1e-15));
    CHECK(g.R_b_minus == doctest::Approx(std::sqrt(0.99) * g.R_b).epsilon(1e-15));
    CHECK(g.A_b == doctest::Approx(std::exp(0.1 * M_PI / 0.2)).epsilon(1e-15));
}

TEST_CASE("b=0 profile degenerates to the ground state") {
    ModifiedProfile mp = solve_modified_profile(0.0, 0.01, ground1d());
    CHECK(mp.p0 == ground1d().q0);
    CHECK(mp.mass_excess == 0.0);
    for (std::size_t i = 0; i < mp.size(); i += 997) {
        CHECK(mp.val[i].imag() == 0.0);
        CHECK(mp.cutoff[i] == 1.0);
    }
    // Psi_0 vanishes to discretization tolerance
    compute_psi_b(mp);
    double sup = 0.0;
    for (const auto& z : mp.psi) sup = std::max(sup, std::abs(z));
    CHECK(sup < 1e-7);
}

TEST_CASE("b=0.2 shooting value matches a 4x-resolution oracle") {
    ModifiedProfile mp = solve_modified_profile(0.2, 0.01, ground1d());
    ModifiedProfile fine = solve_modified_profile(0.2, 0.01, ground1d(), 0.1, mp.h / 4.0);
    CHECK(std::fabs(mp.p0 - fine.p0) < 1e-8);
    CHECK(mp.p0 > ground1d().q0 - 0.2 * ground1d().q0);
    CHECK(mp.p0 < ground1d().q0 + 0.2 * ground1d().q0);
}

TEST_CASE("phase-reduction identity: Q_b solves the complex system") {
    // independent check of the conjugation algebra via finite differences on
    // Q_b = P e^{-i b r^2/4} without the cutoff
    const double b = 0.2;
    ModifiedProfile mp = solve_modified_profile(b, 0.01, ground1d());
    const int n = static_cast<int>(mp.size());
    const double h = mp.h;
    std::vector<cplx> q(n);
    for (int i = 0; i < n; ++i) q[i] = mp.p[i] * std::polar(1.0, -0.25 * b * i * h * i * h);
    auto val = [&](int i) { return q[std::abs(i)]; };
    double sup = 0.0;
    for (int i = 0; i + 2 < n; ++i) {
        const double r = i * h;
        if (r > mp.geom.R_b_minus) break;
        const cplx qpp = (-val(i - 2) + 16.0 * val(i - 1) - 30.0 * val(i) + 16.0 * val(i + 1) - val(i + 2)) /
                         (12.0 * h * h);
        const cplx qp = (val(i - 2) - 8.0 * val(i - 1) + 8.0 * val(i + 1) - val(i + 2)) / (12.0 * h);
        const cplx lap = (i == 0) ? cplx(qpp) : qpp; // d=1
        const cplx lam = 0.5 * val(i) + r * qp;
        const cplx res = lap - val(i) + cplx(0.0, b) * lam + val(i) * std::pow(std::norm(val(i)), 2.0);
        sup = std::max(sup, std::abs(res));
    }
    CHECK(sup < 1e-6);
}

TEST_CASE("Psi_b is supported in the cutoff annulus") {
    ModifiedProfile mp = solve_modified_profile(0.2, 0.01, ground1d());
    compute_psi_b(mp);
    const double Rbm = mp.geom.R_b_minus;
    double sup_inner = 0.0, sup_annulus = 0.0, l2_inner = 0.0, l2_total = 0.0;
    for (std::size_t i = 0; i < mp.size(); ++i) {
        const double r = mp.r(i);
        const double a = std::abs(mp.psi[i]);
        if (r <= Rbm) {
            sup_inner = std::max(sup_inner, a);
            l2_inner += a * a;
        } else {
            sup_annulus = std::max(sup_annulus, a);
        }
        l2_total += a * a;
    }
    CHECK(sup_inner < 1e-6);
    CHECK(sup_annulus > 0.0);
    CHECK(std::sqrt(l2_inner / l2_total) < 1e-4);
}

TEST_CASE("Psi_b annulus values are discretization-converged") {
    ModifiedProfile a = solve_modified_profile(0.2, 0.01, ground1d());
    ModifiedProfile b = solve_modified_profile(0.2, 0.01, ground1d(), 0.1, a.h / 2.0);
    compute_psi_b(a);
    compute_psi_b(b);
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) ref = std::max(ref, std::abs(a.psi[i]));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = a.r(i);
        if (r <= a.geom.R_b_minus || r >= a.geom.R_b) continue;
        if (std::abs(a.psi[i]) < 0.05 * ref) continue;
        const std::size_t j = static_cast<std::size_t>(std::llround(r / b.h));
        worst = std::max(worst, std::abs(a.psi[i] - b.psi[j]) / std::abs(a.psi[i]));
    }
    CHECK(worst < 0.01);
}

TEST_CASE("mass excess is positive and scales like b^2") {
    const std::vector<double> bs = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
    ProfileFamilyReport rep = profile_family_report(bs, ground1d());
    for (const auto& e : rep.entries) CHECK(e.mass_excess > 0.0);
    CHECK(rep.mass_excess_slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("gamma_b proxy and sandwich") {
    GammaB g = gamma_b(M_PI / 10.0);
    CHECK(g.proxy == doctest::Approx(std::exp(-10.0)).epsilon(1e-12)); // ~ 4.54e-5
    CHECK(g.lower <= g.proxy);
    CHECK(g.proxy <= g.upper);
    // monotone in b
    CHECK(gamma_b(0.1).proxy < gamma_b(0.2).proxy);
    // log-space survives where linear space underflows 32-bit
    GammaB s = gamma_b(0.05);
    CHECK(s.log_proxy == doctest::Approx(-M_PI / 0.05).epsilon(1e-14)); // ~ -62.83
    CHECK(std::exp(s.log_proxy) == doctest::Approx(s.proxy).epsilon(1e-12));
}

TEST_CASE("radiation tail solves its defining equation") {
    const double b = 0.25;
    ModifiedProfile mp = solve_modified_profile(b, 0.01, ground1d());
    RadiationTail rt = solve_radiation(b, mp);
    CHECK(rt.residual_rel < 1e-6);
    CHECK(std::isfinite(rt.grad_sq));
    CHECK(rt.grad_sq > 0.0);
    // zeta~ vanishes beyond 2A by construction of chi_A
    const double A = mp.geom.A_b;
    for (std::size_t i = 0; i < rt.zeta_cut.size(); ++i)
        if (i * rt.h >= 2.0 * A) CHECK(std::abs(rt.zeta_cut[i]) == 0.0);
    // b = 0: zero forcing => zero solution
    ModifiedProfile mz = solve_modified_profile(0.0, 0.01, ground1d());
    RadiationTail rz = solve_radiation(0.0, mz);
    for (const auto& z : rz.zeta) CHECK(std::abs(z) == 0.0);
}

TEST_CASE("profile family report: convergence and uniform bounds") {
    ProfileFamilyReport rep = profile_family_report({0.3, 0.2, 0.1, 0.05}, ground1d());
    // theta(2) = pi/2 exactly from the quarter-circle integral
    CHECK(profile_theta(2.0) == doctest::Approx(0.5 * M_PI).epsilon(1e-14));
    CHECK(rep.weighted_distance_decreasing);
    for (const auto& e : rep.entries) CHECK(e.h_norm[3] < 2.0 * rep.ground_h3);
}
