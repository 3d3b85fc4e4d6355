#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nlslab/fft.hpp"
#include "nlslab/groundstate.hpp"
#include "nlslab/quad.hpp"

using namespace nlslab;

namespace {

// Independent shooting oracle: classic RK4 on the same ODE but with a
// different stepper arrangement (Heun predictor inside, half step size) and
// its own bisection.  Used to freeze Q(0) values.
double oracle_q0(int d, double r_max, double h) {
    const double p = 1.0 + 4.0 / d;
    auto shoot_positive = [&](double q0) {
        // returns true if the trajectory stays positive and turns up (undershoot)
        double a = (q0 - std::pow(q0, p)) / (2.0 * d);
        double q = q0 + a * h * h, qp = 2.0 * a * h;
        for (double r = h; r < r_max; r += h) {
            auto acc = [&](double rr, double qq, double pp) {
                return qq - std::pow(std::fabs(qq), p - 1.0) * qq - (rr > 0 ? (d - 1) / rr * pp : 0.0);
            };
            // midpoint RK2 (independent of the production RK4 path)
            const double k1q = qp, k1p = acc(r, q, qp);
            const double k2q = qp + 0.5 * h * k1p, k2p = acc(r + 0.5 * h, q + 0.5 * h * k1q, qp + 0.5 * h * k1p);
            q += h * k2q;
            qp += h * k2p;
            if (q <= 0.0) return false;
            if (qp > 0.0 && q < 0.5 * q0) return true;
        }
        return q > 0.0;
    };
    double lo = 1.05, hi = 4.0;
    REQUIRE(shoot_positive(lo));
    REQUIRE(!shoot_positive(hi));
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (shoot_positive(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("d=1 solver matches closed form to 1e-8 on |x|<=10") {
    GroundStateProfile g = solve_ground_state(1, 20.0, 1e-7);
    CHECK(std::fabs(g.q0 - std::pow(3.0, 0.25)) < 1e-9); // Q(0) = 3^{1/4} ~ 1.316074
    double sup = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.01)
        sup = std::max(sup, std::fabs(g.eval(x) - ground_state_closed_form_1d(x)));
    CHECK(sup < 1e-8);
    // radial symmetry of the even extension
    CHECK(g.eval(-3.7) == g.eval(3.7));
}

TEST_CASE("ground state invariants") {
    GroundStateProfile g = solve_ground_state(1, 20.0, 1e-7);
    GroundStateReport rep = validate_ground_state(g, 1e-7);
    CHECK(rep.positive_decreasing);
    CHECK(rep.max_ode_residual < 1e-7);
    CHECK(rep.far_field_value < 1e-8);
    CHECK(rep.energy_abs < 1e-6);
    CHECK(std::fabs(rep.q_lambda_q) < 1e-8);

    // mass against the quadrature oracle of the closed form: sqrt(3)*pi/2
    CHECK(g.mass() == doctest::Approx(std::sqrt(3.0) * M_PI / 2.0).epsilon(1e-8));
}

TEST_CASE("d=2 solver matches independent bisection oracle") {
    GroundStateProfile g = solve_ground_state(2, 20.0, 1e-6, 2e-3);
    const double q0_oracle = oracle_q0(2, 20.0, 5e-4);
    // frozen from the oracle: Q(0) ~ 2.2062 for the 2d cubic ground state
    CHECK(std::fabs(g.q0 - q0_oracle) < 5e-6);
    GroundStateReport rep = validate_ground_state(g, 1e-6);
    CHECK(rep.positive_decreasing);
    CHECK(rep.far_field_value < 1e-8);
    CHECK(rep.energy_abs < 1e-6);
    CHECK(std::fabs(rep.q_lambda_q) < 1e-8);
}

TEST_CASE("grid convergence: halving dx changes Q(0) by < 10x tol") {
    GroundStateProfile a = solve_ground_state(1, 20.0, 1e-7, 2e-3);
    GroundStateProfile b = solve_ground_state(1, 20.0, 1e-7, 1e-3);
    CHECK(std::fabs(a.q0 - b.q0) < 1e-6);
}

TEST_CASE("apply_lambda on fields") {
    Grid g = Grid::make2d(128, 128, 20.0, 20.0);
    Field f(g);
    for (int iy = 0; iy < g.n[1]; ++iy)
        for (int ix = 0; ix < g.n[0]; ++ix) {
            const double x = g.coord(0, ix), y = g.coord(1, iy);
            f.at(ix, iy) = std::exp(-(x * x + y * y));
        }
    Field lam = apply_lambda(f);
    // Lambda e^{-|y|^2} = (1 - 2|y|^2) e^{-|y|^2} in d=2
    double sup = 0.0;
    for (int iy = 0; iy < g.n[1]; ++iy)
        for (int ix = 0; ix < g.n[0]; ++ix) {
            const double x = g.coord(0, ix), y = g.coord(1, iy);
            const double r2 = x * x + y * y;
            sup = std::max(sup, std::abs(lam.at(ix, iy) - cplx((1.0 - 2.0 * r2) * std::exp(-r2), 0.0)));
        }
    CHECK(sup < 1e-10);

    // constant on the plateau: Lambda c = (d/2) c where grad vanishes
    Field c(Grid::make1d(256, 30.0));
    for (auto& z : c.v) z = 2.5;
    Field lc = apply_lambda(c);
    CHECK(std::abs(lc.v[128] - cplx(0.5 * 1 * 2.5, 0.0)) < 1e-12);
}

TEST_CASE("functionals basics") {
    Grid g = Grid::make1d(2048, 40.0);
    Field zero(g);
    Functionals fz = functionals(zero);
    CHECK(fz.mass == 0.0);
    CHECK(fz.energy == 0.0);
    CHECK(fz.momentum[0] == 0.0);

    GroundStateProfile gs = solve_ground_state(1, 20.0, 1e-7);
    Field q(g);
    for (int i = 0; i < g.n[0]; ++i) q.v[i] = gs.eval(g.coord(0, i));
    Functionals fq = functionals(q);
    CHECK(std::fabs(fq.energy) < 1e-6);
    CHECK(fq.mass == doctest::Approx(std::sqrt(3.0) * M_PI / 2.0).epsilon(1e-8));
    // (Q, Lambda Q) = 0 on the grid as well
    Field lam = apply_lambda(q);
    CHECK(std::fabs(box_inner(q, lam).real()) < 1e-8);
}
