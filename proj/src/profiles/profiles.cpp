#include "nlslab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlslab/linalg.hpp"
#include "nlslab/quad.hpp"
#include "nlslab/smoothstep.hpp"

namespace nlslab {

ProfileGeometry ProfileGeometry::make(double b, double eta, double a_exponent) {
    ProfileGeometry g;
    g.b = b;
    g.eta = eta;
    g.a_exponent = a_exponent;
    if (b != 0.0) {
        g.R_b = 2.0 / std::fabs(b) * std::sqrt(1.0 - eta);
        g.R_b_minus = std::sqrt(1.0 - eta) * g.R_b;
        g.A_b = std::exp(a_exponent * M_PI / std::fabs(b));
    }
    return g;
}

namespace {

// P'' = P - (b^2 r^2/4) P - P^{1+4/d} - (d-1)/r P'
struct PRhs {
    int d;
    double b2_4; // b^2/4
    double p;    // 1 + 4/d
    double accel(double r, double q, double qp) const {
        const double f = q - b2_4 * r * r * q - std::pow(std::fabs(q), p - 1.0) * q;
        if (r > 0.0) return f - (d - 1) / r * qp;
        return f / d;
    }
};

void rk4(const PRhs& rhs, double r, double h, double& q, double& qp) {
    const double k1q = qp, k1p = rhs.accel(r, q, qp);
    const double k2q = qp + 0.5 * h * k1p, k2p = rhs.accel(r + 0.5 * h, q + 0.5 * h * k1q, qp + 0.5 * h * k1p);
    const double k3q = qp + 0.5 * h * k2p, k3p = rhs.accel(r + 0.5 * h, q + 0.5 * h * k2q, qp + 0.5 * h * k2p);
    const double k4q = qp + h * k3p, k4p = rhs.accel(r + h, q + h * k3q, qp + h * k3p);
    q += h / 6.0 * (k1q + 2.0 * (k2q + k3q) + k4q);
    qp += h / 6.0 * (k1p + 2.0 * (k2p + k3p) + k4p);
}

// Integrate from origin.  The wanted branch decreases monotonically and hits
// zero exactly at R_b; a rebound (P' turning positive while P > 0) marks an
// undershoot, an early zero crossing an overshoot.  Returns +1 undershoot,
// -1 overshoot.  Fills samples on demand.
int shoot(const PRhs& rhs, int /*d*/, double p0, double h, std::size_t n, std::vector<double>* q_out,
          std::vector<double>* qp_out, std::size_t* cross_index = nullptr) {
    const double a = rhs.accel(0.0, p0, 0.0) / 2.0; // series: P = p0 + a r^2
    double q = p0 + a * h * h, qp = 2.0 * a * h;
    if (q_out) {
        q_out->assign(n, 0.0);
        qp_out->assign(n, 0.0);
        (*q_out)[0] = p0;
        (*q_out)[1] = q;
        (*qp_out)[1] = qp;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        rk4(rhs, i * h, h, q, qp);
        if (q_out) {
            (*q_out)[i + 1] = q;
            (*qp_out)[i + 1] = qp;
        }
        if (q <= 0.0) {
            if (cross_index) *cross_index = i + 1;
            return -1;
        }
        if (qp > 0.0 && i * h > 0.5 && !q_out) return +1; // rebound
    }
    return +1;
}

// 4th-order Newton relaxation of the two-point problem on the fixed grid,
// starting from the shooting samples.  Removes the growing-mode round-off
// that contaminates the tail when e^{theta/b} exceeds 1/eps.
void polish_bvp(const PRhs& rhs, int d, double h, std::vector<double>& q) {
    const int n = static_cast<int>(q.size());
    const double h2 = h * h;
    for (int iter = 0; iter < 30; ++iter) {
        BandedMatrix J(n, 2, 2);
        std::vector<cplx> res(n, 0.0);
        auto val = [&](int i) { return q[std::abs(i)]; }; // even fold at origin
        for (int i = 0; i + 1 < n; ++i) {
            const double r = i * h;
            double qpp, qp;
            if (i + 2 < n) {
                qpp = (-val(i - 2) + 16 * val(i - 1) - 30 * val(i) + 16 * val(i + 1) - val(i + 2)) / (12 * h2);
                qp = (val(i - 2) - 8 * val(i - 1) + 8 * val(i + 1) - val(i + 2)) / (12 * h);
            } else {
                qpp = (val(i - 1) - 2 * val(i) + val(i + 1)) / h2;
                qp = (val(i + 1) - val(i - 1)) / (2 * h);
            }
            const double F = (i == 0 ? d * qpp : qpp + (d - 1) / r * qp) - q[i] + rhs.b2_4 * r * r * q[i] +
                             std::pow(std::fabs(q[i]), rhs.p - 1.0) * q[i];
            res[i] = -F;

            // Jacobian rows (same stencils, linearized nonlinearity)
            auto addJ = [&](int jj, double w) { J.add(i, std::abs(jj), cplx(w, 0.0)); };
            if (i + 2 < n) {
                const double cpp[5] = {-1.0 / (12 * h2), 16.0 / (12 * h2), -30.0 / (12 * h2), 16.0 / (12 * h2),
                                       -1.0 / (12 * h2)};
                const double cp[5] = {1.0 / (12 * h), -8.0 / (12 * h), 0.0, 8.0 / (12 * h), -1.0 / (12 * h)};
                for (int k = -2; k <= 2; ++k) {
                    double w = cpp[k + 2] * (i == 0 ? d : 1.0);
                    if (i != 0) w += (d - 1) / r * cp[k + 2];
                    addJ(i + k, w);
                }
            } else {
                addJ(i - 1, 1.0 / h2 + (i != 0 ? -(d - 1) / r / (2 * h) : 0.0));
                addJ(i, -2.0 / h2 * (i == 0 ? d : 1.0));
                addJ(i + 1, 1.0 / h2 + (i != 0 ? (d - 1) / r / (2 * h) : 0.0));
            }
            J.add(i, i, cplx(-1.0 + rhs.b2_4 * r * r + rhs.p * std::pow(std::fabs(q[i]), rhs.p - 1.0), 0.0));
        }
        // Dirichlet P(R_b) = 0
        J.set(n - 1, n - 1, cplx(1.0, 0.0));
        res[n - 1] = -q[n - 1];

        double rmax = 0.0;
        for (auto& z : res) rmax = std::max(rmax, std::abs(z));
        J.solve(res);
        // backtrack if the step drives the core negative
        double step = 1.0;
        const int core = static_cast<int>(0.9 * n);
        for (int bt = 0; bt < 12; ++bt, step *= 0.5) {
            bool ok = true;
            for (int i = 0; i < core && ok; ++i)
                if (q[i] + step * res[i].real() <= 0.0) ok = false;
            if (ok) break;
        }
        double dmax = 0.0;
        for (int i = 0; i < n; ++i) {
            q[i] += step * res[i].real();
            dmax = std::max(dmax, std::fabs(step * res[i].real()));
        }
        if (rmax < 1e-13 && dmax < 1e-13) break;
    }
}

std::vector<double> fd_derivative(const std::vector<double>& q, double h) {
    const int n = static_cast<int>(q.size());
    std::vector<double> qp(n, 0.0);
    auto val = [&](int i) { return q[std::abs(std::min(i, n - 1))]; };
    for (int i = 0; i < n; ++i) {
        if (i + 2 < n)
            qp[i] = (val(i - 2) - 8 * val(i - 1) + 8 * val(i + 1) - val(i + 2)) / (12 * h);
        else if (i + 1 < n)
            qp[i] = (val(i + 1) - val(i - 1)) / (2 * h);
        else
            qp[i] = (q[i] - q[i - 1]) / h;
    }
    qp[0] = 0.0;
    return qp;
}

cplx hermite_eval(const std::vector<cplx>& f, const std::vector<cplx>& fp, double h, double r) {
    const std::size_t n = f.size();
    const std::size_t i = std::min(static_cast<std::size_t>(r / h), n - 2);
    const double t = (r - i * h) / h;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * f[i] + h10 * h * fp[i] + h01 * f[i + 1] + h11 * h * fp[i + 1];
}

} // namespace

ModifiedProfile solve_modified_profile(double b, double eta, const GroundStateProfile& ground, double a_exponent,
                                       double grid_h) {
    ModifiedProfile mp;
    mp.dimension = ground.dimension;
    mp.geom = ProfileGeometry::make(b, eta, a_exponent);

    if (b == 0.0) {
        // geometry degenerates; the modified profile is the ground state
        mp.h = ground.h;
        mp.p = ground.q;
        mp.pp = ground.qp;
        const std::size_t n = ground.q.size();
        mp.val.resize(n);
        mp.d1.resize(n);
        mp.d2.resize(n);
        mp.cutoff.assign(n, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            mp.val[i] = ground.q[i];
            mp.d1[i] = ground.qp[i];
            mp.d2[i] = ground.eval_second(ground.r(i));
        }
        mp.p0 = ground.q0;
        mp.mass_excess = 0.0;
        return mp;
    }

    if (std::fabs(b) > 0.5) throw std::invalid_argument("|b| must be <= 0.5");
    const int d = ground.dimension;
    const double Rb = mp.geom.R_b;
    double h = grid_h > 0.0 ? grid_h : std::min(2e-3, (Rb - mp.geom.R_b_minus) / 24.0);
    std::size_t n = static_cast<std::size_t>(std::ceil(Rb / h)) + 1;
    h = Rb / (n - 1);
    mp.h = h;

    const PRhs rhs{d, 0.25 * b * b, 1.0 + 4.0 / d};

    // shooting window around Q(0), widened adaptively on bracket failure
    double eps_star = 0.2 * ground.q0;
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    for (int widen = 0; widen < 3 && !bracketed; ++widen, eps_star *= 1.5) {
        lo = ground.q0 - eps_star;
        hi = ground.q0 + eps_star;
        bracketed = shoot(rhs, d, lo, h, n, nullptr, nullptr) > 0 && shoot(rhs, d, hi, h, n, nullptr, nullptr) < 0;
    }
    if (!bracketed) throw std::runtime_error("profile shooting window exhausted (b too large for eta)");
    for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (shoot(rhs, d, mid, h, n, nullptr, nullptr) > 0 ? lo : hi) = mid;
    }
    mp.p0 = 0.5 * (lo + hi);
    std::size_t cross = 0;
    shoot(rhs, d, mp.p0, h, n, &mp.p, &mp.pp, &cross);
    const bool will_polish = std::fabs(b) < 0.12;
    if (!will_polish && cross != 0 && cross * h < mp.geom.R_b_minus)
        throw std::runtime_error("profile sign change before R_b^- (positivity violated)");

    // Below b ~ 0.12 the growing mode swamps the tail in double precision;
    // relax the same two-point problem on the fixed grid to clean it.  The
    // contaminated tail is re-seeded by a decaying continuation first.
    if (will_polish) {
        std::size_t ic = 1;
        while (ic + 1 < n && mp.p[ic + 1] > 0.0 && mp.p[ic + 1] < mp.p[ic] && mp.p[ic] > 1e-12 * mp.p0) ++ic;
        const double rc = ic * h, pc = std::max(mp.p[ic], 1e-300);
        for (std::size_t i = ic + 1; i < n; ++i) {
            const double r = i * h;
            mp.p[i] = pc * std::exp(-(r - rc)) * std::max(0.0, (Rb - r) / (Rb - rc));
        }
        polish_bvp(rhs, d, h, mp.p);
        mp.pp = fd_derivative(mp.p, h);
        mp.p0 = mp.p[0];
        mp.polished = true;
    }
    const double pos_floor = 1e-12 * mp.p0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i * h < mp.geom.R_b_minus && mp.p[i] <= -pos_floor)
            throw std::runtime_error("profile positivity violated inside R_b^-");
        if (std::fabs(mp.p[i]) < pos_floor && i * h > 0.5 * Rb) mp.p[i] = std::max(mp.p[i], 0.0);
    }

    // assemble Q~_b = P phi_b e^{-i b r^2/4} with exact derivative propagation
    mp.val.resize(n);
    mp.d1.resize(n);
    mp.d2.resize(n);
    mp.cutoff.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = i * h;
        const CutoffSample cf = cutoff_down(r, mp.geom.R_b_minus, mp.geom.R_b);
        mp.cutoff[i] = cf.f;
        const double P = mp.p[i], Pp = mp.pp[i];
        const double Ppp = rhs.accel(r, P, Pp);
        const double F = P * cf.f;
        const double Fp = Pp * cf.f + P * cf.d1;
        const double Fpp = Ppp * cf.f + 2.0 * Pp * cf.d1 + P * cf.d2;
        const double psi = -0.25 * b * r * r;  // phase of e^{-i b r^2/4}
        const double psip = -0.5 * b * r;
        const double psipp = -0.5 * b;
        const cplx e = std::polar(1.0, psi);
        mp.val[i] = F * e;
        mp.d1[i] = (cplx(Fp, psip * F)) * e;
        mp.d2[i] = (cplx(Fpp - psip * psip * F, 2.0 * psip * Fp + psipp * F)) * e;
    }
    mp.val[n - 1] = mp.d1[n - 1] = mp.d2[n - 1] = 0.0;

    mp.mass_excess = mp.mass() - ground.mass();
    return mp;
}

cplx ModifiedProfile::eval(double rr) const {
    const double r = std::fabs(rr);
    if (r >= support_radius()) return 0.0;
    return hermite_eval(val, d1, h, r);
}

cplx ModifiedProfile::eval_d1(double rr) const {
    const double r = std::fabs(rr);
    if (r >= support_radius()) return 0.0;
    return (rr < 0.0 ? -1.0 : 1.0) * hermite_eval(d1, d2, h, r);
}

cplx ModifiedProfile::eval_d2(double rr) const {
    const double r = std::fabs(rr);
    if (r >= support_radius()) return 0.0;
    const std::size_t i = std::min(static_cast<std::size_t>(r / h), d2.size() - 2);
    const double t = (r - i * h) / h;
    return (1.0 - t) * d2[i] + t * d2[i + 1];
}

double ModifiedProfile::mass() const {
    std::vector<double> f(size());
    for (std::size_t i = 0; i < size(); ++i) f[i] = std::norm(val[i]);
    return radial_integral(f, h, dimension);
}

double ModifiedProfile::weighted_y2_mass() const {
    std::vector<double> f(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const double r = i * h;
        f[i] = r * r * std::norm(val[i]);
    }
    return radial_integral(f, h, dimension);
}

std::vector<cplx> compute_psi_b(ModifiedProfile& mp) {
    // Uses the exactly propagated derivative samples (P' from the integrator,
    // P'' from the ODE, cutoff derivatives in closed form), so the annulus
    // values carry no stencil smear across R_b^-.
    const int n = static_cast<int>(mp.size());
    const int d = mp.dimension;
    const double b = mp.geom.b;
    const double expo = 4.0 / d;
    std::vector<cplx> psi(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double r = i * mp.h;
        const cplx q = mp.val[i], qp = mp.d1[i], qpp = mp.d2[i];
        const cplx lap = (i == 0) ? static_cast<double>(d) * qpp : qpp + static_cast<double>(d - 1) / r * qp;
        const cplx lam = 0.5 * d * q + r * qp;
        psi[i] = -lap + q - cplx(0.0, b) * lam - q * std::pow(std::norm(q), 0.5 * expo);
    }
    mp.psi = psi;
    return psi;
}

GammaB gamma_b(double b, double c_eta) {
    if (b == 0.0) throw std::invalid_argument("gamma_b requires b != 0");
    GammaB g;
    const double x = M_PI / std::fabs(b);
    g.log_proxy = -x;
    g.log_lower = -(1.0 + c_eta) * x;
    g.log_upper = -(1.0 - c_eta) * x;
    g.proxy = std::exp(g.log_proxy);
    g.lower = std::exp(g.log_lower);
    g.upper = std::exp(g.log_upper);
    return g;
}

RadiationTail solve_radiation(double b, const ModifiedProfile& mp, double a_exponent) {
    RadiationTail rt;
    const int d = mp.dimension;
    if (b == 0.0) {
        // zero forcing, coercive operator
        rt.h = mp.h;
        rt.zeta.assign(mp.size(), 0.0);
        rt.zeta_cut.assign(mp.size(), 0.0);
        return rt;
    }

    const double A = std::exp(a_exponent * M_PI / std::fabs(b));
    const double Rb = mp.geom.R_b;
    const double r_out = std::max(3.0 * A, Rb + 4.0);
    const double w = Rb - mp.geom.R_b_minus;
    double h = std::min({w / 32.0, 2e-3, mp.h});
    int n = static_cast<int>(std::ceil(r_out / h)) + 1;
    h = r_out / (n - 1);
    rt.h = h;

    // forcing from the analytic profile derivatives (independent of the
    // finite differences used to report profile.psi)
    std::vector<cplx> f(n, 0.0);
    const double expo = 4.0 / d;
    for (int i = 0; i < n; ++i) {
        const double r = i * h;
        if (r >= mp.support_radius()) break;
        const cplx q = mp.eval(r), qp = mp.eval_d1(r), qpp = mp.eval_d2(r);
        const cplx lap = (i == 0) ? static_cast<double>(d) * qpp : qpp + static_cast<double>(d - 1) / r * qp;
        const cplx lam = 0.5 * d * q + r * qp;
        f[i] = -lap + q - cplx(0.0, b) * lam - q * std::pow(std::norm(q), 0.5 * expo);
    }

    // banded system: rows 0..n-2 are the 4th-order discretized operator
    // (2nd order for the last interior row), row n-1 the Robin condition
    // matching the decaying branch z ~ r^{-d/2 - i/b}.
    BandedMatrix M(n, 4, 2);
    std::vector<cplx> rhs = f;
    const double h2 = h * h;
    const cplx ib(0.0, b);
    for (int i = 0; i + 1 < n; ++i) {
        const double r = i * h;
        auto add = [&](int j, cplx wgt) { M.add(i, std::abs(j), wgt); };
        if (i + 2 < n) {
            const double cpp[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};
            const double cp[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
            for (int k = -2; k <= 2; ++k) {
                cplx wgt = cpp[k + 2] / (12.0 * h2) * (i == 0 ? d : 1.0);
                if (i != 0) wgt += (static_cast<double>(d - 1) / r + ib * r) * (cp[k + 2] / (12.0 * h));
                add(i + k, wgt);
            }
        } else {
            add(i - 1, 1.0 / h2 - (static_cast<double>(d - 1) / r + ib * r) / (2.0 * h));
            add(i, -2.0 / h2);
            add(i + 1, 1.0 / h2 + (static_cast<double>(d - 1) / r + ib * r) / (2.0 * h));
        }
        M.add(i, i, -1.0 + ib * (0.5 * d));
    }
    {
        // Robin row: z'(r_out) = mu z(r_out), 4th-order one-sided derivative
        const double c[5] = {25.0, -48.0, 36.0, -16.0, 3.0};
        const cplx mu = cplx(-0.5 * d, -1.0 / b) / r_out;
        for (int k = 0; k < 5; ++k) M.add(n - 1, n - 1 - k, c[k] / (12.0 * h));
        M.add(n - 1, n - 1, -mu);
        rhs[n - 1] = 0.0;
    }
    M.solve(rhs);
    rt.zeta = std::move(rhs);

    // defining-equation residual with independent 6th-order stencils
    double res_max = 0.0, f_max = 0.0;
    for (const cplx& z : f) f_max = std::max(f_max, std::abs(z));
    auto zval = [&](int i) { return rt.zeta[std::abs(i)]; };
    for (int i = 0; i + 3 < n; ++i) {
        const double r = i * h;
        const cplx zpp = (2.0 * zval(i - 3) - 27.0 * zval(i - 2) + 270.0 * zval(i - 1) - 490.0 * zval(i) +
                          270.0 * zval(i + 1) - 27.0 * zval(i + 2) + 2.0 * zval(i + 3)) /
                         (180.0 * h2);
        const cplx zp = (-zval(i - 3) + 9.0 * zval(i - 2) - 45.0 * zval(i - 1) + 45.0 * zval(i + 1) -
                         9.0 * zval(i + 2) + zval(i + 3)) /
                        (60.0 * h);
        const cplx lap = (i == 0) ? static_cast<double>(d) * zpp : zpp + static_cast<double>(d - 1) / r * zp;
        const cplx lam = 0.5 * d * zval(i) + r * zp;
        res_max = std::max(res_max, std::abs(lap - zval(i) + ib * lam - f[i]));
    }
    rt.residual_rel = f_max > 0.0 ? res_max / f_max : 0.0;

    // cut version and its integrals
    rt.zeta_cut.resize(n);
    std::vector<double> grad(n, 0.0), imy(n, 0.0);
    for (int i = 0; i < n; ++i) rt.zeta_cut[i] = rt.zeta[i] * cutoff_down(i * h, A, 2.0 * A).f;
    auto zcv = [&](int i) { return rt.zeta_cut[std::min(std::abs(i), n - 1)]; };
    for (int i = 1; i + 1 < n; ++i) {
        const double r = i * h;
        const cplx zcp = (zcv(i + 1) - zcv(i - 1)) / (2.0 * h);
        imy[i] = std::imag(r * zcp * std::conj(rt.zeta_cut[i]));
        grad[i] = std::norm((zval(i + 1) - zval(i - 1)) / (2.0 * h));
    }
    rt.grad_sq = radial_integral(grad, h, d);
    rt.f1_tilde = 0.25 * b * mp.weighted_y2_mass() + 0.5 * radial_integral(imy, h, d);
    return rt;
}

double profile_theta(double r) {
    if (r <= 0.0) return 0.0;
    if (r <= 2.0) return 0.5 * r * std::sqrt(1.0 - 0.25 * r * r) + std::asin(0.5 * r);
    return 0.25 * M_PI * r; // theta(2)/2 * r with theta(2) = pi/2
}

ProfileFamilyReport profile_family_report(const std::vector<double>& b_list, const GroundStateProfile& ground,
                                          double eta) {
    ProfileFamilyReport rep;
    for (double b : b_list) {
        ModifiedProfile mp = solve_modified_profile(b, eta, ground);
        ProfileFamilyEntry e;
        e.b = b;
        e.mass_excess = mp.mass_excess;

        // weighted sup-distance in log space
        const double rmax = std::max(mp.support_radius(), 25.0);
        double best = -1e300;
        for (double r = 0.0; r <= rmax; r += 0.002) {
            const double diff = std::abs(mp.eval(r) - cplx(ground.eval(r), 0.0));
            if (diff <= 0.0) continue;
            best = std::max(best, (1.0 - eta) * profile_theta(std::fabs(b) * r) / std::fabs(b) + std::log(diff));
        }
        e.log_weighted_distance = best;

        // radial-derivative Sobolev norms H^0..H^3
        const int n = static_cast<int>(mp.size());
        std::vector<cplx> d3(n, 0.0);
        auto dv = [&](int i) { return mp.d2[std::min(std::abs(i), n - 1)]; };
        for (int i = 0; i < n; ++i) d3[i] = (i + 1 < n) ? (dv(i + 1) - dv(i - 1)) / (2.0 * mp.h) : cplx(0.0, 0.0);
        const std::vector<cplx>* ders[4] = {&mp.val, &mp.d1, &mp.d2, &d3};
        double acc = 0.0;
        for (int s = 0; s <= 3; ++s) {
            std::vector<double> f(n);
            for (int i = 0; i < n; ++i) f[i] = std::norm((*ders[s])[i]);
            acc += radial_integral(f, mp.h, mp.dimension);
            e.h_norm[s] = std::sqrt(acc);
        }
        rep.entries.push_back(e);
    }

    // ground H^3 for the uniform-boundedness comparison
    {
        const std::size_t n = ground.q.size();
        std::vector<double> f0(n), f1(n), f2(n), f3(n);
        for (std::size_t i = 0; i < n; ++i) {
            f0[i] = ground.q[i] * ground.q[i];
            f1[i] = ground.qp[i] * ground.qp[i];
            f2[i] = ground.eval_second(ground.r(i));
            f2[i] *= f2[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double d3v = i + 1 < n && i > 0
                                   ? (ground.eval_second(ground.r(i + 1)) - ground.eval_second(ground.r(i - 1))) /
                                         (2.0 * ground.h)
                                   : 0.0;
            f3[i] = d3v * d3v;
        }
        rep.ground_h3 = std::sqrt(radial_integral(f0, ground.h, ground.dimension) +
                                  radial_integral(f1, ground.h, ground.dimension) +
                                  radial_integral(f2, ground.h, ground.dimension) +
                                  radial_integral(f3, ground.h, ground.dimension));
    }

    // log-log fit of mass excess vs b
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int cnt = 0;
    for (const auto& e : rep.entries) {
        if (e.mass_excess <= 0.0 || e.b == 0.0) continue;
        const double x = std::log(std::fabs(e.b)), y = std::log(e.mass_excess);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt >= 2) rep.mass_excess_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);

    rep.weighted_distance_decreasing = true;
    for (std::size_t i = 1; i < rep.entries.size(); ++i) {
        const auto &a = rep.entries[i - 1], &bb = rep.entries[i];
        if (std::fabs(a.b) > std::fabs(bb.b) && a.log_weighted_distance < bb.log_weighted_distance)
            rep.weighted_distance_decreasing = false;
        if (std::fabs(a.b) < std::fabs(bb.b) && a.log_weighted_distance > bb.log_weighted_distance)
            rep.weighted_distance_decreasing = false;
    }
    return rep;
}

} // namespace nlslab
