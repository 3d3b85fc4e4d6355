// C^2 polynomial smoothsteps and the cutoff profiles built from them.
#pragma once

#include <cmath>

namespace nlslab {

// Quintic smoothstep: s(0)=0, s(1)=1, s'(0)=s'(1)=s''(0)=s''(1)=0.
inline double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

inline double smoothstep_d1(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return 30.0 * t * t * (1.0 + t * (-2.0 + t));
}

inline double smoothstep_d2(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return 60.0 * t * (1.0 + t * (-3.0 + 2.0 * t));
}

struct CutoffSample {
    double f = 0.0, d1 = 0.0, d2 = 0.0;
};

// 1 for r <= a, 0 for r >= b, C^2 monotone bridge between.
inline CutoffSample cutoff_down(double r, double a, double b) {
    CutoffSample c;
    if (r <= a) {
        c.f = 1.0;
        return c;
    }
    if (r >= b) return c;
    const double w = b - a;
    const double t = (b - r) / w;
    c.f = smoothstep(t);
    c.d1 = -smoothstep_d1(t) / w;
    c.d2 = smoothstep_d2(t) / (w * w);
    return c;
}

// 0 for r <= a, 1 for r >= b.
inline CutoffSample cutoff_up(double r, double a, double b) {
    CutoffSample c = cutoff_down(r, a, b);
    c.f = 1.0 - c.f;
    c.d1 = -c.d1;
    c.d2 = -c.d2;
    return c;
}

// chi_{0,loc}: 1 on |x| <= (3/4)s, 0 on |x| >= s   (paper-scale s = 1)
inline double chi0_loc(double r, double scale = 1.0) { return cutoff_down(r, 0.75 * scale, scale).f; }

// chi_{1,loc}: 1 on |x| <= (2/3)s, 0 on |x| >= (3/4)s
inline double chi1_loc(double r, double scale = 1.0) { return cutoff_down(r, 2.0 / 3.0 * scale, 0.75 * scale).f; }

// data window chi: 1 on |x| <= s, 0 on |x| >= 2s
inline double chi_window(double r, double scale = 1.0) { return cutoff_down(r, scale, 2.0 * scale).f; }

} // namespace nlslab
