#include "nlslab/quad.hpp"

#include "nlslab/kernels.hpp"

namespace nlslab {

double simpson_uniform(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (f[0] + f[1]);
    double s = 0.0;
    std::size_t m = n;
    // Simpson needs an odd point count; peel one trapezoid interval if even.
    bool tail = false;
    if (n % 2 == 0) {
        m = n - 1;
        tail = true;
    }
    s += f[0] + f[m - 1];
    for (std::size_t i = 1; i < m - 1; i += 2) s += 4.0 * f[i];
    for (std::size_t i = 2; i < m - 1; i += 2) s += 2.0 * f[i];
    s *= h / 3.0;
    if (tail) s += 0.5 * h * (f[n - 2] + f[n - 1]);
    return s;
}

double radial_integral(const std::vector<double>& f, double h, int dim) {
    std::vector<double> g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r = i * h;
        g[i] = f[i] * (dim == 1 ? 1.0 : r);
    }
    return radial_weight(dim) * simpson_uniform(g, h);
}

double box_integral_abs2(const Field& f) {
    return kern::sum_abs2(f.v.data(), f.v.size()) * f.grid.cell_volume();
}

cplx box_inner(const Field& a, const Field& b) {
    return kern::inner(a.v.data(), b.v.data(), a.v.size()) * a.grid.cell_volume();
}

} // namespace nlslab
