#include "nlslab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nlslab {

std::vector<double> k_squared_table(const Grid& g) {
    std::vector<double> k2(g.size());
    if (g.dim == 1) {
        for (int i = 0; i < g.n[0]; ++i) {
            const double k = g.wavenumber(0, i);
            k2[i] = k * k;
        }
    } else {
        for (int iy = 0; iy < g.n[1]; ++iy) {
            const double ky = g.wavenumber(1, iy);
            for (int ix = 0; ix < g.n[0]; ++ix) {
                const double kx = g.wavenumber(0, ix);
                k2[g.idx(ix, iy)] = kx * kx + ky * ky;
            }
        }
    }
    return k2;
}

} // namespace nlslab

namespace nlslab::fft {

namespace {

struct PlanKey {
    int nx, ny, sign, align;
    bool operator<(const PlanKey& o) const {
        return std::tie(nx, ny, sign, align) < std::tie(o.nx, o.ny, o.sign, o.align);
    }
};

std::mutex g_mutex;
std::map<PlanKey, fftw_plan> g_plans;

fftw_plan get_plan(const Grid& g, cplx* data, int sign) {
    fftw_complex* p = reinterpret_cast<fftw_complex*>(data);
    PlanKey key{g.n[0], g.dim == 2 ? g.n[1] : 1, sign, fftw_alignment_of(reinterpret_cast<double*>(p))};
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    fftw_plan plan;
    if (g.dim == 1)
        plan = fftw_plan_dft_1d(g.n[0], p, p, sign, FFTW_ESTIMATE);
    else
        plan = fftw_plan_dft_2d(g.n[1], g.n[0], p, p, sign, FFTW_ESTIMATE); // row-major: ny slow
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    g_plans.emplace(key, plan);
    return plan;
}

} // namespace

void forward(const Grid& g, cplx* data) {
    fftw_plan plan = get_plan(g, data, FFTW_FORWARD);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
}

void backward(const Grid& g, cplx* data) {
    fftw_plan plan = get_plan(g, data, FFTW_BACKWARD);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
    const double inv = 1.0 / static_cast<double>(g.size());
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) data[i] *= inv;
}

void forward(Field& f) { forward(f.grid, f.v.data()); }
void backward(Field& f) { backward(f.grid, f.v.data()); }

Field derivative(const Field& f, int axis) {
    Field out = f;
    forward(out);
    const Grid& g = out.grid;
    if (g.dim == 1) {
        for (int i = 0; i < g.n[0]; ++i) {
            // drop the unpaired Nyquist mode of the derivative
            double k = (g.n[0] % 2 == 0 && i == g.n[0] / 2) ? 0.0 : g.wavenumber(0, i);
            out.v[i] *= cplx(0.0, k);
        }
    } else {
        for (int iy = 0; iy < g.n[1]; ++iy) {
            for (int ix = 0; ix < g.n[0]; ++ix) {
                const int i = (axis == 0) ? ix : iy;
                double k = (g.n[axis] % 2 == 0 && i == g.n[axis] / 2) ? 0.0 : g.wavenumber(axis, i);
                out.v[g.idx(ix, iy)] *= cplx(0.0, k);
            }
        }
    }
    backward(out);
    return out;
}

Field upsample(const Field& f, int factor) {
    if (factor <= 1) return f;
    Field spec = f;
    forward(spec);
    const Grid& g = f.grid;
    Grid gf = g;
    for (int a = 0; a < g.dim; ++a) gf.n[a] = g.n[a] * factor;
    Field out(gf, f.time);
    const double scale = static_cast<double>(gf.size()) / static_cast<double>(g.size());
    // Nyquist coefficients get split across +-n/2 so interpolation stays symmetric.
    auto targets = [](int i, int n, int nf, int dest[2], double w[2]) {
        const int fr = (i <= n / 2) ? i : i - n;
        if (n % 2 == 0 && i == n / 2) {
            dest[0] = n / 2;
            dest[1] = nf - n / 2;
            w[0] = w[1] = 0.5;
            return 2;
        }
        dest[0] = fr >= 0 ? fr : fr + nf;
        w[0] = 1.0;
        return 1;
    };
    if (g.dim == 1) {
        for (int i = 0; i < g.n[0]; ++i) {
            int dest[2];
            double w[2];
            const int m = targets(i, g.n[0], gf.n[0], dest, w);
            for (int t = 0; t < m; ++t) out.v[dest[t]] += spec.v[i] * (scale * w[t]);
        }
    } else {
        for (int iy = 0; iy < g.n[1]; ++iy) {
            int dy[2];
            double wy[2];
            const int my = targets(iy, g.n[1], gf.n[1], dy, wy);
            for (int ix = 0; ix < g.n[0]; ++ix) {
                int dxs[2];
                double wx[2];
                const int mx = targets(ix, g.n[0], gf.n[0], dxs, wx);
                const cplx val = spec.v[g.idx(ix, iy)] * scale;
                for (int ty = 0; ty < my; ++ty)
                    for (int tx = 0; tx < mx; ++tx)
                        out.v[out.grid.idx(dxs[tx], dy[ty])] += val * (wx[tx] * wy[ty]);
            }
        }
    }
    backward(out);
    return out;
}

} // namespace nlslab::fft
