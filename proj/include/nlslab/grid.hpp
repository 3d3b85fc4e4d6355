// Periodic uniform grids (d=1,2) and complex field samples.
#pragma once

#include <array>
#include <cassert>
#include <complex>
#include <cstddef>
#include <vector>

namespace nlslab {

using cplx = std::complex<double>;

struct Grid {
    int dim = 1;
    std::array<int, 2> n{1, 1};          // points per axis; n[1]==1 when dim==1
    std::array<double, 2> box{1.0, 1.0}; // box length per axis, centered at 0

    std::size_t size() const { return static_cast<std::size_t>(n[0]) * n[1]; }
    double dx(int axis) const { return box[axis] / n[axis]; }
    double coord(int axis, int i) const { return -0.5 * box[axis] + i * dx(axis); }
    double cell_volume() const { return dim == 1 ? dx(0) : dx(0) * dx(1); }
    std::size_t idx(int ix, int iy = 0) const { return static_cast<std::size_t>(iy) * n[0] + ix; }

    // Fourier wavenumber for index i along an axis (standard FFT ordering).
    double wavenumber(int axis, int i) const {
        const int ni = n[axis];
        const int f = (i <= ni / 2) ? i : i - ni;
        return 2.0 * M_PI / box[axis] * f;
    }

    bool congruent(const Grid& o) const { return dim == o.dim && n == o.n && box == o.box; }

    static Grid make1d(int nx, double L) { return Grid{1, {nx, 1}, {L, 1.0}}; }
    static Grid make2d(int nx, int ny, double Lx, double Ly) { return Grid{2, {nx, ny}, {Lx, Ly}}; }
};

struct Field {
    Grid grid;
    std::vector<cplx> v;
    double time = 0.0;

    Field() = default;
    explicit Field(const Grid& g, double t = 0.0) : grid(g), v(g.size(), cplx(0.0, 0.0)), time(t) {}

    cplx& at(int ix, int iy = 0) { return v[grid.idx(ix, iy)]; }
    const cplx& at(int ix, int iy = 0) const { return v[grid.idx(ix, iy)]; }
};

// |k|^2 table in FFT layout, cached by caller.
std::vector<double> k_squared_table(const Grid& g);

} // namespace nlslab
