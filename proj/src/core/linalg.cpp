#include "nlslab/linalg.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <cmath>
#include <stdexcept>

namespace nlslab {

bool solve_dense(std::vector<double>& A, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::fabs(A[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::fabs(A[r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return false;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        const double inv = 1.0 / A[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double factor = A[r * n + col] * inv;
            if (factor == 0.0) continue;
            for (int c = col; c < n; ++c) A[r * n + c] -= factor * A[col * n + c];
            b[r] -= factor * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * b[c];
        b[r] = s / A[r * n + r];
    }
    return true;
}

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1), ab_(static_cast<std::size_t>(ldab_) * n, 0.0) {}

void BandedMatrix::add(int i, int j, std::complex<double> v) {
    if (j - i > ku_ || i - j > kl_) return;
    // LAPACK band storage: AB(kl+ku+i-j, j), column-major.
    ab_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] += v;
}

void BandedMatrix::set(int i, int j, std::complex<double> v) {
    if (j - i > ku_ || i - j > kl_) return;
    ab_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] = v;
}

void BandedMatrix::solve(std::vector<std::complex<double>>& rhs) {
    std::vector<lapack_int> ipiv(n_);
    lapack_int info = LAPACKE_zgbsv(LAPACK_COL_MAJOR, n_, kl_, ku_, 1,
                                    reinterpret_cast<lapack_complex_double*>(ab_.data()), ldab_, ipiv.data(),
                                    reinterpret_cast<lapack_complex_double*>(rhs.data()), n_);
    if (info != 0) throw std::runtime_error("zgbsv failed, info=" + std::to_string(info));
}

} // namespace nlslab
