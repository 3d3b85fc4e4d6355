// Small dense solves (hand-rolled, deterministic) and a complex banded
// solver backed by LAPACK zgbsv.
#pragma once

#include <complex>
#include <vector>

namespace nlslab {

// Solve A x = b in place for small n (partial pivoting).  A is row-major n*n.
// Returns false if the pivot collapses.
bool solve_dense(std::vector<double>& A, std::vector<double>& b, int n);

// Complex banded matrix in LAPACK band storage with kl sub- and ku
// superdiagonals.  set() ignores entries outside the band.
class BandedMatrix {
  public:
    BandedMatrix(int n, int kl, int ku);
    void add(int i, int j, std::complex<double> v);
    void set(int i, int j, std::complex<double> v);
    // Solves A x = rhs, overwriting rhs with x.  Throws on singularity.
    void solve(std::vector<std::complex<double>>& rhs);

  private:
    int n_, kl_, ku_, ldab_;
    std::vector<std::complex<double>> ab_;
};

} // namespace nlslab
