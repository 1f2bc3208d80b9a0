#pragma once

#include <complex>
#include <span>
#include <vector>

#include "periband/graph.hpp"

namespace periband {

// Floquet fiber of the normalized Laplacian at quasimomentum theta.
// Hermitian by construction: the strict upper triangle is accumulated and
// mirrored, the diagonal is real.
struct FiberMatrix {
    std::vector<double> theta;
    int n = 0;
    std::vector<std::complex<double>> entries;  // row-major n x n

    const std::complex<double>& at(int r, int c) const { return entries[r * n + c]; }
};

// Entry rule: an edge (v_j, v_k + tau) adds -exp(i<tau,theta>)/sqrt(k_j k_k)
// at (j,k) and the conjugate at (k,j); a loop edge (j = k, shift tau) adds
// -2 cos<tau,theta>/k_j on the diagonal.
FiberMatrix fiber_matrix(const FundamentalGraph& g, std::span<const double> theta);

// Ascending eigenvalues of the fiber: the band functions at theta.
std::vector<double> hermitian_eigenvalues(const FiberMatrix& m);

struct BandValues {
    std::vector<double> theta;
    std::vector<double> lambdas;  // ascending
};

BandValues band_values(const FundamentalGraph& g, std::span<const double> theta);

}  // namespace periband
