#pragma once

#include <complex>
#include <vector>

namespace periband {

// Eigenvalues of an n x n complex Hermitian matrix (row-major, consumed),
// ascending. Cyclic Jacobi with complex Givens rotations: for the small
// fiber matrices here (n rarely above 10) this is both simple and accurate
// to a few ulps of the spectral norm.
//
// Throws std::runtime_error if the sweep cap is hit, which indicates a bug
// rather than a data condition.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int n);

}  // namespace periband
