#pragma once

#include <Eigen/Dense>

#include "periband/graph.hpp"

namespace periband {

// Normalized Laplacian of the finite quotient with n cells per period:
// independent brute-force ground truth for the Floquet route. Kept dense;
// the size cap keeps this at desk scale.
struct TorusGraph {
    FundamentalGraph base;
    int n = 0;
    Eigen::MatrixXd matrix;  // (nu * n^d) square, symmetric
};

inline constexpr int kTorusSizeCap = 4096;
inline constexpr int kTorusMinCells = 3;

TorusGraph build_torus(const FundamentalGraph& g, int n);

// Ascending eigenvalue multiset of the torus Laplacian.
std::vector<double> torus_eigenvalues(const FundamentalGraph& g, int n);

// Max elementwise deviation between the sorted torus eigenvalues and the
// sorted multiset of fiber eigenvalues over theta = 2*pi*m/n.
double compare_with_floquet(const FundamentalGraph& g, int n, bool parallel = true);

}  // namespace periband
