#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "periband/graph.hpp"
#include "periband/interval_set.hpp"

namespace periband {

// Band functions evaluated on the uniform grid theta = 2*pi*m/N - pi,
// m in {0..N-1}^d, plus the mandatory samples theta = 0 and (pi,...,pi).
struct SampleGrid {
    int dim = 0;
    int n_per_dim = 0;
    int nu = 0;
    std::vector<std::vector<double>> thetas;
    std::vector<double> lambdas;  // thetas.size() x nu, row-major
};

// Parallel sampler (OpenMP across grid points) and the serial reference it
// is tested against; for a fixed grid both produce bit-identical output.
SampleGrid sample_bands(const FundamentalGraph& g, int n_per_dim);
SampleGrid sample_bands_serial(const FundamentalGraph& g, int n_per_dim);

// Shared kernel: eigenvalues of the fiber at each theta, row-major.
std::vector<double> fiber_grid_eigenvalues(const FundamentalGraph& g,
                                           const std::vector<std::vector<double>>& thetas,
                                           bool parallel);

struct SpectralBand {
    int index = 0;  // 1-based
    double lo = 0.0;
    double hi = 0.0;
    bool is_flat = false;
    std::vector<double> arg_lo, arg_hi;
    // Extrema found by grid + refinement before any loop-graph shortcut;
    // the certification compares them against the shortcut values.
    double lo_numeric = 0.0;
    double hi_numeric = 0.0;
};

struct BandTable {
    std::vector<SpectralBand> bands;
    int grid_resolution = 0;
    bool refined = false;
    bool loop_shortcut = false;     // lo endpoints pinned to lambda_n(0)
    bool precise_shortcut = false;  // hi endpoints pinned to lambda_n(theta0)
};

struct BandOptions {
    int n_per_dim = 0;        // 0: default for the dimension
    double flat_tol = 1e-8;
    bool parallel = true;
    bool use_shortcuts = true;
};

int default_grid(int dim);

BandTable band_intervals(const FundamentalGraph& g, const BandOptions& opt = {});

// Flat bands of a refined table: (value, 1-based band index). Throws
// GraphError if a flat band at +-1 shows up; that cannot happen for a
// correct fiber assembly.
std::vector<std::pair<double, int>> detect_flat_bands(const BandTable& t, double tol = 1e-8);

// Union of the band intervals: overlapping/touching bands merge, flat bands
// survive as zero-measure points only when isolated.
IntervalSet band_union(const BandTable& t);

}  // namespace periband
