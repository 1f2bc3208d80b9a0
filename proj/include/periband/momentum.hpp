#pragma once

#include <string>
#include <utility>
#include <vector>

#include "periband/bands.hpp"
#include "periband/interval_set.hpp"

namespace periband {

// The discrete and metric spectra are linked through phi(z) = -cos z, an
// increasing bijection [0, pi] -> [-1, 1]: a discrete eigenvalue lambda
// corresponds to momentum z = acos(-lambda).
double phi(double z);
double phi_inv(double lambda);

enum class FlatPlacement { embedded, in_gap };

struct OmegaFlat {
    double z = 0.0;
    double mu = 0.0;  // discrete value; -cos(z). For the Dirichlet point, +1 is a placeholder.
    bool dirichlet = false;
    FlatPlacement placement = FlatPlacement::embedded;
};

// Spectrum of the momentum operator on [0, pi]: band images of the discrete
// bands, flat bands (discrete flats plus the Dirichlet point pi), the
// absolutely continuous set, and its gaps under the trailing-gap convention.
struct OmegaSpectrum {
    std::vector<Interval> bands;      // one per discrete band, in order
    std::vector<OmegaFlat> flat_bands;
    IntervalSet ac;
    std::vector<Gap> band_gaps;       // hull [0, pi]
    double measure = 0.0;
};

OmegaSpectrum omega_spectrum(const BandTable& t, const std::vector<std::pair<double, int>>& flats);

struct UnfoldedSpectrum {
    enum class Domain { momentum, energy };
    Domain domain = Domain::momentum;
    double cutoff = 0.0;
    IntervalSet ac;
    std::vector<double> flat_points;
    bool truncated = false;  // the last segment was cut at the cutoff
};

// sqrt-Laplacian spectrum up to z_max: the pattern on (0, 2pi) is the
// momentum spectrum together with its reflection about pi, repeated with
// period 2pi; every Dirichlet point pi*n <= z_max is a flat band.
UnfoldedSpectrum unfold_momentum(const OmegaSpectrum& o, double z_max);

// Image under z -> z^2 (monotone on the half-line).
UnfoldedSpectrum energy_spectrum(const UnfoldedSpectrum& momentum);

}  // namespace periband
