#include "periband/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace periband {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRangeTol = 1e-12;   // clamping slack for phi / phi_inv arguments
constexpr double kPlacementTol = 1e-9;

double clamped(double x, double lo, double hi, const char* what) {
    if (x < lo - kRangeTol || x > hi + kRangeTol)
        throw std::domain_error(std::string(what) + ": argument out of range");
    return std::clamp(x, lo, hi);
}

}  // namespace

double phi(double z) { return -std::cos(clamped(z, 0.0, kPi, "phi")); }

double phi_inv(double lambda) { return std::acos(-clamped(lambda, -1.0, 1.0, "phi_inv")); }

OmegaSpectrum omega_spectrum(const BandTable& t, const std::vector<std::pair<double, int>>& flats) {
    OmegaSpectrum o;

    std::vector<Interval> ac_parts;
    for (const auto& b : t.bands) {
        const Interval z{phi_inv(b.lo), phi_inv(b.hi)};
        o.bands.push_back(z);
        if (!b.is_flat) ac_parts.push_back(z);
    }
    o.ac = IntervalSet::from_intervals(std::move(ac_parts));
    o.measure = o.ac.measure();
    o.band_gaps = gaps(o.ac, {0.0, kPi});

    auto placement = [&](double z) {
        return o.ac.distance(z) <= kPlacementTol ? FlatPlacement::embedded : FlatPlacement::in_gap;
    };
    for (const auto& [mu, index] : flats) {
        OmegaFlat f;
        f.mu = mu;
        f.z = phi_inv(mu);
        f.dirichlet = false;
        f.placement = placement(f.z);
        o.flat_bands.push_back(f);
    }
    OmegaFlat dirichlet;
    dirichlet.z = kPi;
    dirichlet.mu = 1.0;
    dirichlet.dirichlet = true;
    dirichlet.placement = placement(kPi);
    o.flat_bands.push_back(dirichlet);

    std::sort(o.flat_bands.begin(), o.flat_bands.end(),
              [](const OmegaFlat& a, const OmegaFlat& b) { return a.z < b.z; });

    // Annotate gaps with the flat points they contain.
    for (auto& g : o.band_gaps) {
        g.flats_inside.clear();
        for (const auto& f : o.flat_bands) {
            if (f.placement == FlatPlacement::in_gap && f.z >= g.lo && f.z <= g.hi)
                g.flats_inside.push_back(f.z);
        }
    }
    return o;
}

UnfoldedSpectrum unfold_momentum(const OmegaSpectrum& o, double z_max) {
    if (!(z_max > 0.0)) throw std::invalid_argument("unfold_momentum: z_max must be positive");

    UnfoldedSpectrum u;
    u.domain = UnfoldedSpectrum::Domain::momentum;
    u.cutoff = z_max;

    // Base pattern on [0, 2pi]: the set and its mirror image about pi.
    std::vector<Interval> base;
    for (const auto& seg : o.ac.segments()) {
        base.push_back(seg);
        base.push_back({2.0 * kPi - seg.hi, 2.0 * kPi - seg.lo});
    }

    std::vector<Interval> parts;
    for (double shift = 0.0; shift < z_max; shift += 2.0 * kPi) {
        for (auto seg : base) {
            seg.lo += shift;
            seg.hi += shift;
            if (seg.lo >= z_max) continue;
            if (seg.hi > z_max) {
                seg.hi = z_max;
                u.truncated = true;
            }
            parts.push_back(seg);
        }
    }
    u.ac = IntervalSet::from_intervals(std::move(parts));

    std::vector<double> flats;
    for (const auto& f : o.flat_bands) {
        if (f.dirichlet) continue;  // pi*n handled below
        for (double shift = 0.0; shift < z_max + kPi; shift += 2.0 * kPi) {
            for (double z : {shift + f.z, shift + 2.0 * kPi - f.z}) {
                if (z > 0.0 && z <= z_max) flats.push_back(z);
            }
        }
    }
    for (int n = 1; n * kPi <= z_max; ++n) flats.push_back(n * kPi);
    std::sort(flats.begin(), flats.end());
    flats.erase(std::unique(flats.begin(), flats.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                flats.end());
    u.flat_points = std::move(flats);
    return u;
}

UnfoldedSpectrum energy_spectrum(const UnfoldedSpectrum& momentum) {
    if (momentum.domain != UnfoldedSpectrum::Domain::momentum)
        throw std::invalid_argument("energy_spectrum: expects a momentum-domain spectrum");

    UnfoldedSpectrum e;
    e.domain = UnfoldedSpectrum::Domain::energy;
    e.cutoff = momentum.cutoff * momentum.cutoff;
    e.truncated = momentum.truncated;

    std::vector<Interval> parts;
    for (const auto& seg : momentum.ac.intervals()) parts.push_back({seg.lo * seg.lo, seg.hi * seg.hi});
    e.ac = IntervalSet::from_intervals(std::move(parts));
    for (double z : momentum.flat_points) e.flat_points.push_back(z * z);
    return e;
}

}  // namespace periband
