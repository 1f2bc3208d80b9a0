#include "periband/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "periband/fiber.hpp"

namespace periband {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<double>> grid_thetas(int dim, int n) {
    std::vector<std::vector<double>> thetas;
    std::vector<int> m(dim, 0);
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (int s = 0; s < dim; ++s) t *= static_cast<std::size_t>(n);
        return t;
    }();
    thetas.reserve(total + 2);
    for (;;) {
        std::vector<double> theta(dim);
        for (int s = 0; s < dim; ++s) theta[s] = 2.0 * kPi * m[s] / n - kPi;
        thetas.push_back(std::move(theta));
        int s = 0;
        while (s < dim && ++m[s] == n) m[s++] = 0;
        if (s == dim) break;
    }
    thetas.emplace_back(dim, 0.0);  // mandatory theta = 0
    thetas.emplace_back(dim, kPi);  // mandatory theta = (pi,...,pi)
    return thetas;
}

}  // namespace

std::vector<double> fiber_grid_eigenvalues(const FundamentalGraph& g,
                                           const std::vector<std::vector<double>>& thetas,
                                           bool parallel) {
    const int nu = g.num_vertices();
    const std::int64_t count = static_cast<std::int64_t>(thetas.size());
    std::vector<double> lambdas(static_cast<std::size_t>(count) * nu);

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto eig = hermitian_eigenvalues(fiber_matrix(g, thetas[i]));
            std::copy(eig.begin(), eig.end(), lambdas.begin() + i * nu);
        }
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            const auto eig = hermitian_eigenvalues(fiber_matrix(g, thetas[i]));
            std::copy(eig.begin(), eig.end(), lambdas.begin() + i * nu);
        }
    }
    return lambdas;
}

static SampleGrid sample_impl(const FundamentalGraph& g, int n_per_dim, bool parallel) {
    if (n_per_dim < 2) throw std::invalid_argument("sample_bands: n_per_dim must be >= 2");
    SampleGrid grid;
    grid.dim = g.dim();
    grid.n_per_dim = n_per_dim;
    grid.nu = g.num_vertices();
    grid.thetas = grid_thetas(g.dim(), n_per_dim);
    grid.lambdas = fiber_grid_eigenvalues(g, grid.thetas, parallel);
    return grid;
}

SampleGrid sample_bands(const FundamentalGraph& g, int n_per_dim) {
    return sample_impl(g, n_per_dim, true);
}

SampleGrid sample_bands_serial(const FundamentalGraph& g, int n_per_dim) {
    return sample_impl(g, n_per_dim, false);
}

int default_grid(int dim) {
    switch (dim) {
        case 1: return 256;
        case 2: return 64;
        case 3: return 24;
        default: return 8;
    }
}

namespace {

// Running extrema per band. Every eigen-evaluation made anywhere (grid or
// refinement probe) is fed to every band, so the sorted-order relation
// between band endpoints is inherited pointwise.
struct ExtremaAccumulator {
    int nu = 0;
    std::vector<double> lo, hi;
    std::vector<std::vector<double>> arg_lo, arg_hi;

    explicit ExtremaAccumulator(int nu_)
        : nu(nu_),
          lo(nu_, std::numeric_limits<double>::infinity()),
          hi(nu_, -std::numeric_limits<double>::infinity()),
          arg_lo(nu_),
          arg_hi(nu_) {}

    void feed(const std::vector<double>& theta, const double* lambdas) {
        for (int n = 0; n < nu; ++n) {
            if (lambdas[n] < lo[n]) {
                lo[n] = lambdas[n];
                arg_lo[n] = theta;
            }
            if (lambdas[n] > hi[n]) {
                hi[n] = lambdas[n];
                arg_hi[n] = theta;
            }
        }
    }
};

// Golden-section minimization of band n along one axis; feeds every probe
// into the accumulator. Returns the best (position, value) found.
std::pair<double, double> golden_section_axis(const FundamentalGraph& g, ExtremaAccumulator& acc,
                                              int band, int axis, std::vector<double> theta,
                                              double half_width, double sign, int max_probes) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = theta[axis] - half_width;
    double b = theta[axis] + half_width;

    auto eval = [&](double x) {
        theta[axis] = x;
        const auto eig = hermitian_eigenvalues(fiber_matrix(g, theta));
        acc.feed(theta, eig.data());
        return sign * eig[band];
    };

    int probes = 0;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = eval(x1);
    ++probes;
    double f2 = eval(x2);
    ++probes;
    double best_x = f1 <= f2 ? x1 : x2;
    double best_f = std::min(f1, f2);

    while (b - a > 1e-12 && probes < max_probes) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = eval(x2);
        }
        ++probes;
        if (f1 < best_f) {
            best_f = f1;
            best_x = x1;
        }
        if (f2 < best_f) {
            best_f = f2;
            best_x = x2;
        }
    }
    return {best_x, best_f};
}

// Cyclic coordinate-wise refinement of one band endpoint starting from the
// current accumulator argument. Derivative-free because sorted eigenvalues
// are only piecewise smooth. Cycles continue until the value stalls; three
// cycles (the minimum) are not enough where two bands cross at the
// extremum, e.g. conical touching points, which contract only linearly
// under coordinate descent.
void refine_endpoint(const FundamentalGraph& g, ExtremaAccumulator& acc, int band, bool maximize,
                     double cell) {
    const double sign = maximize ? -1.0 : 1.0;
    constexpr int kMaxCycles = 64;
    constexpr int kMinCycles = 3;
    constexpr int kMaxProbesPerAxis = 200;

    std::vector<double> theta = maximize ? acc.arg_hi[band] : acc.arg_lo[band];
    double best = sign * (maximize ? acc.hi[band] : acc.lo[band]);

    for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
        const double before = best;
        for (int axis = 0; axis < g.dim(); ++axis) {
            auto [x, f] = golden_section_axis(g, acc, band, axis, theta, cell, sign, kMaxProbesPerAxis);
            if (f < best) {
                best = f;
                theta[axis] = x;
            }
        }
        if (cycle + 1 >= kMinCycles && before - best < 1e-13) break;
    }
}

}  // namespace

BandTable band_intervals(const FundamentalGraph& g, const BandOptions& opt) {
    const int nu = g.num_vertices();
    const int n = opt.n_per_dim > 0 ? opt.n_per_dim : default_grid(g.dim());
    const SampleGrid grid = sample_impl(g, n, opt.parallel);

    ExtremaAccumulator acc(nu);
    for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
        acc.feed(grid.thetas[i], grid.lambdas.data() + i * nu);
    }

    const double cell = 2.0 * kPi / n;
    for (int band = 0; band < nu; ++band) {
        refine_endpoint(g, acc, band, /*maximize=*/false, cell);
        refine_endpoint(g, acc, band, /*maximize=*/true, cell);
    }

    BandTable table;
    table.grid_resolution = n;
    table.refined = true;
    table.bands.resize(nu);
    for (int band = 0; band < nu; ++band) {
        auto& b = table.bands[band];
        b.index = band + 1;
        b.lo = b.lo_numeric = acc.lo[band];
        b.hi = b.hi_numeric = acc.hi[band];
        b.arg_lo = acc.arg_lo[band];
        b.arg_hi = acc.arg_hi[band];
    }

    if (opt.use_shortcuts && g.is_loop_graph()) {
        table.loop_shortcut = true;
        const std::vector<double> zero(g.dim(), 0.0);
        const auto at_zero = hermitian_eigenvalues(fiber_matrix(g, zero));
        for (int band = 0; band < nu; ++band) {
            table.bands[band].lo = at_zero[band];
            table.bands[band].arg_lo = zero;
        }
        if (auto theta0 = g.find_precise_point()) {
            table.precise_shortcut = true;
            const auto at_precise = hermitian_eigenvalues(fiber_matrix(g, *theta0));
            for (int band = 0; band < nu; ++band) {
                table.bands[band].hi = at_precise[band];
                table.bands[band].arg_hi = *theta0;
            }
        }
    }

    // Keep endpoints inside [-1, 1]: eigensolver noise may overshoot by a
    // few ulps, anything bigger is a real defect.
    for (auto& b : table.bands) {
        for (double* v : {&b.lo, &b.hi, &b.lo_numeric, &b.hi_numeric}) {
            if (*v < -1.0 || *v > 1.0) {
                if (std::abs(*v) > 1.0 + 1e-10)
                    throw GraphError("band endpoint outside [-1,1] beyond tolerance");
                *v = std::clamp(*v, -1.0, 1.0);
            }
        }
        b.is_flat = (b.hi - b.lo) <= opt.flat_tol;
    }
    return table;
}

std::vector<std::pair<double, int>> detect_flat_bands(const BandTable& t, double tol) {
    std::vector<std::pair<double, int>> flats;
    for (const auto& b : t.bands) {
        if (b.hi - b.lo <= tol) {
            const double mu = 0.5 * (b.lo + b.hi);
            if (std::abs(mu) >= 1.0 - tol)
                throw GraphError("flat band at +-1 detected; the fiber assembly is broken");
            flats.emplace_back(mu, b.index);
        }
    }
    return flats;
}

IntervalSet band_union(const BandTable& t) {
    std::vector<Interval> intervals;
    for (const auto& b : t.bands) {
        if (b.is_flat) {
            const double mu = 0.5 * (b.lo + b.hi);
            intervals.push_back({mu, mu});
        } else {
            intervals.push_back({b.lo, b.hi});
        }
    }
    return IntervalSet::from_intervals(std::move(intervals));
}

}  // namespace periband
