#include "periband/fiber.hpp"

#include <cmath>
#include <stdexcept>

#include "periband/hermitian_eig.hpp"

namespace periband {

FiberMatrix fiber_matrix(const FundamentalGraph& g, std::span<const double> theta) {
    if (static_cast<int>(theta.size()) != g.dim())
        throw std::invalid_argument("fiber_matrix: theta has wrong dimension");

    const int nu = g.num_vertices();
    FiberMatrix m;
    m.theta.assign(theta.begin(), theta.end());
    m.n = nu;
    m.entries.assign(static_cast<std::size_t>(nu) * nu, {0.0, 0.0});

    const auto& deg = g.degrees();
    for (const auto& e : g.edges()) {
        double phase = 0.0;
        for (int s = 0; s < g.dim(); ++s) phase += e.tau[s] * theta[s];
        if (e.j == e.k) {
            m.entries[e.j * nu + e.j] += -2.0 * std::cos(phase) / deg[e.j];
        } else {
            const double w = -1.0 / std::sqrt(static_cast<double>(deg[e.j]) * deg[e.k]);
            const std::complex<double> v = w * std::exp(std::complex<double>(0.0, phase));
            m.entries[e.j * nu + e.k] += v;
            m.entries[e.k * nu + e.j] += std::conj(v);
        }
    }

    // Keep Hermiticity exact: mirror the accumulated upper triangle.
    for (int r = 0; r < nu; ++r) {
        m.entries[r * nu + r] = m.entries[r * nu + r].real();
        for (int c = r + 1; c < nu; ++c) m.entries[c * nu + r] = std::conj(m.entries[r * nu + c]);
    }
    return m;
}

std::vector<double> hermitian_eigenvalues(const FiberMatrix& m) {
    return hermitian_eigenvalues(m.entries, m.n);
}

BandValues band_values(const FundamentalGraph& g, std::span<const double> theta) {
    BandValues bv;
    bv.theta.assign(theta.begin(), theta.end());
    bv.lambdas = hermitian_eigenvalues(fiber_matrix(g, theta));
    return bv;
}

}  // namespace periband
