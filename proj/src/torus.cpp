#include "periband/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "periband/bands.hpp"

namespace periband {

namespace {

std::int64_t pow_int(int base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

TorusGraph build_torus(const FundamentalGraph& g, int n) {
    if (n < kTorusMinCells) throw std::invalid_argument("build_torus: need at least 3 cells per period");
    const int nu = g.num_vertices();
    const int d = g.dim();
    std::int64_t cells = 1;
    for (int s = 0; s < d; ++s) {
        cells *= n;
        if (cells * nu > kTorusSizeCap) throw std::invalid_argument("build_torus: size cap exceeded");
    }
    const std::int64_t size = cells * nu;

    // strides for the cell multi-index
    std::vector<std::int64_t> stride(d);
    std::int64_t acc = 1;
    for (int s = 0; s < d; ++s) {
        stride[s] = acc;
        acc *= n;
    }
    auto vertex_index = [&](int v, const std::vector<int>& cell) {
        std::int64_t c = 0;
        for (int s = 0; s < d; ++s) c += stride[s] * cell[s];
        return c * nu + v;
    };

    TorusGraph t;
    t.base = g;
    t.n = n;
    t.matrix = Eigen::MatrixXd::Zero(size, size);

    const auto& deg = g.degrees();
    std::vector<int> cell(d, 0);
    for (std::int64_t c = 0; c < cells; ++c) {
        for (const auto& e : g.edges()) {
            std::vector<int> target = cell;
            for (int s = 0; s < d; ++s) target[s] = ((cell[s] + e.tau[s]) % n + n) % n;
            const auto a = vertex_index(e.j, cell);
            const auto b = vertex_index(e.k, target);
            const double w = -1.0 / std::sqrt(static_cast<double>(deg[e.j]) * deg[e.k]);
            // a == b happens when the shift wraps to zero: a genuine loop of
            // the quotient, and the two symmetric contributions double it.
            t.matrix(a, b) += w;
            t.matrix(b, a) += w;
        }
        int s = 0;
        while (s < d && ++cell[s] == n) cell[s++] = 0;
    }
    return t;
}

std::vector<double> torus_eigenvalues(const FundamentalGraph& g, int n) {
    const TorusGraph t = build_torus(g, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("torus_eigenvalues: eigensolver failed");
    std::vector<double> eig(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(eig.begin(), eig.end());
    return eig;
}

double compare_with_floquet(const FundamentalGraph& g, int n, bool parallel) {
    const auto torus = torus_eigenvalues(g, n);

    const int d = g.dim();
    std::vector<std::vector<double>> thetas;
    std::vector<int> m(d, 0);
    const std::int64_t cells = pow_int(n, d);
    thetas.reserve(cells);
    for (std::int64_t c = 0; c < cells; ++c) {
        std::vector<double> theta(d);
        for (int s = 0; s < d; ++s) theta[s] = 2.0 * std::numbers::pi * m[s] / n;
        thetas.push_back(std::move(theta));
        int s = 0;
        while (s < d && ++m[s] == n) m[s++] = 0;
    }

    const auto lambdas = fiber_grid_eigenvalues(g, thetas, parallel);
    std::vector<double> floquet(lambdas.begin(), lambdas.end());
    std::sort(floquet.begin(), floquet.end());

    if (floquet.size() != torus.size())
        throw std::logic_error("compare_with_floquet: multiset sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < torus.size(); ++i)
        worst = std::max(worst, std::abs(torus[i] - floquet[i]));
    return worst;
}

}  // namespace periband
