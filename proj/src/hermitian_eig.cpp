#include "periband/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace periband {

namespace {

using cd = std::complex<double>;

double off_diagonal_norm(const std::vector<cd>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<cd> a, int n) {
    if (n < 0 || static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("hermitian_eigenvalues: bad size");
    if (n == 0) return {};
    if (n == 1) return {a[0].real()};

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i * n + i].real()));
    scale = std::max(scale, off_diagonal_norm(a, n));
    const double stop = std::max(scale, 1.0) * 1e-15 * n;

    constexpr int kMaxSweeps = 60;
    int sweep = 0;
    while (off_diagonal_norm(a, n) > stop) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("hermitian_eigenvalues: Jacobi sweeps did not converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cd apq = a[p * n + q];
                const double m = std::abs(apq);
                if (m == 0.0) continue;

                // Strip the phase, then a real Jacobi rotation on
                // [[app, m], [m, aqq]].
                const cd u = apq / m;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a[p * n + p] = app - t * m;
                a[q * n + q] = aqq + t * m;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cd arp = a[r * n + p];
                    const cd arq = a[r * n + q];
                    const cd new_rp = c * arp - s * std::conj(u) * arq;
                    const cd new_rq = s * arp + c * std::conj(u) * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = std::conj(new_rp);
                    a[r * n + q] = new_rq;
                    a[q * n + r] = std::conj(new_rq);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i * n + i].real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace periband
