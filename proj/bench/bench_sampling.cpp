// Timing comparison of the serial and OpenMP torus-grid samplers. The two
// paths must produce bit-identical results; this target reports how much
// the parallel one buys.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "periband/bands.hpp"
#include "periband/graph.hpp"

namespace {

double seconds_for(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled\n");
#endif
    std::printf("%-18s %6s %10s %10s %8s %s\n", "graph", "grid", "serial[s]", "openmp[s]", "speedup",
                "bit-identical");

    const std::vector<std::pair<std::string, int>> cases = {
        {"z1_lattice", 4096}, {"hexagonal", 192}, {"triangular", 192}, {"z3_lattice", 20},
        {"c4_pendant_chain", 8192},
    };
    for (const auto& [name, grid] : cases) {
        const auto g = periband::FundamentalGraph::builtin(name);
        periband::SampleGrid serial, parallel;
        const double ts = seconds_for([&] { serial = periband::sample_bands_serial(g, grid); });
        const double tp = seconds_for([&] { parallel = periband::sample_bands(g, grid); });
        const bool same = serial.lambdas == parallel.lambdas;
        std::printf("%-18s %6d %10.3f %10.3f %8.2f %s\n", name.c_str(), grid, ts, tp,
                    ts / (tp > 0 ? tp : 1e-12), same ? "yes" : "NO");
    }
    return 0;
}
