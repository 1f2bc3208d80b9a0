#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "periband/bands.hpp"
#include "periband/graph.hpp"
#include "periband/momentum.hpp"

using periband::band_intervals;
using periband::band_union;
using periband::detect_flat_bands;
using periband::energy_spectrum;
using periband::FlatPlacement;
using periband::FundamentalGraph;
using periband::gaps;
using periband::omega_spectrum;
using periband::phi;
using periband::phi_inv;
using periband::unfold_momentum;

namespace {

constexpr double kPi = std::numbers::pi;

periband::OmegaSpectrum omega_of(const std::string& name) {
    const auto g = FundamentalGraph::builtin(name);
    const auto t = band_intervals(g);
    return omega_spectrum(t, detect_flat_bands(t));
}

}  // namespace

TEST_CASE("phi and its inverse") {
    CHECK(phi_inv(-1.0) == doctest::Approx(0.0));
    CHECK(phi_inv(1.0) == doctest::Approx(kPi));
    // acos(-1/3), confirmed by the inverse direction
    CHECK(phi_inv(1.0 / 3.0) == doctest::Approx(1.9106332362490186).epsilon(1e-12));
    CHECK(phi(1.9106332362490186) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(phi_inv(-1.0 / 3.0) == doctest::Approx(1.2309594173407747).epsilon(1e-12));
    CHECK(phi(kPi / 2.0) == doctest::Approx(0.0));
    CHECK(phi(0.0) == doctest::Approx(-1.0));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double lambda = u(rng);
        CHECK(phi(phi_inv(lambda)) == doctest::Approx(lambda).epsilon(1e-14));
    }

    // clamped just beyond the ends, rejected further out
    CHECK(phi_inv(1.0 + 5e-13) == doctest::Approx(kPi));
    CHECK_THROWS_AS(phi_inv(1.1), std::domain_error);
    CHECK_THROWS_AS(phi(-0.1), std::domain_error);
    CHECK_THROWS_AS(phi(kPi + 0.1), std::domain_error);
}

TEST_CASE("pendant chain momentum spectrum") {
    const auto o = omega_of("z_pendant");
    const double z1 = std::acos(1.0 / 3.0);   // 1.230959...
    const double z2 = std::acos(-1.0 / 3.0);  // 1.910633...
    REQUIRE(o.bands.size() == 2);
    CHECK(o.bands[0].lo == doctest::Approx(0.0));
    CHECK(o.bands[0].hi == doctest::Approx(z1).epsilon(1e-9));
    CHECK(o.bands[1].lo == doctest::Approx(z2).epsilon(1e-9));
    CHECK(o.bands[1].hi == doctest::Approx(kPi).epsilon(1e-9));

    REQUIRE(o.band_gaps.size() == 1);
    CHECK(o.band_gaps[0].lo == doctest::Approx(1.230959417).epsilon(1e-9));
    CHECK(o.band_gaps[0].hi == doctest::Approx(1.910633236).epsilon(1e-9));

    // the Dirichlet point sits at the top band edge: embedded
    REQUIRE(!o.flat_bands.empty());
    const auto& dirichlet = o.flat_bands.back();
    CHECK(dirichlet.dirichlet);
    CHECK(dirichlet.z == doctest::Approx(kPi));
    CHECK(dirichlet.placement == FlatPlacement::embedded);
}

TEST_CASE("triangular momentum spectrum has pi inside the trailing gap") {
    const auto o = omega_of("triangular");
    REQUIRE(o.bands.size() == 1);
    CHECK(o.bands[0].lo == doctest::Approx(0.0));
    CHECK(o.bands[0].hi == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-6));
    REQUIRE(o.band_gaps.size() == 1);
    CHECK(o.band_gaps[0].lo == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-6));
    CHECK(o.band_gaps[0].hi == doctest::Approx(kPi));
    const auto& dirichlet = o.flat_bands.back();
    CHECK(dirichlet.placement == FlatPlacement::in_gap);
    REQUIRE(o.band_gaps[0].flats_inside.size() == 1);
    CHECK(o.band_gaps[0].flats_inside[0] == doctest::Approx(kPi));
}

TEST_CASE("two-pendant chain momentum spectrum") {
    const auto o = omega_of("z_two_pendants");
    REQUIRE(o.bands.size() == 3);
    CHECK(o.bands[0].hi == doctest::Approx(kPi / 3.0).epsilon(1e-9));
    CHECK(o.bands[2].lo == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-9));
    bool half_pi_flat = false;
    for (const auto& f : o.flat_bands) {
        if (!f.dirichlet && std::abs(f.z - kPi / 2.0) < 1e-9) {
            half_pi_flat = true;
            CHECK(f.placement == FlatPlacement::in_gap);
        }
    }
    CHECK(half_pi_flat);
    REQUIRE(o.band_gaps.size() == 1);  // flat point does not split the gap
    CHECK(o.band_gaps[0].lo == doctest::Approx(kPi / 3.0).epsilon(1e-9));
    CHECK(o.band_gaps[0].hi == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-9));
}

TEST_CASE("hexagonal momentum spectrum is the full interval") {
    const auto o = omega_of("hexagonal");
    CHECK(o.measure == doctest::Approx(kPi).epsilon(1e-9));
    CHECK(o.band_gaps.empty());
    CHECK(o.flat_bands.back().placement == FlatPlacement::embedded);
}

TEST_CASE("unfolding the Z lattice") {
    const auto o = omega_of("z1_lattice");
    const auto u = unfold_momentum(o, 4.0 * kPi);
    REQUIRE(u.ac.intervals().size() == 1);
    CHECK(u.ac.intervals()[0].lo == doctest::Approx(0.0));
    CHECK(u.ac.intervals()[0].hi == doctest::Approx(4.0 * kPi));
    REQUIRE(u.flat_points.size() == 4);
    for (int n = 1; n <= 4; ++n) CHECK(u.flat_points[n - 1] == doctest::Approx(n * kPi));
}

TEST_CASE("unfolding the pendant chain to 2 pi") {
    const auto o = omega_of("z_pendant");
    const auto u = unfold_momentum(o, 2.0 * kPi);
    const double z1 = std::acos(1.0 / 3.0);
    const double z2 = std::acos(-1.0 / 3.0);
    REQUIRE(u.ac.intervals().size() == 3);
    CHECK(u.ac.intervals()[0].lo == doctest::Approx(0.0));
    CHECK(u.ac.intervals()[0].hi == doctest::Approx(z1).epsilon(1e-9));
    CHECK(u.ac.intervals()[1].lo == doctest::Approx(z2).epsilon(1e-9));
    CHECK(u.ac.intervals()[1].hi == doctest::Approx(2.0 * kPi - z2).epsilon(1e-9));
    CHECK(u.ac.intervals()[2].lo == doctest::Approx(2.0 * kPi - z1).epsilon(1e-9));
    CHECK(u.ac.intervals()[2].hi == doctest::Approx(2.0 * kPi).epsilon(1e-9));
}

TEST_CASE("restriction to z_max = pi is the momentum spectrum") {
    for (const auto& name : {"z_pendant", "triangular", "hexagonal"}) {
        const auto o = omega_of(name);
        const auto u = unfold_momentum(o, kPi);
        CHECK(u.ac.measure() == doctest::Approx(o.measure).epsilon(1e-12));
        for (std::size_t i = 0; i < o.ac.segments().size() && i < u.ac.segments().size(); ++i) {
            CHECK(u.ac.segments()[i].lo == doctest::Approx(o.ac.segments()[i].lo));
            CHECK(u.ac.segments()[i].hi ==
                  doctest::Approx(std::min(o.ac.segments()[i].hi, kPi)));
        }
    }
}

TEST_CASE("energy spectrum squares the momentum spectrum") {
    const auto o = omega_of("z_pendant");
    const auto e = energy_spectrum(unfold_momentum(o, 4.0 * kPi));
    const auto egaps = gaps(e.ac, {0.0, 16.0 * kPi * kPi});

    const double z1 = std::acos(1.0 / 3.0);
    const double z2 = std::acos(-1.0 / 3.0);
    REQUIRE(egaps.size() >= 3);
    CHECK(egaps[0].lo == doctest::Approx(z1 * z1).epsilon(1e-9));
    CHECK(egaps[0].hi == doctest::Approx(z2 * z2).epsilon(1e-9));
    CHECK(egaps[1].lo == doctest::Approx((2.0 * kPi - z2) * (2.0 * kPi - z2)).epsilon(1e-9));
    CHECK(egaps[1].hi == doctest::Approx((2.0 * kPi - z1) * (2.0 * kPi - z1)).epsilon(1e-9));

    // successive images of the same gap grow
    double prev = 0.0;
    for (const auto& g : egaps) {
        CHECK(g.length() > prev);
        prev = g.length();
    }

    // flat point pi maps to pi^2
    bool found = false;
    for (double f : e.flat_points)
        if (std::abs(f - kPi * kPi) < 1e-9) found = true;
    CHECK(found);
}

TEST_CASE("gap count matches between the discrete and momentum sides") {
    for (const auto& name : FundamentalGraph::builtin_names()) {
        const auto g = FundamentalGraph::builtin(name);
        const auto t = band_intervals(g);
        const auto o = omega_spectrum(t, detect_flat_bands(t));
        const auto dgaps = gaps(band_union(t), {-1.0, 1.0});
        CHECK(dgaps.size() == o.band_gaps.size());
    }
}

TEST_CASE("full spectrum equivalence") {
    for (const auto& name : FundamentalGraph::builtin_names()) {
        const auto g = FundamentalGraph::builtin(name);
        const auto t = band_intervals(g);
        const auto o = omega_spectrum(t, detect_flat_bands(t));
        const bool omega_full = std::abs(o.measure - kPi) < 1e-9;
        const bool delta_full = std::abs(band_union(t).measure() - 2.0) < 1e-9;
        CHECK(omega_full == delta_full);
    }
}

TEST_CASE("unfold validation") {
    const auto o = omega_of("z1_lattice");
    CHECK_THROWS(unfold_momentum(o, 0.0));
    const auto u = unfold_momentum(o, 4.0 * kPi);
    CHECK_THROWS(energy_spectrum(energy_spectrum(u)));
}
