#include <doctest.h>

#include <random>

#include "periband/interval_set.hpp"

using periband::gaps;
using periband::hausdorff_distance;
using periband::Interval;
using periband::IntervalSet;

TEST_CASE("merging overlapping and touching intervals") {
    const auto s = IntervalSet::from_intervals({{-1.0, 0.0}, {0.0, 1.0}});
    REQUIRE(s.intervals().size() == 1);
    CHECK(s.intervals()[0] == Interval{-1.0, 1.0});
    CHECK(s.measure() == doctest::Approx(2.0));

    const auto t = IntervalSet::from_intervals({{0.5, 2.0}, {-1.0, 1.0}, {3.0, 4.0}});
    REQUIRE(t.intervals().size() == 2);
    CHECK(t.measure() == doctest::Approx(4.0));
}

TEST_CASE("near-touching intervals merge within tolerance") {
    const auto s = IntervalSet::from_intervals({{-1.0, -1e-13}, {1e-13, 1.0}});
    CHECK(s.intervals().size() == 1);
}

TEST_CASE("degenerate points survive only in the open part") {
    const auto s = IntervalSet::from_intervals({{-1.0, -0.5}, {0.0, 0.0}, {0.5, 1.0}, {0.75, 0.75}});
    CHECK(s.points() == std::vector<double>{0.0});  // 0.75 absorbed
    CHECK(s.segments().size() == 2);
    CHECK(s.measure() == doctest::Approx(1.0));
}

TEST_CASE("gaps with hull and trailing convention") {
    SUBCASE("interior and trailing gaps") {
        const auto s = IntervalSet::from_intervals({{-1.0, -1.0 / 3.0}, {1.0 / 3.0, 0.5}});
        const auto gs = gaps(s, {-1.0, 1.0});
        REQUIRE(gs.size() == 2);
        CHECK(gs[0].lo == doctest::Approx(-1.0 / 3.0));
        CHECK(gs[0].hi == doctest::Approx(1.0 / 3.0));
        CHECK(gs[1].lo == doctest::Approx(0.5));
        CHECK(gs[1].hi == doctest::Approx(1.0));
    }
    SUBCASE("full hull has no gaps") {
        const auto s = IntervalSet::from_intervals({{-1.0, 1.0}});
        CHECK(gaps(s, {-1.0, 1.0}).empty());
    }
    SUBCASE("flat points do not split gaps but are annotated") {
        const auto s = IntervalSet::from_intervals({{-1.0, -0.5}, {0.0, 0.0}, {0.5, 1.0}});
        const auto gs = gaps(s, {-1.0, 1.0});
        REQUIRE(gs.size() == 1);
        CHECK(gs[0].lo == doctest::Approx(-0.5));
        CHECK(gs[0].hi == doctest::Approx(0.5));
        CHECK(gs[0].flats_inside == std::vector<double>{0.0});
    }
    SUBCASE("leading gap") {
        const auto s = IntervalSet::from_intervals({{0.5, 1.0}});
        const auto gs = gaps(s, {0.0, 1.0});
        REQUIRE(gs.size() == 1);
        CHECK(gs[0].lo == doctest::Approx(0.0));
        CHECK(gs[0].hi == doctest::Approx(0.5));
    }
}

TEST_CASE("gap partition property on random sets") {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        std::vector<double> cuts(2 * k);
        for (auto& c : cuts) c = u(rng);
        std::sort(cuts.begin(), cuts.end());
        std::vector<Interval> parts;
        for (int i = 0; i < k; ++i) parts.push_back({cuts[2 * i], cuts[2 * i + 1]});
        const auto s = IntervalSet::from_intervals(parts);

        double gap_sum = 0.0;
        for (const auto& g : gaps(s, {-1.0, 1.0})) gap_sum += g.length();
        CHECK(gap_sum + s.measure() == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("reflection and hausdorff distance") {
    const auto s = IntervalSet::from_intervals({{-1.0, -0.25}, {0.25, 1.0}});
    CHECK(hausdorff_distance(s, s.reflected(0.0)) == doctest::Approx(0.0));

    const auto shifted = IntervalSet::from_intervals({{-1.0, -0.25}, {0.35, 1.0}});
    CHECK(hausdorff_distance(s, shifted) == doctest::Approx(0.1));

    const auto asym = IntervalSet::from_intervals({{-1.0, 0.5}});
    CHECK(hausdorff_distance(asym, asym.reflected(0.0)) == doctest::Approx(0.5));
}

TEST_CASE("validation") {
    CHECK_THROWS(IntervalSet::from_intervals({{1.0, 0.0}}));
}
