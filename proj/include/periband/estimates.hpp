#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "periband/bands.hpp"
#include "periband/graph.hpp"
#include "periband/interval_set.hpp"
#include "periband/momentum.hpp"

namespace periband {

enum class CheckStatus { pass, fail, skipped };

struct CheckRecord {
    std::string name;
    std::string statement;  // the identity/inequality being certified
    std::vector<std::pair<std::string, double>> values;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::pass;
    std::string skip_reason;

    bool passed() const { return status == CheckStatus::pass; }
};

// Every certified identity and inequality, in a fixed canonical order.
// Inapplicable checks are present but marked skipped with the failed
// precondition named; they never silently disappear.
struct CertificationReport {
    std::vector<CheckRecord> checks;

    bool all_passed() const;
    const CheckRecord* find(const std::string& name) const;
};

// lambda_* = 1 - m/2 and z_* = acos(lambda_*): the two-sided edge set
// [-1,-lambda_*] u [lambda_*,1] of measure m whose momentum preimage
// [0,z_*] u [pi-z_*,pi] has measure 2 z_*, the largest among sets of
// measure m.
struct StarSet {
    double lambda_star = 0.0;
    double z_star = 0.0;

    double preimage_measure() const { return 2.0 * z_star; }
};

StarSet star_set(double m);

// Measure of the phi-preimage of a subset of [-1, 1]:
// sum of acos(-hi) - acos(-lo) over the segments.
double preimage_measure(const IntervalSet& s);

// Inputs the checks need; assembled once by report/analyze.
struct CertificationInput {
    const FundamentalGraph* graph = nullptr;
    Classification cls;
    const BandTable* table = nullptr;
    IntervalSet delta_spectrum;
    const OmegaSpectrum* omega = nullptr;
};

CertificationReport certify(const CertificationInput& in);

// Seeded random-interval suite for the preimage-measure chain
// m <= |phi^-1| <= 2 z_* <= (pi/sqrt 2) sqrt(m).
struct IntervalSuiteResult {
    std::uint64_t seed = 0;
    int cases = 0;
    int failures = 0;
    double max_violation = 0.0;  // largest broken margin seen (0 when clean)
    bool equality_at_full = false;  // chain collapses to equality on [-1, 1]
};

IntervalSuiteResult run_interval_property_suite(std::uint64_t seed, int n_single = 1000,
                                                int n_union = 1000);

}  // namespace periband
