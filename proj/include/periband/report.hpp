#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "periband/bands.hpp"
#include "periband/estimates.hpp"
#include "periband/graph.hpp"
#include "periband/momentum.hpp"

namespace periband {

struct AnalysisOptions {
    int grid = 0;            // 0: default for the dimension
    double flat_tol = 1e-8;
    double z_max = 0.0;      // 0: default 4 pi
    double e_max = 0.0;      // 0: default (4 pi)^2
    std::uint64_t seed = 12345;
    bool parallel = true;
};

// Everything the pipeline produces for one graph, ready for serialization.
struct SpectrumReport {
    std::string input_name;
    FundamentalGraph graph;
    Classification cls;
    AnalysisOptions opts;

    BandTable table;
    std::vector<std::pair<double, int>> flats;
    IntervalSet delta_spectrum;
    std::vector<Gap> delta_gaps;
    OmegaSpectrum omega;
    UnfoldedSpectrum momentum_unfolded;
    UnfoldedSpectrum energy;
    std::vector<Gap> energy_gaps;
    CertificationReport cert;
    std::vector<std::string> warnings;
};

// Runs the full pipeline. Throws GraphError/ParseError for invalid input.
SpectrumReport analyze(const FundamentalGraph& g, const std::string& name,
                       const AnalysisOptions& opts = {});

// JSON is the source of truth for reporting; the text form is rendered from
// it with 9 decimal places.
nlohmann::ordered_json report_to_json(const SpectrumReport& r);
std::string report_to_text(const nlohmann::ordered_json& j);

}  // namespace periband
