#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "periband/fiber.hpp"
#include "periband/report.hpp"
#include "periband/torus.hpp"

namespace {

constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

struct InputSpec {
    std::string builtin;
    std::string file;
};

periband::FundamentalGraph load_graph(const InputSpec& in, std::string& name) {
    if (!in.builtin.empty() && !in.file.empty())
        throw periband::GraphError("pass either --builtin or --file, not both");
    if (!in.builtin.empty()) {
        name = in.builtin;
        return periband::FundamentalGraph::builtin(in.builtin);
    }
    if (in.file.empty()) throw periband::GraphError("no input: pass --builtin NAME or --file PATH");
    std::ifstream f(in.file);
    if (!f) throw periband::GraphError("cannot open '" + in.file + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    name = in.file;
    return periband::FundamentalGraph::parse(buf.str());
}

// "a,b:c,d:..." -> list of waypoints in T^d
std::vector<std::vector<double>> parse_path(const std::string& text, int dim) {
    std::vector<std::vector<double>> points;
    std::stringstream ss(text);
    std::string point;
    while (std::getline(ss, point, ':')) {
        std::vector<double> coords;
        std::stringstream ps(point);
        std::string comp;
        while (std::getline(ps, comp, ',')) {
            std::size_t used = 0;
            coords.push_back(std::stod(comp, &used));
            if (used != comp.size()) throw periband::GraphError("bad path component '" + comp + "'");
        }
        if (static_cast<int>(coords.size()) != dim)
            throw periband::GraphError("path point has wrong dimension");
        points.push_back(std::move(coords));
    }
    if (points.empty()) throw periband::GraphError("empty path");
    return points;
}

int cmd_analyze(const InputSpec& in, const periband::AnalysisOptions& opts, const std::string& format) {
    std::string name;
    const auto g = load_graph(in, name);
    const auto report = periband::analyze(g, name, opts);
    const auto j = periband::report_to_json(report);
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << periband::report_to_text(j);
    return report.cert.all_passed() ? 0 : kExitCheckFailed;
}

int cmd_bands(const InputSpec& in, const std::string& path_text, int samples,
              const std::string& sweep_out) {
    std::string name;
    const auto g = load_graph(in, name);
    const auto waypoints = parse_path(path_text, g.dim());
    if (samples < 2) throw periband::GraphError("--samples must be >= 2");

    // Piecewise-linear path, sampled uniformly in arclength, with every
    // waypoint included as a sample.
    std::vector<double> seg_len;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        double l2 = 0.0;
        for (int s = 0; s < g.dim(); ++s) {
            const double d = waypoints[i + 1][s] - waypoints[i][s];
            l2 += d * d;
        }
        seg_len.push_back(std::sqrt(l2));
        total += seg_len.back();
    }

    std::vector<std::pair<double, std::vector<double>>> samples_at;  // (arclength, theta)
    if (waypoints.size() == 1 || total == 0.0) {
        samples_at.emplace_back(0.0, waypoints.front());
    } else {
        double offset = 0.0;
        for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
            const int steps = std::max<int>(
                1, static_cast<int>(std::lround((samples - 1) * seg_len[i] / total)));
            for (int k = 0; k < steps; ++k) {
                const double t = static_cast<double>(k) / steps;
                std::vector<double> theta(g.dim());
                for (int s = 0; s < g.dim(); ++s)
                    theta[s] = waypoints[i][s] + t * (waypoints[i + 1][s] - waypoints[i][s]);
                samples_at.emplace_back(offset + t * seg_len[i], std::move(theta));
            }
            offset += seg_len[i];
        }
        samples_at.emplace_back(offset, waypoints.back());
    }

    std::ostringstream csv;
    csv << "s";
    for (int s = 0; s < g.dim(); ++s) csv << ",theta" << s + 1;
    for (int n = 0; n < g.num_vertices(); ++n) csv << ",lambda" << n + 1;
    csv << "\n";
    csv.precision(12);
    for (const auto& [arc, theta] : samples_at) {
        const auto bv = periband::band_values(g, theta);
        csv << arc;
        for (double t : theta) csv << "," << t;
        for (double l : bv.lambdas) csv << "," << l;
        csv << "\n";
    }

    if (sweep_out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(sweep_out);
        if (!f) throw periband::GraphError("cannot write '" + sweep_out + "'");
        f << csv.str();
    }
    return 0;
}

int cmd_verify(const InputSpec& in, const periband::AnalysisOptions& opts, int oracle_n) {
    std::string name;
    const auto g = load_graph(in, name);

    bool all_ok = true;
    auto row = [&](const std::string& label, bool ok, const std::string& detail) {
        std::printf("%-34s %-5s %s\n", label.c_str(), ok ? "pass" : "FAIL", detail.c_str());
        all_ok = all_ok && ok;
    };

    const double dev = periband::compare_with_floquet(g, oracle_n);
    row("torus oracle (N=" + std::to_string(oracle_n) + ")", dev <= 1e-8,
        "max multiset deviation " + std::to_string(dev));

    const auto report = periband::analyze(g, name, opts);
    for (const auto& c : report.cert.checks) {
        if (c.status == periband::CheckStatus::skipped) {
            std::printf("%-34s %-5s (%s)\n", c.name.c_str(), "skip", c.skip_reason.c_str());
        } else {
            row(c.name, c.passed(), "tol " + std::to_string(c.tolerance));
        }
    }

    const auto suite = periband::run_interval_property_suite(opts.seed);
    row("interval property suite",
        suite.failures == 0 && suite.equality_at_full,
        "cases " + std::to_string(suite.cases) + ", seed " + std::to_string(suite.seed) +
            ", max violation " + std::to_string(suite.max_violation));

    std::printf("%s\n", all_ok ? "VERIFY PASS" : "VERIFY FAIL");
    return all_ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Band structure of the normalized Laplacian on Z^d-periodic graphs, with the "
                 "metric-graph spectrum obtained through the -cos z correspondence and every "
                 "spectral estimate certified at run time"};
    app.require_subcommand(1);

    InputSpec in;
    periband::AnalysisOptions opts;
    std::string format = "text";
    int oracle_n = 6;
    std::string path_text;
    int samples = 128;
    std::string sweep_out;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", in.builtin, "builtin graph name (see list-builtins)");
        cmd->add_option("--file", in.file, "graph file path");
        cmd->add_option("--grid", opts.grid, "samples per torus dimension")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--flat-tol", opts.flat_tol, "flat-band width tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--zmax", opts.z_max, "momentum unfolding cutoff")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opts.seed, "seed for the randomized interval suite");
    };

    auto* analyze = app.add_subcommand("analyze", "full spectral report for one graph");
    add_input(analyze);
    analyze->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* bands = app.add_subcommand("bands", "band functions along a path of quasimomenta (CSV)");
    add_input(bands);
    bands->add_option("--path", path_text, "waypoints, e.g. '0,0:3.14,0'")->required();
    bands->add_option("--samples", samples, "total samples along the path")
        ->check(CLI::Range(2, 1 << 20));
    bands->add_option("--sweep-out", sweep_out, "write CSV here instead of stdout");

    auto* verify = app.add_subcommand("verify", "oracle comparison + all certifications");
    add_input(verify);
    verify->add_option("--oracle-n", oracle_n, "cells per period for the finite-torus oracle")
        ->check(CLI::Range(3, 4096));

    auto* list = app.add_subcommand("list-builtins", "list builtin graphs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& n : periband::FundamentalGraph::builtin_names()) std::cout << n << "\n";
            return 0;
        }
        if (analyze->parsed()) return cmd_analyze(in, opts, format);
        if (bands->parsed()) return cmd_bands(in, path_text, samples, sweep_out);
        if (verify->parsed()) return cmd_verify(in, opts, oracle_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
