#include "periband/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace periband {

namespace {

constexpr double kPi = std::numbers::pi;

nlohmann::ordered_json intervals_json(const std::vector<Interval>& list) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& iv : list) arr.push_back({iv.lo, iv.hi});
    return arr;
}

nlohmann::ordered_json set_json(const IntervalSet& s) { return intervals_json(s.intervals()); }

nlohmann::ordered_json gaps_json(const std::vector<Gap>& list) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& g : list) {
        nlohmann::ordered_json item;
        item["lo"] = g.lo;
        item["hi"] = g.hi;
        item["flats_inside"] = g.flats_inside;
        arr.push_back(std::move(item));
    }
    return arr;
}

const char* status_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

}  // namespace

SpectrumReport analyze(const FundamentalGraph& g, const std::string& name,
                       const AnalysisOptions& opts_in) {
    g.check_connected();

    SpectrumReport r;
    r.input_name = name;
    r.graph = g;
    r.opts = opts_in;
    if (r.opts.grid <= 0) r.opts.grid = default_grid(g.dim());
    if (r.opts.z_max <= 0.0) r.opts.z_max = 4.0 * kPi;
    if (r.opts.e_max <= 0.0) r.opts.e_max = 16.0 * kPi * kPi;

    r.cls = g.classify();

    BandOptions bopt;
    bopt.n_per_dim = r.opts.grid;
    bopt.flat_tol = r.opts.flat_tol;
    bopt.parallel = r.opts.parallel;
    r.table = band_intervals(g, bopt);
    r.flats = detect_flat_bands(r.table, r.opts.flat_tol);
    r.delta_spectrum = band_union(r.table);
    r.delta_gaps = gaps(r.delta_spectrum, {-1.0, 1.0});
    r.omega = omega_spectrum(r.table, r.flats);
    r.momentum_unfolded = unfold_momentum(r.omega, r.opts.z_max);
    r.energy = energy_spectrum(unfold_momentum(r.omega, std::sqrt(r.opts.e_max)));
    r.energy_gaps = gaps(r.energy.ac, {0.0, r.opts.e_max});

    CertificationInput ci;
    ci.graph = &r.graph;
    ci.cls = r.cls;
    ci.table = &r.table;
    ci.delta_spectrum = r.delta_spectrum;
    ci.omega = &r.omega;
    r.cert = certify(ci);

    if (g.dim() == 1)
        r.warnings.push_back(
            "d=1: Dirichlet points pi*n are listed but unverified as flat bands for Z-periodic graphs");
    return r;
}

nlohmann::ordered_json report_to_json(const SpectrumReport& r) {
    nlohmann::ordered_json j;
    j["input"] = r.input_name;
    j["dim"] = r.graph.dim();
    j["nu"] = r.graph.num_vertices();
    j["vertices"] = r.graph.vertices();

    {
        nlohmann::ordered_json c;
        c["is_loop_graph"] = r.cls.is_loop_graph;
        if (r.cls.precise_point) c["precise_point"] = *r.cls.precise_point;
        else c["precise_point"] = nullptr;
        c["gamma_bipartite"] = r.cls.gamma_bipartite;
        c["gamma_f_bipartite"] = r.cls.gamma_f_bipartite;
        j["classification"] = std::move(c);
    }
    j["beta"] = r.cls.beta.str();
    j["beta_value"] = r.cls.beta.value();

    {
        nlohmann::ordered_json grid;
        grid["n_per_dim"] = r.opts.grid;
        grid["flat_tol"] = r.opts.flat_tol;
        grid["zmax"] = r.opts.z_max;
        grid["emax"] = r.opts.e_max;
        grid["seed"] = r.opts.seed;
        j["grid"] = std::move(grid);
    }

    {
        nlohmann::ordered_json d;
        nlohmann::ordered_json bands = nlohmann::ordered_json::array();
        for (const auto& b : r.table.bands) {
            nlohmann::ordered_json item;
            item["index"] = b.index;
            item["lo"] = b.lo;
            item["hi"] = b.hi;
            item["flat"] = b.is_flat;
            item["arg_lo"] = b.arg_lo;
            item["arg_hi"] = b.arg_hi;
            bands.push_back(std::move(item));
        }
        d["bands"] = std::move(bands);
        d["spectrum"] = set_json(r.delta_spectrum);
        nlohmann::ordered_json flats = nlohmann::ordered_json::array();
        for (const auto& [mu, idx] : r.flats) {
            nlohmann::ordered_json item;
            item["mu"] = mu;
            item["band"] = idx;
            flats.push_back(std::move(item));
        }
        d["flat_bands"] = std::move(flats);
        d["gaps"] = gaps_json(r.delta_gaps);
        d["measure"] = r.delta_spectrum.measure();
        j["discrete"] = std::move(d);
    }

    {
        nlohmann::ordered_json o;
        o["bands"] = intervals_json(r.omega.bands);
        nlohmann::ordered_json flats = nlohmann::ordered_json::array();
        std::string pi_placement = "embedded";
        for (const auto& f : r.omega.flat_bands) {
            nlohmann::ordered_json item;
            item["z"] = f.z;
            item["dirichlet"] = f.dirichlet;
            item["placement"] = f.placement == FlatPlacement::embedded ? "embedded" : "in_gap";
            if (!f.dirichlet) item["mu"] = f.mu;
            else pi_placement = item["placement"];
            flats.push_back(std::move(item));
        }
        o["flat_bands"] = std::move(flats);
        o["ac"] = set_json(r.omega.ac);
        o["gaps"] = gaps_json(r.omega.band_gaps);
        o["measure"] = r.omega.measure;
        o["pi_flat_band"] = pi_placement;
        j["omega"] = std::move(o);
    }

    {
        nlohmann::ordered_json m;
        m["zmax"] = r.momentum_unfolded.cutoff;
        m["ac"] = set_json(r.momentum_unfolded.ac);
        m["flat_points"] = r.momentum_unfolded.flat_points;
        m["truncated"] = r.momentum_unfolded.truncated;
        j["momentum_unfolded"] = std::move(m);
    }
    {
        nlohmann::ordered_json e;
        e["emax"] = r.energy.cutoff;
        e["ac"] = set_json(r.energy.ac);
        e["flat_points"] = r.energy.flat_points;
        e["gaps"] = gaps_json(r.energy_gaps);
        e["truncated"] = r.energy.truncated;
        j["energy"] = std::move(e);
    }

    {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : r.cert.checks) {
            nlohmann::ordered_json item;
            item["name"] = c.name;
            item["statement"] = c.statement;
            nlohmann::ordered_json vals;
            for (const auto& [k, v] : c.values) vals[k] = v;
            item["values"] = std::move(vals);
            item["tolerance"] = c.tolerance;
            item["status"] = status_string(c.status);
            if (c.status == CheckStatus::skipped) item["skip_reason"] = c.skip_reason;
            checks.push_back(std::move(item));
        }
        j["checks"] = std::move(checks);
    }
    j["all_passed"] = r.cert.all_passed();
    j["warnings"] = r.warnings;
    return j;
}

namespace {

std::string interval_list_text(const nlohmann::ordered_json& arr) {
    std::ostringstream out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out << " u ";
        out << "[" << fmt9(arr[i][0].get<double>()) << ", " << fmt9(arr[i][1].get<double>()) << "]";
    }
    if (arr.empty()) out << "(empty)";
    return out.str();
}

std::string gap_list_text(const nlohmann::ordered_json& arr) {
    std::ostringstream out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out << ", ";
        out << "(" << fmt9(arr[i]["lo"].get<double>()) << ", " << fmt9(arr[i]["hi"].get<double>()) << ")";
        if (!arr[i]["flats_inside"].empty()) {
            out << " [flats:";
            for (const auto& f : arr[i]["flats_inside"]) out << " " << fmt9(f.get<double>());
            out << "]";
        }
    }
    if (arr.empty()) out << "(none)";
    return out.str();
}

}  // namespace

std::string report_to_text(const nlohmann::ordered_json& j) {
    std::ostringstream out;
    out << "graph: " << j["input"].get<std::string>() << "  (dim " << j["dim"].get<int>() << ", nu "
        << j["nu"].get<int>() << ")\n";

    const auto& c = j["classification"];
    out << "classification: loop=" << (c["is_loop_graph"].get<bool>() ? "yes" : "no");
    if (c["precise_point"].is_null()) {
        out << ", precise_point=none";
    } else {
        out << ", precise_point=(";
        for (std::size_t i = 0; i < c["precise_point"].size(); ++i) {
            if (i) out << ", ";
            out << fmt9(c["precise_point"][i].get<double>());
        }
        out << ")";
    }
    out << ", bipartite=" << (c["gamma_bipartite"].get<bool>() ? "yes" : "no");
    out << ", fundamental_bipartite=" << (c["gamma_f_bipartite"].get<bool>() ? "yes" : "no") << "\n";
    out << "beta = " << j["beta"].get<std::string>() << " = " << fmt9(j["beta_value"].get<double>())
        << "\n\n";

    out << "discrete bands:\n";
    for (const auto& b : j["discrete"]["bands"]) {
        out << "  band " << b["index"].get<int>() << ": [" << fmt9(b["lo"].get<double>()) << ", "
            << fmt9(b["hi"].get<double>()) << "]" << (b["flat"].get<bool>() ? "  (flat)" : "") << "\n";
    }
    out << "sigma(D) = " << interval_list_text(j["discrete"]["spectrum"])
        << "   measure " << fmt9(j["discrete"]["measure"].get<double>()) << "\n";
    out << "gaps(D): " << gap_list_text(j["discrete"]["gaps"]) << "\n\n";

    out << "momentum bands:\n";
    const auto& ob = j["omega"]["bands"];
    for (std::size_t i = 0; i < ob.size(); ++i) {
        out << "  band " << i + 1 << ": [" << fmt9(ob[i][0].get<double>()) << ", "
            << fmt9(ob[i][1].get<double>()) << "]\n";
    }
    out << "sigma(Omega) = " << interval_list_text(j["omega"]["ac"]) << "   measure "
        << fmt9(j["omega"]["measure"].get<double>()) << "\n";
    out << "flat bands(Omega):";
    for (const auto& f : j["omega"]["flat_bands"]) {
        out << " " << fmt9(f["z"].get<double>()) << "(" << f["placement"].get<std::string>()
            << (f["dirichlet"].get<bool>() ? ", dirichlet" : "") << ")";
    }
    out << "\n";
    out << "gaps(Omega): " << gap_list_text(j["omega"]["gaps"]) << "\n";
    out << "pi flat band: " << j["omega"]["pi_flat_band"].get<std::string>() << "\n\n";

    out << "sqrt-Laplacian up to zmax=" << fmt9(j["momentum_unfolded"]["zmax"].get<double>()) << ":\n  "
        << interval_list_text(j["momentum_unfolded"]["ac"]) << "\n";
    out << "energy spectrum up to emax=" << fmt9(j["energy"]["emax"].get<double>()) << ":\n  "
        << interval_list_text(j["energy"]["ac"]) << "\n";
    out << "energy gaps: " << gap_list_text(j["energy"]["gaps"]) << "\n\n";

    out << "certifications:\n";
    for (const auto& chk : j["checks"]) {
        out << "  [" << chk["status"].get<std::string>() << "] " << chk["name"].get<std::string>();
        if (chk["status"].get<std::string>() == "skipped") {
            out << "  (" << chk["skip_reason"].get<std::string>() << ")";
        } else {
            out << "  {";
            bool first = true;
            for (const auto& [k, v] : chk["values"].items()) {
                if (!first) out << ", ";
                out << k << "=" << fmt9(v.get<double>());
                first = false;
            }
            out << "}";
        }
        out << "\n";
    }
    out << "all passed: " << (j["all_passed"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& w : j["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
    return out.str();
}

}  // namespace periband
