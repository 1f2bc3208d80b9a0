#include "periband/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "periband/fiber.hpp"

namespace periband {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-9;
constexpr double kChainTol = 1e-12;
constexpr double kShortcutTol = 1e-6;
constexpr double kSymmetryTol = 1e-6;
constexpr double kFlatTol = 1e-8;

CheckRecord make_skip(std::string name, std::string statement, std::string reason) {
    CheckRecord r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.status = CheckStatus::skipped;
    r.skip_reason = std::move(reason);
    return r;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

bool CertificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.status != CheckStatus::fail; });
}

const CheckRecord* CertificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

StarSet star_set(double m) {
    if (m < -kChainTol || m > 2.0 + kChainTol)
        throw std::domain_error("star_set: measure outside [0, 2]");
    StarSet s;
    s.lambda_star = 1.0 - std::clamp(m, 0.0, 2.0) / 2.0;
    s.z_star = std::acos(s.lambda_star);
    return s;
}

double preimage_measure(const IntervalSet& s) {
    double total = 0.0;
    for (const auto& seg : s.segments()) {
        if (seg.lo < -1.0 - 1e-12 || seg.hi > 1.0 + 1e-12)
            throw std::domain_error("preimage_measure: set not contained in [-1, 1]");
        total += std::acos(-clamp_unit(seg.hi)) - std::acos(-clamp_unit(seg.lo));
    }
    return total;
}

namespace {

void check_ground_state(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "ground_state";
    r.statement = "lambda_1(0) = -1 with residual |D(0)u + u| <= tol for u = sqrt(deg)";
    r.tolerance = 1e-12;

    const auto& g = *in.graph;
    const std::vector<double> zero(g.dim(), 0.0);
    const FiberMatrix m = fiber_matrix(g, zero);
    const auto eig = hermitian_eigenvalues(m);

    const int nu = g.num_vertices();
    std::vector<double> u(nu);
    double norm = 0.0;
    for (int v = 0; v < nu; ++v) {
        u[v] = std::sqrt(static_cast<double>(g.degrees()[v]));
        norm += u[v] * u[v];
    }
    norm = std::sqrt(norm);
    for (double& x : u) x /= norm;

    double residual = 0.0;
    for (int rrow = 0; rrow < nu; ++rrow) {
        std::complex<double> acc = u[rrow];
        for (int c = 0; c < nu; ++c) acc += m.at(rrow, c) * u[c];
        residual += std::norm(acc);
    }
    residual = std::sqrt(residual);

    r.values = {{"lambda_1_at_zero", eig.front()}, {"residual", residual}};
    r.status = (std::abs(eig.front() + 1.0) <= r.tolerance && residual <= r.tolerance)
                   ? CheckStatus::pass
                   : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_flat_band_magnitude(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "flat_band_magnitude";
    r.statement = "every flat band mu satisfies |mu| < 1 - tol (+-1 can never be flat)";
    r.tolerance = kFlatTol;
    double worst = 0.0;
    for (const auto& b : in.table->bands) {
        if (b.is_flat) worst = std::max(worst, std::abs(0.5 * (b.lo + b.hi)));
    }
    r.values = {{"max_abs_flat_value", worst}};
    r.status = worst < 1.0 - kFlatTol ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_first_omega_band(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "first_omega_band";
    r.statement = "the first momentum band starts at 0: sigma_1(Omega) = [0, z_1^+]";
    r.tolerance = kIdentityTol;
    const double z1_lo = in.omega->bands.front().lo;
    r.values = {{"z_1_minus", z1_lo}};
    r.status = std::abs(z1_lo) <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_band_estimates(const CertificationInput& in, CertificationReport& rep) {
    for (std::size_t n = 0; n < in.table->bands.size(); ++n) {
        CheckRecord r;
        r.name = "band_estimate_" + std::to_string(n + 1);
        r.statement = "|sigma_n(D)| <= |sigma_n(Omega)| <= (pi/sqrt 2)|sigma_n(D)|^(1/2)";
        r.tolerance = kIdentityTol;
        const auto& b = in.table->bands[n];
        const auto& z = in.omega->bands[n];
        const double len_d = b.hi - b.lo;
        const double len_o = z.hi - z.lo;
        const double upper = kPi / std::sqrt(2.0) * std::sqrt(len_d);
        r.values = {{"delta_band_length", len_d}, {"omega_band_length", len_o}, {"upper_bound", upper}};
        r.status = (len_d <= len_o + r.tolerance && len_o <= upper + r.tolerance)
                       ? CheckStatus::pass
                       : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }
}

void check_total_estimate(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "total_estimate";
    r.statement = "|sigma(D)| <= |sigma(Omega)| <= (pi/sqrt 2)|sigma(D)|^(1/2) <= pi sqrt(beta)";
    r.tolerance = kIdentityTol;
    const double md = in.delta_spectrum.measure();
    const double mo = in.omega->measure;
    const double sqrt_bound = kPi / std::sqrt(2.0) * std::sqrt(md);
    const double beta_bound = kPi * std::sqrt(in.cls.beta.value());
    r.values = {{"measure_delta", md},
                {"measure_omega", mo},
                {"sqrt_bound", sqrt_bound},
                {"beta_bound", beta_bound}};
    r.status = (md <= mo + r.tolerance && mo <= sqrt_bound + r.tolerance &&
                sqrt_bound <= beta_bound + r.tolerance)
                   ? CheckStatus::pass
                   : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_gap_sum(const CertificationInput& in, CertificationReport& rep) {
    double gap_sum = 0.0;
    for (const auto& g : in.omega->band_gaps) gap_sum += g.length();
    const double mo = in.omega->measure;

    CheckRecord rid;
    rid.name = "gap_sum_identity";
    rid.statement = "sum of Omega gap lengths = pi - |sigma(Omega)|";
    rid.tolerance = kIdentityTol;
    rid.values = {{"gap_sum", gap_sum}, {"pi_minus_measure", kPi - mo}};
    rid.status = std::abs(gap_sum - (kPi - mo)) <= rid.tolerance ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(rid));

    const double beta = in.cls.beta.value();
    if (beta >= 1.0 && in.omega->band_gaps.empty()) {
        rep.checks.push_back(make_skip("gap_sum_lower_bound",
                                       "sum of Omega gap lengths >= pi(1 - sqrt(beta))",
                                       "beta >= 1 and no gaps exist"));
        return;
    }
    CheckRecord rlb;
    rlb.name = "gap_sum_lower_bound";
    rlb.statement = "sum of Omega gap lengths >= pi(1 - sqrt(beta))";
    rlb.tolerance = kIdentityTol;
    const double bound = kPi * (1.0 - std::sqrt(beta));
    rlb.values = {{"gap_sum", gap_sum}, {"lower_bound", bound}};
    rlb.status = gap_sum >= bound - rlb.tolerance ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(rlb));
}

void check_infinite_gaps(const CertificationInput& in, CertificationReport& rep) {
    const double beta = in.cls.beta.value();
    if (beta >= 1.0) {
        rep.checks.push_back(make_skip("infinite_gaps",
                                       "beta < 1 implies |sigma(D)| < 2 and a gap in sigma(Omega)",
                                       "beta < 1 fails"));
        return;
    }
    CheckRecord r;
    r.name = "infinite_gaps";
    r.statement = "beta < 1 implies |sigma(D)| < 2 and a gap in sigma(Omega)";
    r.tolerance = kIdentityTol;
    const double md = in.delta_spectrum.measure();
    r.values = {{"beta", beta},
                {"measure_delta", md},
                {"omega_gap_count", static_cast<double>(in.omega->band_gaps.size())}};
    r.status = (md < 2.0 - r.tolerance && !in.omega->band_gaps.empty()) ? CheckStatus::pass
                                                                        : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_preimage_chain(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "preimage_chain";
    r.statement =
        "|S| <= |phi^-1(S)| <= |phi^-1(S_*)| <= (pi/sqrt 2)|S|^(1/2) for S = sigma(D)";
    r.tolerance = kChainTol;
    const double m = in.delta_spectrum.measure();
    const double p = preimage_measure(in.delta_spectrum);
    const double star = star_set(m).preimage_measure();
    const double upper = kPi / std::sqrt(2.0) * std::sqrt(m);
    r.values = {{"measure", m}, {"preimage", p}, {"star_preimage", star}, {"upper_bound", upper}};
    r.status = (m <= p + r.tolerance && p <= star + r.tolerance && star <= upper + r.tolerance)
                   ? CheckStatus::pass
                   : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_omega_preimage_identity(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "omega_preimage_identity";
    r.statement = "|sigma(Omega)| = |phi^-1(sigma(D))|";
    r.tolerance = kIdentityTol;
    const double p = preimage_measure(in.delta_spectrum);
    r.values = {{"measure_omega", in.omega->measure}, {"preimage", p}};
    r.status = std::abs(in.omega->measure - p) <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_loop_identities(const CertificationInput& in, CertificationReport& rep) {
    const auto& g = *in.graph;
    const bool loop = in.cls.is_loop_graph;
    const bool precise = in.cls.precise_point.has_value();

    if (!loop) {
        rep.checks.push_back(make_skip("loop_band_minima", "-cos(z_n^-) = lambda_n(0) for all n",
                                       "not a loop graph"));
    } else {
        CheckRecord r;
        r.name = "loop_band_minima";
        r.statement = "-cos(z_n^-) = lambda_n(0) for all n";
        r.tolerance = kIdentityTol;
        const std::vector<double> zero(g.dim(), 0.0);
        const auto at_zero = hermitian_eigenvalues(fiber_matrix(g, zero));
        double worst = 0.0;
        for (std::size_t n = 0; n < in.omega->bands.size(); ++n)
            worst = std::max(worst, std::abs(-std::cos(in.omega->bands[n].lo) - at_zero[n]));
        r.values = {{"max_deviation", worst}};
        r.status = worst <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }

    const char* stmt_max = "-cos(z_n^+) = lambda_n(theta0) for all n";
    const char* stmt_sum = "sum of |sigma_n(D)| = 2 beta";
    const char* stmt_omega = "2 beta <= sum of |sigma_n(Omega)|";
    if (!precise) {
        const std::string why = loop ? "no precise point found in {0,pi}^d" : "not a loop graph";
        rep.checks.push_back(make_skip("precise_band_maxima", stmt_max, why));
        rep.checks.push_back(make_skip("precise_band_sum", stmt_sum, why));
        rep.checks.push_back(make_skip("precise_omega_sum", stmt_omega, why));
    } else {
        const auto at_precise = hermitian_eigenvalues(fiber_matrix(g, *in.cls.precise_point));
        {
            CheckRecord r;
            r.name = "precise_band_maxima";
            r.statement = stmt_max;
            r.tolerance = kIdentityTol;
            double worst = 0.0;
            for (std::size_t n = 0; n < in.omega->bands.size(); ++n)
                worst = std::max(worst, std::abs(-std::cos(in.omega->bands[n].hi) - at_precise[n]));
            r.values = {{"max_deviation", worst}};
            r.status = worst <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
            rep.checks.push_back(std::move(r));
        }
        {
            CheckRecord r;
            r.name = "precise_band_sum";
            r.statement = stmt_sum;
            r.tolerance = kIdentityTol;
            double sum = 0.0;
            for (const auto& b : in.table->bands) sum += b.hi - b.lo;
            const double two_beta = 2.0 * in.cls.beta.value();
            r.values = {{"band_length_sum", sum}, {"two_beta", two_beta}};
            r.status = std::abs(sum - two_beta) <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
            rep.checks.push_back(std::move(r));
        }
        {
            CheckRecord r;
            r.name = "precise_omega_sum";
            r.statement = stmt_omega;
            r.tolerance = kIdentityTol;
            double sum = 0.0;
            for (const auto& z : in.omega->bands) sum += z.hi - z.lo;
            const double two_beta = 2.0 * in.cls.beta.value();
            r.values = {{"two_beta", two_beta}, {"omega_length_sum", sum}};
            r.status = two_beta <= sum + r.tolerance ? CheckStatus::pass : CheckStatus::fail;
            rep.checks.push_back(std::move(r));
        }
    }

    if (!loop) {
        rep.checks.push_back(make_skip("loop_shortcut_consistency",
                                       "refined numeric extrema match the loop-graph endpoint values",
                                       "not a loop graph"));
    } else {
        CheckRecord r;
        r.name = "loop_shortcut_consistency";
        r.statement = "refined numeric extrema match the loop-graph endpoint values";
        r.tolerance = kShortcutTol;
        double worst = 0.0;
        for (const auto& b : in.table->bands) {
            worst = std::max(worst, std::abs(b.lo - b.lo_numeric));
            if (precise) worst = std::max(worst, std::abs(b.hi - b.hi_numeric));
        }
        r.values = {{"max_deviation", worst}};
        r.status = worst <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }
}

void check_bipartite_properties(const CertificationInput& in, CertificationReport& rep) {
    const bool bip = in.cls.gamma_bipartite;
    const auto& omega = *in.omega;

    if (!bip) {
        rep.checks.push_back(make_skip("bipartite_delta_symmetry",
                                       "sigma(D) is symmetric about 0",
                                       "periodic graph not bipartite"));
        rep.checks.push_back(make_skip("bipartite_omega_symmetry",
                                       "sigma(Omega) on (0, pi) is symmetric about pi/2",
                                       "periodic graph not bipartite"));
    } else {
        {
            CheckRecord r;
            r.name = "bipartite_delta_symmetry";
            r.statement = "sigma(D) is symmetric about 0";
            r.tolerance = kSymmetryTol;
            const double h = hausdorff_distance(in.delta_spectrum, in.delta_spectrum.reflected(0.0));
            r.values = {{"hausdorff_distance", h}};
            r.status = h <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
            rep.checks.push_back(std::move(r));
        }
        {
            CheckRecord r;
            r.name = "bipartite_omega_symmetry";
            r.statement = "sigma(Omega) on (0, pi) is symmetric about pi/2";
            r.tolerance = kSymmetryTol;
            const double h = hausdorff_distance(omega.ac, omega.ac.reflected(kPi / 2.0));
            r.values = {{"hausdorff_distance", h}};
            r.status = h <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
            rep.checks.push_back(std::move(r));
        }
    }

    {
        CheckRecord r;
        r.name = "bipartite_pi_ac";
        r.statement = "pi lies in the closure of sigma_ac(Omega) iff the graph is bipartite";
        r.tolerance = kIdentityTol;
        const double dist = omega.ac.distance(kPi);
        const bool pi_in_ac = dist <= r.tolerance;
        r.values = {{"distance_pi_to_ac", dist}, {"bipartite", bip ? 1.0 : 0.0}};
        r.status = pi_in_ac == bip ? CheckStatus::pass : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }

    if (bip) {
        rep.checks.push_back(make_skip("nonbipartite_pi_in_gap",
                                       "for non-bipartite graphs the Dirichlet point pi lies in a gap",
                                       "graph is bipartite"));
    } else {
        CheckRecord r;
        r.name = "nonbipartite_pi_in_gap";
        r.statement = "for non-bipartite graphs the Dirichlet point pi lies in a gap";
        r.tolerance = kIdentityTol;
        const double dist = omega.ac.distance(kPi);
        r.values = {{"distance_pi_to_ac", dist}};
        r.status = dist > r.tolerance ? CheckStatus::pass : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }

    if (!(in.cls.is_loop_graph && bip)) {
        rep.checks.push_back(make_skip("loop_bipartite_endpoints",
                                       "-cos(z_n^-) = lambda_n(0) and cos(z_n^+) = lambda_{nu-n+1}(0)",
                                       in.cls.is_loop_graph ? "periodic graph not bipartite"
                                                            : "not a loop graph"));
    } else {
        CheckRecord r;
        r.name = "loop_bipartite_endpoints";
        r.statement = "-cos(z_n^-) = lambda_n(0) and cos(z_n^+) = lambda_{nu-n+1}(0)";
        r.tolerance = kIdentityTol;
        const std::vector<double> zero(in.graph->dim(), 0.0);
        const auto at_zero = hermitian_eigenvalues(fiber_matrix(*in.graph, zero));
        const int nu = in.graph->num_vertices();
        double worst = 0.0;
        for (int n = 0; n < nu; ++n) {
            worst = std::max(worst, std::abs(-std::cos(omega.bands[n].lo) - at_zero[n]));
            worst = std::max(worst, std::abs(std::cos(omega.bands[n].hi) - at_zero[nu - 1 - n]));
        }
        r.values = {{"max_deviation", worst}};
        r.status = worst <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }

    const int nu = in.graph->num_vertices();
    if (!(in.cls.gamma_f_bipartite && nu % 2 == 1)) {
        rep.checks.push_back(make_skip(
            "odd_bipartite_flat_band",
            "bipartite fundamental graph with odd nu forces flat bands mu = 0 and z = pi/2",
            in.cls.gamma_f_bipartite ? "nu is even" : "fundamental graph not bipartite"));
    } else {
        CheckRecord r;
        r.name = "odd_bipartite_flat_band";
        r.statement = "bipartite fundamental graph with odd nu forces flat bands mu = 0 and z = pi/2";
        r.tolerance = kFlatTol;
        bool mu_zero = false;
        for (const auto& b : in.table->bands) {
            if (b.is_flat && std::abs(0.5 * (b.lo + b.hi)) <= kFlatTol) mu_zero = true;
        }
        bool z_half_pi = false;
        for (const auto& f : omega.flat_bands) {
            if (!f.dirichlet && std::abs(f.z - kPi / 2.0) <= kFlatTol) z_half_pi = true;
        }
        r.values = {{"mu_zero_found", mu_zero ? 1.0 : 0.0}, {"z_half_pi_found", z_half_pi ? 1.0 : 0.0}};
        r.status = (mu_zero && z_half_pi) ? CheckStatus::pass : CheckStatus::fail;
        rep.checks.push_back(std::move(r));
    }
}

void check_gap_count(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "gap_count_correspondence";
    r.statement = "sigma(Omega) and sigma(D) have the same number of gaps";
    r.tolerance = 0.0;
    const auto delta_gaps = gaps(in.delta_spectrum, {-1.0, 1.0});
    r.values = {{"delta_gap_count", static_cast<double>(delta_gaps.size())},
                {"omega_gap_count", static_cast<double>(in.omega->band_gaps.size())}};
    r.status = delta_gaps.size() == in.omega->band_gaps.size() ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_full_spectrum(const CertificationInput& in, CertificationReport& rep) {
    CheckRecord r;
    r.name = "full_spectrum_equivalence";
    r.statement = "sigma(Omega) = [0, pi] iff sigma(D) = [-1, 1]";
    r.tolerance = kIdentityTol;
    const double mo = in.omega->measure;
    const double md = in.delta_spectrum.measure();
    const bool omega_full = std::abs(mo - kPi) <= r.tolerance;
    const bool delta_full = std::abs(md - 2.0) <= r.tolerance;
    r.values = {{"measure_omega", mo}, {"measure_delta", md}};
    r.status = omega_full == delta_full ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

void check_unfolded_gap_growth(const CertificationInput& in, CertificationReport& rep) {
    if (in.omega->band_gaps.empty()) {
        rep.checks.push_back(make_skip("unfolded_gap_growth",
                                       "energy-domain images of each gap grow along successive periods",
                                       "sigma(Omega) has no gaps"));
        return;
    }
    CheckRecord r;
    r.name = "unfolded_gap_growth";
    r.statement = "energy-domain images of each gap grow along successive periods";
    r.tolerance = 0.0;
    bool ok = true;
    double first = 0.0, second = 0.0;
    for (const auto& g : in.omega->band_gaps) {
        // Positions of the unfolded copies of (lo, hi): reflected about pi
        // within each 2 pi period. A trailing gap (hi = pi) merges with its
        // mirror image into one component per period.
        std::vector<std::pair<double, double>> copies;
        const bool trailing = std::abs(g.hi - kPi) <= 1e-12;
        for (int k = 0; k < 3; ++k) {
            const double shift = 2.0 * kPi * k;
            if (trailing) {
                copies.emplace_back(g.lo + shift, 2.0 * kPi - g.lo + shift);
            } else {
                copies.emplace_back(g.lo + shift, g.hi + shift);
                copies.emplace_back(2.0 * kPi - g.hi + shift, 2.0 * kPi - g.lo + shift);
            }
        }
        double prev = -1.0;
        for (std::size_t i = 0; i < copies.size(); ++i) {
            const double len = copies[i].second * copies[i].second - copies[i].first * copies[i].first;
            if (i == 0) first = len;
            if (i == 1) second = len;
            if (len <= prev) ok = false;
            prev = len;
        }
    }
    r.values = {{"first_length", first}, {"second_length", second}};
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    rep.checks.push_back(std::move(r));
}

}  // namespace

CertificationReport certify(const CertificationInput& in) {
    if (!in.graph || !in.table || !in.omega)
        throw std::invalid_argument("certify: incomplete input");
    CertificationReport rep;
    check_ground_state(in, rep);
    check_flat_band_magnitude(in, rep);
    check_first_omega_band(in, rep);
    check_band_estimates(in, rep);
    check_total_estimate(in, rep);
    check_gap_sum(in, rep);
    check_infinite_gaps(in, rep);
    check_preimage_chain(in, rep);
    check_omega_preimage_identity(in, rep);
    check_loop_identities(in, rep);
    check_bipartite_properties(in, rep);
    check_gap_count(in, rep);
    check_full_spectrum(in, rep);
    check_unfolded_gap_growth(in, rep);
    return rep;
}

IntervalSuiteResult run_interval_property_suite(std::uint64_t seed, int n_single, int n_union) {
    IntervalSuiteResult out;
    out.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> pieces(1, 4);

    auto run_case = [&](const IntervalSet& s) {
        const double m = s.measure();
        const double p = preimage_measure(s);
        const double star = star_set(m).preimage_measure();
        const double upper = kPi / std::sqrt(2.0) * std::sqrt(m);
        const double v1 = m - p;
        const double v2 = p - star;
        const double v3 = star - upper;
        const double worst = std::max({v1, v2, v3});
        out.max_violation = std::max(out.max_violation, worst);
        ++out.cases;
        if (worst > kChainTol) ++out.failures;
    };

    for (int i = 0; i < n_single; ++i) {
        double a = unit(rng), b = unit(rng);
        if (a > b) std::swap(a, b);
        run_case(IntervalSet::from_intervals({{a, b}}, /*merge_tol=*/0.0));
    }
    for (int i = 0; i < n_union; ++i) {
        const int k = pieces(rng);
        std::vector<double> cuts(2 * k);
        for (double& c : cuts) c = unit(rng);
        std::sort(cuts.begin(), cuts.end());
        std::vector<Interval> parts;
        for (int j = 0; j < k; ++j) parts.push_back({cuts[2 * j], cuts[2 * j + 1]});
        run_case(IntervalSet::from_intervals(std::move(parts), /*merge_tol=*/0.0));
    }

    // Equality diagnostic: on the full segment the chain collapses to pi.
    const IntervalSet full = IntervalSet::from_intervals({{-1.0, 1.0}});
    const double p = preimage_measure(full);
    const double star = star_set(full.measure()).preimage_measure();
    const double upper = kPi / std::sqrt(2.0) * std::sqrt(full.measure());
    out.equality_at_full =
        std::abs(p - kPi) <= kChainTol && std::abs(star - kPi) <= kChainTol && std::abs(upper - kPi) <= kChainTol;
    return out;
}

}  // namespace periband
