#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <random>
#include <set>

#include "periband/graph.hpp"

using periband::EdgeSpec;
using periband::FundamentalGraph;
using periband::GraphError;
using periband::ParseError;
using periband::Rational;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent connectivity oracle: count connected components among the
// cells of a finite patch {-radius..radius}^d with no wrap-around, looking
// only at vertices whose cell stays inside the patch.
int patch_component_count(const FundamentalGraph& g, int radius) {
    const int d = g.dim();
    const int width = 2 * radius + 1;
    std::int64_t cells = 1;
    for (int s = 0; s < d; ++s) cells *= width;

    auto cell_of = [&](std::int64_t idx) {
        std::vector<int> c(d);
        for (int s = 0; s < d; ++s) {
            c[s] = static_cast<int>(idx % width) - radius;
            idx /= width;
        }
        return c;
    };
    auto index_of = [&](const std::vector<int>& c) -> std::int64_t {
        std::int64_t idx = 0;
        for (int s = d - 1; s >= 0; --s) {
            if (c[s] < -radius || c[s] > radius) return -1;
            idx = idx * width + (c[s] + radius);
        }
        return idx;
    };

    const int nu = g.num_vertices();
    const std::int64_t total = cells * nu;
    std::vector<int> comp(total, -1);
    int count = 0;
    for (std::int64_t start = 0; start < total; ++start) {
        if (comp[start] >= 0) continue;
        ++count;
        std::queue<std::int64_t> q;
        q.push(start);
        comp[start] = count;
        while (!q.empty()) {
            const std::int64_t cur = q.front();
            q.pop();
            const int v = static_cast<int>(cur % nu);
            const auto cell = cell_of(cur / nu);
            for (const auto& e : g.edges()) {
                for (int dir = 0; dir < 2; ++dir) {
                    const int from = dir == 0 ? e.j : e.k;
                    const int to = dir == 0 ? e.k : e.j;
                    if (from != v) continue;
                    std::vector<int> target = cell;
                    for (int s = 0; s < d; ++s) target[s] += (dir == 0 ? e.tau[s] : -e.tau[s]);
                    const std::int64_t tcell = index_of(target);
                    if (tcell < 0) continue;
                    const std::int64_t ti = tcell * nu + to;
                    if (comp[ti] < 0) {
                        comp[ti] = count;
                        q.push(ti);
                    }
                }
            }
        }
    }
    return count;
}

// Brute-force recount of bridge degrees straight from the incidence rule.
std::vector<int> recount_bridge_degrees(const FundamentalGraph& g) {
    std::vector<int> beta(g.num_vertices(), 0);
    for (const auto& e : g.edges()) {
        if (!e.is_bridge()) continue;
        beta[e.j] += 1;
        beta[e.k] += 1;
    }
    return beta;
}

FundamentalGraph random_graph(std::mt19937_64& rng) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const int nu = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> names;
    for (int v = 0; v < nu; ++v) names.push_back("v" + std::to_string(v));
    std::vector<EdgeSpec> edges;
    // spanning chain keeps the fundamental graph connected
    for (int v = 1; v < nu; ++v) {
        EdgeSpec e;
        e.j = v - 1;
        e.k = v;
        e.tau.assign(d, 0);
        edges.push_back(std::move(e));
    }
    // unit loops on vertex 0 keep the periodic graph connected
    for (int s = 0; s < d; ++s) {
        EdgeSpec e;
        e.j = e.k = 0;
        e.tau.assign(d, 0);
        e.tau[s] = 1;
        edges.push_back(std::move(e));
    }
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) {
        EdgeSpec e;
        e.j = static_cast<int>(rng() % nu);
        e.k = static_cast<int>(rng() % nu);
        e.tau.assign(d, 0);
        for (int s = 0; s < d; ++s) e.tau[s] = static_cast<int>(rng() % 5) - 2;
        edges.push_back(std::move(e));
    }
    return FundamentalGraph::from_parts(d, std::move(names), std::move(edges));
}

}  // namespace

TEST_CASE("parsing the Z lattice") {
    const auto g = FundamentalGraph::parse("dim 1\nvertex a\nedge a a 1\n");
    CHECK(g.num_vertices() == 1);
    CHECK(g.degrees() == std::vector<int>{2});
    CHECK(g.bridge_degrees() == std::vector<int>{2});
    CHECK(g.beta() == Rational(1));
}

TEST_CASE("parsing the pendant chain") {
    const auto g = FundamentalGraph::parse("dim 1\nvertex a\nvertex b\nedge a b 0\nedge a a 1\n");
    CHECK(g.degrees() == std::vector<int>{3, 1});
    CHECK(g.bridge_degrees() == std::vector<int>{2, 0});
    CHECK(g.beta() == Rational(2, 3));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 2\nvertex a\nedge a b 0 0\n"), ParseError);
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 1\nvertex a\nvertex a\nedge a a 1\n"), ParseError);
    CHECK_THROWS_AS(FundamentalGraph::parse("vertex a\n"), ParseError);                  // dim first
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 0\nvertex a\n"), ParseError);           // bad dim
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 1\nvertex a\nedge a a 1 2\n"), ParseError);
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 1\nvertex a\nedge a a\n"), ParseError);  // tau missing
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 1\nedge a a 1\nvertex a\n"), ParseError);
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 1\nvertex a\nvertex b\nedge a a 1\n"), ParseError);
    CHECK_THROWS_AS(FundamentalGraph::parse("dim 1\nbogus x\n"), ParseError);

    try {
        FundamentalGraph::parse("dim 2\nvertex a\nedge a b 0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("undeclared vertex 'b'") != std::string::npos);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    const auto g = FundamentalGraph::parse(
        "# lattice\n\ndim 1\n\nvertex a  # the only vertex\nedge a a 1\n");
    CHECK(g.num_vertices() == 1);
}

TEST_CASE("canonicalization is idempotent and sorts vertices") {
    const std::string text = "dim 1\nvertex b\nvertex a\nedge b a 0\nedge b b -1\n";
    const auto g = FundamentalGraph::parse(text);
    CHECK(g.vertices() == std::vector<std::string>{"a", "b"});
    const auto round = FundamentalGraph::parse(g.serialize());
    CHECK(round == g);
    CHECK(round.serialize() == g.serialize());
    // the loop shift was flipped to its canonical sign
    for (const auto& e : g.edges()) {
        if (e.j == e.k) CHECK(e.tau == std::vector<int>{1});
    }
}

TEST_CASE("edge canonicalization swaps endpoints") {
    EdgeSpec e;
    e.j = 2;
    e.k = 0;
    e.tau = {1, -1};
    e.canonicalize();
    CHECK(e.j == 0);
    CHECK(e.k == 2);
    CHECK(e.tau == std::vector<int>{-1, 1});
}

TEST_CASE("compute beta on the named cells") {
    CHECK(FundamentalGraph::builtin("z1_lattice").beta() == Rational(1));
    CHECK(FundamentalGraph::builtin("z2_lattice").beta() == Rational(1));
    CHECK(FundamentalGraph::builtin("z3_lattice").beta() == Rational(1));
    CHECK(FundamentalGraph::builtin("z_pendant").beta() == Rational(2, 3));
    CHECK(FundamentalGraph::builtin("z_two_pendants").beta() == Rational(1, 2));
    CHECK(FundamentalGraph::builtin("hexagonal").beta() == Rational(4, 3));
    CHECK(FundamentalGraph::builtin("triangular").beta() == Rational(1));
    CHECK(FundamentalGraph::builtin("c4_pendant_chain").beta() == Rational(7, 12));
}

TEST_CASE("connectivity") {
    CHECK_NOTHROW(FundamentalGraph::builtin("z1_lattice").check_connected());
    CHECK_NOTHROW(FundamentalGraph::builtin("hexagonal").check_connected());

    const auto doubled = FundamentalGraph::parse("dim 1\nvertex a\nedge a a 2\n");
    try {
        doubled.check_connected();
        FAIL("expected GraphError");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("proper sublattice") != std::string::npos);
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }
    CHECK(patch_component_count(doubled, 4) > 1);

    const auto split = FundamentalGraph::parse(
        "dim 1\nvertex a\nvertex b\nedge a a 1\nedge b b 1\n");
    CHECK_THROWS_AS(split.check_connected(), GraphError);

    for (const auto& name : FundamentalGraph::builtin_names()) {
        const auto g = FundamentalGraph::builtin(name);
        CHECK_NOTHROW(g.check_connected());
        CHECK(patch_component_count(g, 3) == 1);
    }
}

TEST_CASE("loop graph classification") {
    CHECK(FundamentalGraph::builtin("triangular").is_loop_graph());
    CHECK(FundamentalGraph::builtin("z_pendant").is_loop_graph());
    CHECK(FundamentalGraph::builtin("z3_lattice").is_loop_graph());
    CHECK(!FundamentalGraph::builtin("hexagonal").is_loop_graph());
    CHECK(!FundamentalGraph::builtin("c4_pendant_chain").is_loop_graph());
}

TEST_CASE("precise points") {
    for (const auto& name : {"z1_lattice", "z2_lattice", "z3_lattice"}) {
        const auto g = FundamentalGraph::builtin(name);
        const auto p = g.find_precise_point();
        REQUIRE(p.has_value());
        for (double c : *p) CHECK(c == doctest::Approx(kPi).epsilon(1e-15));
    }
    const auto pendant = FundamentalGraph::builtin("z_pendant").find_precise_point();
    REQUIRE(pendant.has_value());
    CHECK((*pendant)[0] == doctest::Approx(kPi));

    CHECK(!FundamentalGraph::builtin("triangular").find_precise_point().has_value());
    CHECK_THROWS_AS(FundamentalGraph::builtin("hexagonal").find_precise_point(), GraphError);

    // cos<tau, theta0> = -1 on every bridge, to 1e-12
    for (const auto& name : {"z1_lattice", "z2_lattice", "z3_lattice", "z_pendant", "z_two_pendants"}) {
        const auto g = FundamentalGraph::builtin(name);
        const auto p = g.find_precise_point();
        REQUIRE(p.has_value());
        for (const auto& e : g.edges()) {
            if (!e.is_bridge()) continue;
            double phase = 0.0;
            for (int s = 0; s < g.dim(); ++s) phase += e.tau[s] * (*p)[s];
            CHECK(std::abs(std::cos(phase) + 1.0) < 1e-12);
        }
    }
}

TEST_CASE("bipartite classification of the periodic graph") {
    const auto hex = FundamentalGraph::builtin("hexagonal");
    const auto w = hex.bipartite_witness();
    REQUIRE(w.has_value());
    CHECK(w->parity == std::vector<std::uint8_t>{0, 0});
    for (const auto& e : hex.edges()) {
        int parity = w->colors[e.j] ^ w->colors[e.k];
        for (int s = 0; s < hex.dim(); ++s) parity ^= (e.tau[s] % 2 != 0) ? w->parity[s] : 0;
        CHECK(parity == 1);
    }

    CHECK(!FundamentalGraph::builtin("triangular").is_bipartite_periodic());
    const auto pendant = FundamentalGraph::builtin("z_pendant");
    const auto wp = pendant.bipartite_witness();
    REQUIRE(wp.has_value());
    CHECK(wp->parity == std::vector<std::uint8_t>{1});
    CHECK(FundamentalGraph::builtin("z_two_pendants").is_bipartite_periodic());
    CHECK(FundamentalGraph::builtin("c4_pendant_chain").is_bipartite_periodic());

    // a genuine loop makes the periodic graph odd
    const auto looped = FundamentalGraph::parse("dim 1\nvertex a\nedge a a 0\nedge a a 1\n");
    CHECK(!looped.is_bipartite_periodic());
}

TEST_CASE("bipartite classification of the fundamental graph") {
    CHECK(!FundamentalGraph::builtin("z_pendant").is_bipartite_fundamental());  // bridge loops on G_f
    CHECK(FundamentalGraph::builtin("hexagonal").is_bipartite_fundamental());
    CHECK(FundamentalGraph::builtin("c4_pendant_chain").is_bipartite_fundamental());
    // odd cycle in the cell
    const auto odd = FundamentalGraph::parse(
        "dim 1\nvertex a\nvertex b\nvertex c\n"
        "edge a b 0\nedge b c 0\nedge c a 0\nedge a a 1\n");
    CHECK(!odd.is_bipartite_fundamental());
}

TEST_CASE("builtins") {
    CHECK(FundamentalGraph::builtin("z_pendant").degrees() == std::vector<int>{3, 1});
    CHECK(FundamentalGraph::builtin("triangular").edges().size() == 3);
    CHECK_THROWS_AS(FundamentalGraph::builtin("nonexistent"), GraphError);
    for (const auto& name : FundamentalGraph::builtin_names())
        CHECK_NOTHROW(FundamentalGraph::builtin(name));
}

TEST_CASE("degree sum, beta recount, and round trip on random graphs") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng);

        int degree_sum = 0;
        for (int v = 0; v < g.num_vertices(); ++v) degree_sum += g.degrees()[v];
        CHECK(degree_sum == 2 * static_cast<int>(g.edges().size()));

        const auto recount = recount_bridge_degrees(g);
        CHECK(recount == g.bridge_degrees());
        Rational beta(0);
        for (int v = 0; v < g.num_vertices(); ++v)
            beta = beta + Rational(recount[v], g.degrees()[v]);
        CHECK(beta == g.beta());

        const auto round = FundamentalGraph::parse(g.serialize());
        CHECK(round == g);
    }
}

TEST_CASE("classification is invariant under unimodular shift bases") {
    // tau' = U tau with det U = +-1 preserves loop-ness and bipartiteness.
    const std::vector<std::vector<std::vector<int>>> unimodular2 = {
        {{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 0}, {-1, 1}}, {{2, 1}, {1, 1}}};
    for (const auto& name : {"hexagonal", "triangular", "z2_lattice"}) {
        const auto g = FundamentalGraph::builtin(name);
        for (const auto& u : unimodular2) {
            std::vector<EdgeSpec> edges = g.edges();
            for (auto& e : edges) {
                const std::vector<int> t = e.tau;
                for (int r = 0; r < 2; ++r) e.tau[r] = u[r][0] * t[0] + u[r][1] * t[1];
            }
            const auto h = FundamentalGraph::from_parts(g.dim(), g.vertices(), std::move(edges));
            CHECK(h.is_loop_graph() == g.is_loop_graph());
            CHECK(h.is_bipartite_periodic() == g.is_bipartite_periodic());
            CHECK_NOTHROW(h.check_connected());
        }
    }
}
