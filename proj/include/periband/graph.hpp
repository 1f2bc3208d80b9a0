#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "periband/rational.hpp"

namespace periband {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unoriented edge (v_j, v_k + tau): tau shifts the cell of the k endpoint.
// Canonical form: j <= k, and for j == k the shift satisfies tau >= -tau
// lexicographically. (j, k, tau) and (k, j, -tau) denote the same edge.
struct EdgeSpec {
    int j = 0;
    int k = 0;
    std::vector<int> tau;

    bool is_bridge() const;
    void canonicalize();

    bool operator==(const EdgeSpec&) const = default;
    bool operator<(const EdgeSpec& o) const;
};

// Outcome of classify(): the geometric/combinatorial flags the spectral
// estimates condition on.
struct Classification {
    bool is_loop_graph = false;
    std::optional<std::vector<double>> precise_point;  // in {0,pi}^d when found
    bool gamma_bipartite = false;
    bool gamma_f_bipartite = false;
    Rational beta;
};

// Witness for bipartiteness of the periodic graph: the color of vertex
// (v, m) is c[v] + <w, m> mod 2.
struct BipartiteWitness {
    std::vector<std::uint8_t> colors;  // per fundamental vertex
    std::vector<std::uint8_t> parity;  // w, per dimension
};

// Fundamental cell of a Z^d-periodic graph: vertices, edges with integer
// shift vectors, and the derived degree data. Immutable after construction;
// construction canonicalizes (sorted vertices, canonical edge order).
class FundamentalGraph {
public:
    // Empty placeholder; every usable instance comes from parse/from_parts/builtin.
    FundamentalGraph() = default;

    static FundamentalGraph parse(const std::string& text);
    static FundamentalGraph from_parts(int dim, std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

    static FundamentalGraph builtin(const std::string& name);
    static std::vector<std::string> builtin_names();

    int dim() const { return dim_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& bridge_degrees() const { return bridge_degrees_; }
    int degree(int v) const { return degrees_.at(v); }

    // beta = sum_n beta_n / kappa_n, exact.
    Rational beta() const;

    // Throws GraphError unless both the fundamental graph and the full
    // periodic graph are connected (cycle shift vectors must span Z^d).
    void check_connected() const;

    // Every bridge joins a vertex to one of its own translates.
    bool is_loop_graph() const;

    // Searches {0,pi}^d for a point with cos<tau(e), theta0> = -1 on every
    // bridge. Requires is_loop_graph(). Absence means only that no such
    // point exists in {0,pi}^d.
    std::optional<std::vector<double>> find_precise_point() const;

    bool is_bipartite_periodic() const;
    std::optional<BipartiteWitness> bipartite_witness() const;
    bool is_bipartite_fundamental() const;

    Classification classify() const;

    // Canonical graph-file form; parse(serialize()) reproduces *this.
    std::string serialize() const;

    bool operator==(const FundamentalGraph&) const = default;

private:
    void finalize();  // canonicalize, derive degrees, validate

    int dim_ = 0;
    std::vector<std::string> vertices_;
    std::vector<EdgeSpec> edges_;
    std::vector<int> degrees_;
    std::vector<int> bridge_degrees_;
};

}  // namespace periband
