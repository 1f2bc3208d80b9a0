#include "periband/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>

#include "periband/gf2.hpp"
#include "periband/lattice.hpp"

namespace periband {

namespace {

bool tau_is_zero(const std::vector<int>& tau) {
    return std::all_of(tau.begin(), tau.end(), [](int t) { return t == 0; });
}

std::vector<int> negate(std::vector<int> tau) {
    for (int& t : tau) t = -t;
    return tau;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

bool EdgeSpec::is_bridge() const { return !tau_is_zero(tau); }

void EdgeSpec::canonicalize() {
    if (j > k) {
        std::swap(j, k);
        tau = negate(tau);
    } else if (j == k) {
        if (tau < negate(tau)) tau = negate(tau);
    }
}

bool EdgeSpec::operator<(const EdgeSpec& o) const {
    return std::tie(j, k, tau) < std::tie(o.j, o.k, o.tau);
}

FundamentalGraph FundamentalGraph::from_parts(int dim, std::vector<std::string> vertices,
                                              std::vector<EdgeSpec> edges) {
    FundamentalGraph g;
    g.dim_ = dim;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.finalize();
    return g;
}

void FundamentalGraph::finalize() {
    if (dim_ < 1) throw GraphError("dimension must be >= 1");
    if (vertices_.empty()) throw GraphError("graph has no vertices");

    // Canonical vertex order is sorted by name; remap edge endpoints.
    std::vector<int> order(vertices_.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertices_[a] < vertices_[b]; });
    std::vector<int> rank(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
    std::vector<std::string> sorted_names(vertices_.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) sorted_names[i] = vertices_[order[i]];
    for (std::size_t i = 1; i < sorted_names.size(); ++i) {
        if (sorted_names[i] == sorted_names[i - 1])
            throw GraphError("duplicate vertex name '" + sorted_names[i] + "'");
    }
    vertices_ = std::move(sorted_names);

    const int nu = num_vertices();
    for (auto& e : edges_) {
        if (e.j < 0 || e.j >= nu || e.k < 0 || e.k >= nu)
            throw GraphError("edge endpoint out of range");
        if (static_cast<int>(e.tau.size()) != dim_)
            throw GraphError("shift vector length does not match dim");
        e.j = rank[e.j];
        e.k = rank[e.k];
        e.canonicalize();
    }
    std::sort(edges_.begin(), edges_.end());

    degrees_.assign(nu, 0);
    bridge_degrees_.assign(nu, 0);
    for (const auto& e : edges_) {
        degrees_[e.j] += 1;
        degrees_[e.k] += 1;  // loop (j == k) counted twice
        if (e.is_bridge()) {
            bridge_degrees_[e.j] += 1;
            bridge_degrees_[e.k] += 1;
        }
    }
    for (int v = 0; v < nu; ++v) {
        if (degrees_[v] == 0)
            throw GraphError("isolated vertex '" + vertices_[v] + "'");
    }
}

FundamentalGraph FundamentalGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_dim = false;
    bool seen_edge = false;
    int dim = 0;
    std::vector<std::string> vertices;
    std::map<std::string, int> index_of;
    std::vector<EdgeSpec> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;  // blank line

        auto column_of = [&](const std::string& token) {
            auto pos = line.find(token);
            return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
        };

        if (word == "dim") {
            if (have_dim) throw ParseError("repeated dim line", lineno, 1);
            if (!(ls >> dim) || dim < 1) throw ParseError("dim requires a positive integer", lineno, column_of("dim"));
            have_dim = true;
        } else if (word == "vertex") {
            if (!have_dim) throw ParseError("dim line must come first", lineno, 1);
            if (seen_edge) throw ParseError("vertex declared after an edge", lineno, 1);
            std::string name;
            if (!(ls >> name) || !valid_name(name))
                throw ParseError("vertex requires an identifier", lineno, column_of("vertex"));
            if (index_of.count(name))
                throw ParseError("duplicate vertex name '" + name + "'", lineno, column_of(name));
            index_of[name] = static_cast<int>(vertices.size());
            vertices.push_back(name);
        } else if (word == "edge") {
            if (!have_dim) throw ParseError("dim line must come first", lineno, 1);
            seen_edge = true;
            std::string u, v;
            if (!(ls >> u >> v)) throw ParseError("edge requires two vertex names", lineno, column_of("edge"));
            auto iu = index_of.find(u);
            if (iu == index_of.end()) throw ParseError("undeclared vertex '" + u + "'", lineno, column_of(u));
            auto iv = index_of.find(v);
            if (iv == index_of.end()) throw ParseError("undeclared vertex '" + v + "'", lineno, column_of(v));
            EdgeSpec e;
            e.j = iu->second;
            e.k = iv->second;
            e.tau.resize(dim);
            for (int s = 0; s < dim; ++s) {
                if (!(ls >> e.tau[s]))
                    throw ParseError("edge requires " + std::to_string(dim) + " shift components", lineno,
                                     column_of(v));
            }
            int extra;
            if (ls >> extra) throw ParseError("too many shift components", lineno, column_of(v));
            edges.push_back(std::move(e));
        } else {
            throw ParseError("unknown directive '" + word + "'", lineno, column_of(word));
        }

        std::string trailing;
        if (ls >> trailing) throw ParseError("trailing tokens", lineno, column_of(trailing));
    }
    if (!have_dim) throw ParseError("missing dim line", lineno == 0 ? 1 : lineno, 1);

    try {
        return from_parts(dim, std::move(vertices), std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

std::string FundamentalGraph::serialize() const {
    std::ostringstream out;
    out << "dim " << dim_ << "\n";
    for (const auto& v : vertices_) out << "vertex " << v << "\n";
    for (const auto& e : edges_) {
        out << "edge " << vertices_[e.j] << " " << vertices_[e.k];
        for (int t : e.tau) out << " " << t;
        out << "\n";
    }
    return out.str();
}

Rational FundamentalGraph::beta() const {
    Rational b(0);
    for (int v = 0; v < num_vertices(); ++v) {
        b = b + Rational(bridge_degrees_[v], degrees_[v]);
    }
    return b;
}

void FundamentalGraph::check_connected() const {
    const int nu = num_vertices();

    // Spanning tree of the fundamental graph, with Z^d potentials along it.
    std::vector<int> parent(nu, -1);
    std::vector<std::vector<std::int64_t>> potential(nu, std::vector<std::int64_t>(dim_, 0));
    std::vector<char> visited(nu, 0);
    std::vector<char> edge_in_tree(edges_.size(), 0);

    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
            const auto& e = edges_[ei];
            int other = -1;
            int sign = 0;
            if (e.j == v && !visited[e.k]) {
                other = e.k;
                sign = +1;  // crossing j -> k adds tau
            } else if (e.k == v && !visited[e.j]) {
                other = e.j;
                sign = -1;
            }
            if (other < 0) continue;
            visited[other] = 1;
            parent[other] = v;
            edge_in_tree[ei] = 1;
            for (int s = 0; s < dim_; ++s)
                potential[other][s] = potential[v][s] + sign * e.tau[s];
            q.push(other);
            ++reached;
        }
    }
    if (reached != nu) throw GraphError("fundamental graph disconnected");

    // Every non-tree edge closes a cycle with shift tau + p(j) - p(k).
    std::vector<std::vector<std::int64_t>> cycles;
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
        if (edge_in_tree[ei]) continue;
        const auto& e = edges_[ei];
        std::vector<std::int64_t> c(dim_);
        for (int s = 0; s < dim_; ++s)
            c[s] = e.tau[s] + potential[e.j][s] - potential[e.k][s];
        cycles.push_back(std::move(c));
    }

    const LatticeSpan span = lattice_span(cycles, dim_);
    if (!span.is_all_of_zd()) {
        std::string msg = "periodic graph disconnected (cycle vectors generate a proper sublattice";
        if (span.full_rank) msg += ", index " + std::to_string(span.index);
        else msg += " of infinite index";
        msg += ")";
        throw GraphError(msg);
    }
}

bool FundamentalGraph::is_loop_graph() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const EdgeSpec& e) { return !e.is_bridge() || e.j == e.k; });
}

std::optional<std::vector<double>> FundamentalGraph::find_precise_point() const {
    if (!is_loop_graph()) throw GraphError("find_precise_point requires a loop graph");

    // <x, tau(e)> = 1 (mod 2) over all distinct bridge shifts; theta0 = pi*x.
    Gf2System sys(dim_);
    for (const auto& e : edges_) {
        if (!e.is_bridge()) continue;
        std::vector<int> coeffs;
        for (int s = 0; s < dim_; ++s) {
            if (e.tau[s] % 2 != 0) coeffs.push_back(s);
        }
        sys.add_equation(coeffs, 1);
    }
    auto x = sys.solve(/*free_value=*/1);
    if (!x) return std::nullopt;
    std::vector<double> theta0(dim_);
    for (int s = 0; s < dim_; ++s) theta0[s] = (*x)[s] ? std::numbers::pi : 0.0;
    return theta0;
}

std::optional<BipartiteWitness> FundamentalGraph::bipartite_witness() const {
    // Color of (v, m) is c[v] + <w, m> mod 2; each edge must flip the color.
    const int nu = num_vertices();
    Gf2System sys(nu + dim_);
    for (const auto& e : edges_) {
        std::vector<int> coeffs{e.j, e.k};
        for (int s = 0; s < dim_; ++s) {
            if (e.tau[s] % 2 != 0) coeffs.push_back(nu + s);
        }
        sys.add_equation(coeffs, 1);
    }
    auto x = sys.solve();
    if (!x) return std::nullopt;
    BipartiteWitness w;
    w.colors.assign(x->begin(), x->begin() + nu);
    w.parity.assign(x->begin() + nu, x->end());
    return w;
}

bool FundamentalGraph::is_bipartite_periodic() const { return bipartite_witness().has_value(); }

bool FundamentalGraph::is_bipartite_fundamental() const {
    const int nu = num_vertices();
    for (const auto& e : edges_) {
        if (e.j == e.k) return false;  // any loop of the fundamental multigraph
    }
    std::vector<int> color(nu, -1);
    for (int start = 0; start < nu; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const auto& e : edges_) {
                if (e.j != v && e.k != v) continue;
                const int u = e.j == v ? e.k : e.j;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Classification FundamentalGraph::classify() const {
    Classification c;
    c.is_loop_graph = is_loop_graph();
    if (c.is_loop_graph) c.precise_point = find_precise_point();
    c.gamma_bipartite = is_bipartite_periodic();
    c.gamma_f_bipartite = is_bipartite_fundamental();
    c.beta = beta();
    return c;
}

std::vector<std::string> FundamentalGraph::builtin_names() {
    return {"z1_lattice",     "z2_lattice", "z3_lattice",       "hexagonal",
            "triangular",     "z_pendant",  "z_two_pendants",   "c4_pendant_chain"};
}

FundamentalGraph FundamentalGraph::builtin(const std::string& name) {
    auto lattice = [](int d) {
        std::vector<EdgeSpec> edges;
        for (int s = 0; s < d; ++s) {
            EdgeSpec e;
            e.j = e.k = 0;
            e.tau.assign(d, 0);
            e.tau[s] = 1;
            edges.push_back(std::move(e));
        }
        return from_parts(d, {"v"}, std::move(edges));
    };
    auto mk = [](int j, int k, std::vector<int> tau) {
        EdgeSpec e;
        e.j = j;
        e.k = k;
        e.tau = std::move(tau);
        return e;
    };

    if (name == "z1_lattice") return lattice(1);
    if (name == "z2_lattice") return lattice(2);
    if (name == "z3_lattice") return lattice(3);
    if (name == "hexagonal") {
        return from_parts(2, {"a", "b"},
                          {mk(0, 1, {0, 0}), mk(1, 0, {1, 0}), mk(1, 0, {0, 1})});
    }
    if (name == "triangular") {
        return from_parts(2, {"v"}, {mk(0, 0, {1, 0}), mk(0, 0, {0, 1}), mk(0, 0, {1, 1})});
    }
    if (name == "z_pendant") {
        return from_parts(1, {"a", "b"}, {mk(0, 1, {0}), mk(0, 0, {1})});
    }
    if (name == "z_two_pendants") {
        return from_parts(1, {"a", "b", "c"}, {mk(0, 1, {0}), mk(0, 2, {0}), mk(0, 0, {1})});
    }
    if (name == "c4_pendant_chain") {
        return from_parts(1, {"v1", "v2", "v3", "v4", "v5"},
                          {mk(0, 1, {0}), mk(1, 2, {0}), mk(2, 3, {0}), mk(3, 0, {0}),
                           mk(1, 4, {0}), mk(1, 0, {1})});
    }
    throw GraphError("unknown builtin graph '" + name + "'");
}

}  // namespace periband
