#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetakit {

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
// Immutable in spirit: all operations return new graphs.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
        adj_.assign(static_cast<std::size_t>(n) * n, 0);
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops not allowed");
        adj_[idx(u, v)] = 1;
        adj_[idx(v, u)] = 1;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[idx(u, v)] != 0;
    }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) m += adj_[idx(u, v)];
        return m;
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int v = 0; v < n_; ++v) d += adj_[idx(u, v)];
        return d;
    }

    std::vector<int> neighbors(int u) const {
        check_vertex(u);
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (adj_[idx(u, v)]) out.push_back(v);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[idx(u, v)]) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_;
    std::vector<std::uint8_t> adj_;
};

Graph complement(const Graph& g);
bool is_connected(const Graph& g);

// Shortest cycle length; 0 when the graph is acyclic.
int girth(const Graph& g);

// Generator families: cycle(n), complete(n), empty(n), path(n), petersen,
// kneser(n,k), circulant(n, s1, s2, ...), hypercube(d).
// Circulant connection sets are canonicalized (mod n, symmetric-closed,
// sorted, deduplicated); 0 or a value collapsing to 0 mod n is rejected.
Graph named_graph(const std::string& name, const std::vector<int>& params);

// graph6 codec. Short form (n <= 62) for writing; reading also accepts the
// long form up to `long_form_cap` vertices.
struct Graph6Error : std::runtime_error {
    enum class Kind { bad_header, truncated, bad_char, overlong, trailing };
    Kind kind;
    Graph6Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

Graph parse_graph6(const std::string& text, int long_form_cap = 1000);
std::string write_graph6(const Graph& g);

// Canonical form of a graph on n <= 11 vertices: the minimum upper-triangle
// bit string (graph6 bit order) over all vertex relabelings that sort
// degrees ascending. Equal for isomorphic graphs.
std::uint64_t canonical_form(const Graph& g);

// All graphs on exactly n vertices up to isomorphism (n <= 8), built by
// extending the (n-1)-vertex list one vertex at a time and deduplicating by
// canonical form. Test-corpus generator, not a general-purpose tool.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_connected_graphs(int n);

} // namespace thetakit
