#include "thetakit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace thetakit {

Graph complement(const Graph& g) {
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.n();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

int girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge closing at depth d gives a
    // cycle of length dist(u)+dist(v)+1.
    const int n = g.n();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    const int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

namespace {

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_kneser(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("kneser: need 1 <= k <= n");
    // Vertices are k-subsets of {0..n-1} in lexicographic order, adjacent
    // when disjoint.
    std::vector<std::uint32_t> subsets;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint32_t mask = 0;
        for (int p : pick) mask |= 1u << p;
        subsets.push_back(mask);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    Graph g(static_cast<int>(subsets.size()));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

Graph make_circulant(int n, std::vector<int> conn) {
    if (n < 1) throw std::invalid_argument("circulant: need n >= 1");
    std::vector<int> canon;
    for (int s : conn) {
        int r = ((s % n) + n) % n;
        if (r == 0) throw std::invalid_argument("circulant: connection 0 mod n not allowed");
        canon.push_back(std::min(r, n - r));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int s : canon) {
            const int v = (u + s) % n;
            if (u != v) g.add_edge(u, v);
        }
    return g;
}

// Classic presentation: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph make_hypercube(int d) {
    if (d < 0 || d > 10) throw std::invalid_argument("hypercube: need 0 <= d <= 10");
    const int n = 1 << d;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b) {
            const int v = u ^ (1 << b);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

} // namespace

Graph named_graph(const std::string& name, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("named_graph: '" + name + "' expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    // Generators exist for test corpora; refuse sizes far past desk scale.
    constexpr int kGeneratorCap = 4096;
    for (int p : params)
        if (p > kGeneratorCap)
            throw std::invalid_argument("named_graph: parameter exceeds generator cap");
    if (name == "cycle") {
        want(1);
        return make_cycle(params[0]);
    }
    if (name == "complete") {
        want(1);
        return make_complete(params[0]);
    }
    if (name == "empty") {
        want(1);
        return Graph(params[0]);
    }
    if (name == "path") {
        want(1);
        return make_path(params[0]);
    }
    if (name == "petersen") {
        want(0);
        return make_petersen();
    }
    if (name == "kneser") {
        want(2);
        return make_kneser(params[0], params[1]);
    }
    if (name == "circulant") {
        if (params.size() < 2)
            throw std::invalid_argument("circulant: need n and at least one connection");
        return make_circulant(params[0], {params.begin() + 1, params.end()});
    }
    if (name == "hypercube") {
        want(1);
        return make_hypercube(params[0]);
    }
    throw std::invalid_argument("named_graph: unknown family '" + name + "'");
}

} // namespace thetakit
