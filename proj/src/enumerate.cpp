#include "thetakit/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace thetakit {

namespace {

// Degree-sorted vertex groups; the canonical form minimizes over all
// relabelings that keep degrees ascending, which is a nonempty
// isomorphism-invariant subset of S_n.
struct DegreeGroups {
    std::vector<std::vector<int>> groups;

    explicit DegreeGroups(const Graph& g) {
        std::vector<std::pair<int, int>> by_deg;
        for (int v = 0; v < g.n(); ++v) by_deg.emplace_back(g.degree(v), v);
        std::sort(by_deg.begin(), by_deg.end());
        for (std::size_t i = 0; i < by_deg.size();) {
            std::size_t j = i;
            std::vector<int> grp;
            while (j < by_deg.size() && by_deg[j].first == by_deg[i].first)
                grp.push_back(by_deg[j++].second);
            groups.push_back(std::move(grp));
            i = j;
        }
    }

    std::vector<int> first() const {
        std::vector<int> p;
        for (const auto& g : groups) p.insert(p.end(), g.begin(), g.end());
        return p;
    }

    // Odometer over per-group permutations; false when exhausted.
    bool next(std::vector<int>& p) const {
        std::size_t hi = p.size();
        for (std::size_t gi = groups.size(); gi-- > 0;) {
            const std::size_t lo = hi - groups[gi].size();
            if (std::next_permutation(p.begin() + lo, p.begin() + hi)) return true;
            std::sort(p.begin() + lo, p.begin() + hi);
            hi = lo;
        }
        return false;
    }
};

} // namespace

std::uint64_t canonical_form(const Graph& g) {
    const int n = g.n();
    if (n > 11) throw std::invalid_argument("canonical_form: supported for n <= 11");

    std::vector<std::uint16_t> rows(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) rows[u] |= static_cast<std::uint16_t>(1u << v);

    const DegreeGroups dg(g);
    std::vector<int> p = dg.first();
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t code = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                code = (code << 1) | ((rows[p[u]] >> p[v]) & 1u);
        best = std::min(best, code);
    } while (dg.next(p));
    return best;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs: supported for 1 <= n <= 8");
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& h : level) {
            for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                Graph g(m);
                for (auto [u, v] : h.edges()) g.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if (nb & (1u << u)) g.add_edge(u, m - 1);
                if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : enumerate_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

} // namespace thetakit
