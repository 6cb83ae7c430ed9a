#include "thetakit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "thetakit/algebra.hpp"
#include "thetakit/coherent.hpp"

namespace thetakit {
namespace oracle {

namespace {

using Mask = std::uint64_t;

struct CliqueSearch {
    int n;
    std::vector<Mask> adj; // in search order
    std::vector<int> label; // search order -> original vertex
    Mask best_set = 0;
    int best = 0;

    // Greedy coloring bound: candidates partitioned into color classes; a
    // clique meets each class at most once.
    int color_bound(Mask cand) const {
        int colors = 0;
        while (cand) {
            ++colors;
            Mask cls = cand;
            while (cls) {
                const int v = std::countr_zero(cls);
                cand &= ~(Mask{1} << v);
                cls &= ~adj[v];
                cls &= ~(Mask{1} << v);
            }
        }
        return colors;
    }

    void expand(Mask cur, int cur_size, Mask cand) {
        if (cand == 0) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        if (cur_size + color_bound(cand) <= best) return;
        // Take the lowest-index candidate: branch on v, then exclude it.
        const int v = std::countr_zero(cand);
        const Mask bit = Mask{1} << v;
        expand(cur | bit, cur_size + 1, cand & adj[v]);
        expand(cur, cur_size, cand & ~bit);
    }
};

} // namespace

Witness max_clique(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw std::invalid_argument("max_clique: vertex count exceeds cap");
    if (n > 63) throw std::invalid_argument("max_clique: bitset limit is 63 vertices");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    CliqueSearch s;
    s.n = n;
    s.label = order;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    s.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        s.adj[pos[u]] |= Mask{1} << pos[v];
        s.adj[pos[v]] |= Mask{1} << pos[u];
    }

    s.expand(0, 0, n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1));

    Witness w;
    w.size = s.best;
    for (int i = 0; i < n; ++i)
        if (s.best_set & (Mask{1} << i)) w.vertices.push_back(s.label[i]);
    std::sort(w.vertices.begin(), w.vertices.end());

    for (std::size_t a = 0; a < w.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < w.vertices.size(); ++b)
            if (!g.has_edge(w.vertices[a], w.vertices[b]))
                throw std::logic_error("max_clique: witness verification failed");
    return w;
}

Witness max_coclique(const Graph& g, int cap) {
    Witness w = max_clique(complement(g), cap);
    for (std::size_t a = 0; a < w.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < w.vertices.size(); ++b)
            if (g.has_edge(w.vertices[a], w.vertices[b]))
                throw std::logic_error("max_coclique: witness verification failed");
    return w;
}

namespace {

bool k_colorable(const Graph& g, int k, const std::vector<int>& order, std::vector<int>& color,
                 std::size_t at) {
    if (at == order.size()) return true;
    const int v = order[at];
    int used = 0;
    for (std::size_t i = 0; i < at; ++i) used = std::max(used, color[order[i]] + 1);
    // New colors in index order only: trying color used+2 before used+1
    // would revisit a symmetric assignment.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (k_colorable(g, k, order, color, at + 1)) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

int chromatic_number(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw std::invalid_argument("chromatic_number: vertex count exceeds cap");
    if (g.edge_count() == 0) return 1;

    const Witness clique = max_clique(g, cap);
    std::vector<int> order = clique.vertices;
    std::vector<char> in_clique(n, 0);
    for (int v : order) in_clique[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_clique[v]) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    for (int k = clique.size; k <= n; ++k) {
        std::vector<int> color(n, -1);
        // The clique needs pairwise-distinct colors; fix them.
        for (int i = 0; i < clique.size; ++i) color[order[i]] = i;
        if (k_colorable(g, k, order, color, clique.size)) return k;
    }
    return n; // unreachable: n colors always suffice
}

CliqueCocliqueReport clique_coclique_check(const Graph& g, int cap) {
    CliqueCocliqueReport rep;
    rep.n = g.n();

    CoherentConfiguration closure = wl_closure(g);
    if (is_homogeneous(closure)) {
        rep.qualifies = true;
        rep.structure = "homogeneous coherent configuration";
    } else if (is_one_walk_regular(g).is_one_walk_regular) {
        rep.qualifies = true;
        rep.structure = "1-walk regular";
    } else {
        rep.structure = "neither homogeneous coherent nor 1-walk regular";
    }

    rep.clique = max_clique(g, cap);
    rep.coclique = max_coclique(g, cap);
    rep.omega = rep.clique.size;
    rep.alpha = rep.coclique.size;
    rep.product = static_cast<long long>(rep.omega) * rep.alpha;
    rep.holds = rep.product <= rep.n;
    return rep;
}

} // namespace oracle
} // namespace thetakit
