#pragma once

#include <string>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {
namespace oracle {

struct Witness {
    int size = 0;
    std::vector<int> vertices;
};

// Exact maximum clique via branch and bound with a greedy-coloring upper
// bound. Deterministic: vertices explored in descending-degree order with
// index tiebreaks. Witness is re-verified before returning.
Witness max_clique(const Graph& g, int cap = 30);

Witness max_coclique(const Graph& g, int cap = 30);

// Exact chromatic number: iterative deepening on k with a fixed maximum
// clique pre-colored and new-color symmetry pruning.
int chromatic_number(const Graph& g, int cap = 16);

struct CliqueCocliqueReport {
    int n = 0;
    int omega = 0;
    int alpha = 0;
    long long product = 0;
    bool holds = false;      // omega * alpha <= n
    bool qualifies = false;  // homogeneous coherent or 1-walk regular
    std::string structure;   // which qualification matched, or why none did
    Witness clique, coclique;
};

// omega(g) * alpha(g) <= n, exact, for graphs in a homogeneous coherent
// configuration or 1-walk regular graphs.
CliqueCocliqueReport clique_coclique_check(const Graph& g, int cap = 30);

} // namespace oracle
} // namespace thetakit
