#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/qmatrix.hpp"

namespace thetakit {

struct AxiomReport {
    bool sum_is_J = false;         // (i)  classes partition all cells
    bool diagonal_split = false;   // (ii) diagonal classes are diagonal
    bool transpose_closed = false; // (iii)
    bool products_in_span = false; // (iv) A_i A_j in span with pattern-consistent coefficients
    std::optional<std::string> witness;

    bool all() const { return sum_is_J && diagonal_split && transpose_closed && products_in_span; }
};

// A set of 0/1 matrices A_0..A_d with the cell-color map. Built either by
// wl_closure (a genuine coherent configuration) or from an explicit matrix
// list (which check_coherent_axioms may reject).
class CoherentConfiguration {
public:
    static CoherentConfiguration from_matrices(const std::vector<QMatrix>& classes);

    int n() const { return n_; }
    int num_classes() const { return static_cast<int>(patterns_.size()); }
    int d() const { return num_classes() - 1; }

    // -1 for cells no class covers (possible only for hand-built inputs).
    int color(int u, int v) const { return color_[static_cast<std::size_t>(u) * n_ + v]; }
    const std::vector<int>& color_matrix() const { return color_; }

    bool class_contains(int k, int u, int v) const {
        return patterns_[k][static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    QMatrix class_matrix(int k) const;
    const std::vector<std::uint8_t>& class_pattern(int k) const { return patterns_[k]; }

    std::optional<int> identity_index() const { return identity_index_; }
    const std::set<int>& graph_classes() const { return graph_classes_; }

    // True when some class equals I; records identity_index.
    bool detect_identity();

private:
    friend CoherentConfiguration wl_closure(const Graph&, int);

    int n_ = 0;
    std::vector<std::vector<std::uint8_t>> patterns_; // one n*n 0/1 map per class
    std::vector<int> color_;                          // row-major, -1 when uncovered
    std::optional<int> identity_index_;
    std::set<int> graph_classes_;
};

// Coherent closure of the graph: Weisfeiler-Leman edge-color stabilization
// starting from (diagonal, edge, non-edge). Class indices are canonical:
// diagonal-first, then row-major first occurrence. The output is certified
// against all four axioms.
CoherentConfiguration wl_closure(const Graph& g, int cap = 256);

AxiomReport check_coherent_axioms(const CoherentConfiguration& c);

bool is_homogeneous(CoherentConfiguration& c);

// One WL refinement round applied to an arbitrary coloring; exposed so
// tests can confirm closure outputs are fixed points.
std::vector<int> wl_refine_once(const std::vector<int>& colors, int n);

} // namespace thetakit
