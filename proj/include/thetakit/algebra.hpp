#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thetakit/qmatrix.hpp"
#include "thetakit/tolerances.hpp"

namespace thetakit {

// Pairwise-orthogonal spanning matrices of a matrix *-algebra, exact.
// basis[0] = I always; basis[1] = A for adjacency algebras of nonempty
// graphs.
struct AlgebraBasis {
    int dim = 0;
    std::vector<QMatrix> basis;
    bool contains_J = false;
    bool second_is_A = false;
};

struct OneWalkReport {
    bool is_one_walk_regular = false;
    // (a_k, b_k) for k = 0..dim-1: diagonal and edge-support constants of A^k.
    std::vector<std::pair<mpq_class, mpq_class>> constants;
    // (k, cell) of the first constancy failure.
    std::optional<std::pair<int, std::pair<int, int>>> failure_witness;
};

// Gram-Schmidt under the trace inner product. Linearly dependent inputs
// drop out (exact-zero residual); no normalization, so the first surviving
// input comes back unscaled.
std::vector<QMatrix> gram_schmidt(const std::vector<QMatrix>& mats,
                                  const Tolerances& tol = default_tolerances());

// Orthogonal basis of the algebra generated by the adjacency matrix,
// obtained from I, A, A^2, ... until linear dependence.
AlgebraBasis adjacency_algebra_basis(const Graph& g,
                                     const Tolerances& tol = default_tolerances());

OneWalkReport is_one_walk_regular(const Graph& g,
                                  const Tolerances& tol = default_tolerances());

// Orthogonal projection onto span(basis): sum_i <m,P_i>/<P_i,P_i> P_i.
QMatrix project(const QMatrix& m, const std::vector<QMatrix>& basis,
                const Tolerances& tol = default_tolerances());
QMatrix project(const QMatrix& m, const AlgebraBasis& b,
                const Tolerances& tol = default_tolerances());
// Coherent-configuration classes are disjointly supported, hence orthogonal.
class CoherentConfiguration;
QMatrix project(const QMatrix& m, const CoherentConfiguration& c,
                const Tolerances& tol = default_tolerances());

} // namespace thetakit
