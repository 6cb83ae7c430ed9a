#pragma once

#include <optional>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/symmatrix.hpp"
#include "thetakit/tolerances.hpp"

namespace thetakit {

enum class ThetaVariant { lovasz, schrijver, szegedy };

const char* variant_name(ThetaVariant v);

enum class CellSense { eq_zero, nonneg, nonpos };

struct CellConstraint {
    int u, v; // u < v, off-diagonal; applies to both mirrored entries
    CellSense sense;
};

// max <C,X>  s.t.  <A_i,X> = b_i,  sign constraints on cells,  X PSD.
//
// The splitting solver needs the affine projection in closed form, so the
// equality matrices must be pairwise orthogonal and vanish on the sign
// cells; theta problems (trace + disjoint cells) satisfy this by
// construction and solve_conic verifies it.
struct ConicProblem {
    SymMatrix objective;
    std::vector<std::pair<SymMatrix, double>> equalities;
    std::vector<CellConstraint> cells;

    explicit ConicProblem(SymMatrix c) : objective(std::move(c)) {}
    void add_cell(int u, int v, CellSense sense);
};

struct SolveOptions {
    Tolerances tol;
    double rho0 = 1.0;
    int theta_cap = 40;
    // Warm start: previous cone-side iterate and scaled dual.
    std::optional<std::vector<double>> warm_z;
    std::optional<std::vector<double>> warm_u;
};

struct ThetaResult {
    double value = 0.0;
    SymMatrix X; // cone-side iterate, PSD by construction
    ThetaVariant variant = ThetaVariant::lovasz;
    double primal_residual = 0.0; // max(|tr X - 1|-style equality gaps, cell violations)
    double dual_residual = 0.0;
    double duality_gap = 0.0;
    long iterations = 0;
    bool converged = false;
    Tolerances tol;
    std::vector<double> dual; // scaled dual iterate, reusable as a warm start

    ThetaResult() : X(1) {}
};

ConicProblem theta_problem(const Graph& g, ThetaVariant variant);

ThetaResult solve_conic(const ConicProblem& p, const SolveOptions& opts = {});

ThetaResult solve_theta(const Graph& g, ThetaVariant variant, const SolveOptions& opts = {});

} // namespace thetakit
