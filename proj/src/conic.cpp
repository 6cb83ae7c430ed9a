#include "thetakit/conic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "thetakit/eigen.hpp"
#include "thetakit/kernels.hpp"

namespace thetakit {

const char* variant_name(ThetaVariant v) {
    switch (v) {
        case ThetaVariant::lovasz: return "lovasz";
        case ThetaVariant::schrijver: return "schrijver";
        case ThetaVariant::szegedy: return "szegedy";
    }
    return "?";
}

void ConicProblem::add_cell(int u, int v, CellSense sense) {
    const int n = objective.n();
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
        throw std::invalid_argument("ConicProblem: cell must have 0 <= u < v < n");
    for (const auto& c : cells)
        if (c.u == u && c.v == v) throw std::invalid_argument("ConicProblem: duplicate cell");
    cells.push_back({u, v, sense});
}

ConicProblem theta_problem(const Graph& g, ThetaVariant variant) {
    const int n = g.n();
    ConicProblem p(SymMatrix::ones(n));
    p.equalities.emplace_back(SymMatrix::identity(n), 1.0);
    for (auto [u, v] : g.edges())
        p.add_cell(u, v, variant == ThetaVariant::szegedy ? CellSense::nonpos : CellSense::eq_zero);
    if (variant == ThetaVariant::schrijver) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) p.add_cell(u, v, CellSense::nonneg);
    }
    return p;
}

namespace {

struct CellIdx {
    std::size_t a, b; // mirrored flat indices
    CellSense sense;
};

void project_affine(std::vector<double>& x, const std::vector<CellIdx>& cells,
                    const std::vector<std::pair<SymMatrix, double>>& eqs) {
    for (const auto& c : cells) {
        double v = x[c.a];
        switch (c.sense) {
            case CellSense::eq_zero: v = 0.0; break;
            case CellSense::nonneg: v = std::max(v, 0.0); break;
            case CellSense::nonpos: v = std::min(v, 0.0); break;
        }
        x[c.a] = v;
        x[c.b] = v;
    }
    for (const auto& [A, b] : eqs) {
        const double coef =
            (b - kern::dot(A.data(), x.data(), x.size())) / kern::dot(A.data(), A.data(), A.size());
        kern::axpy(coef, A.data(), x.data(), x.size());
    }
}

double max_affine_violation(const std::vector<double>& z, const std::vector<CellIdx>& cells,
                            const std::vector<std::pair<SymMatrix, double>>& eqs,
                            double* cell_viol_out) {
    double cell_viol = 0.0;
    for (const auto& c : cells) {
        const double v = z[c.a];
        double viol = 0.0;
        switch (c.sense) {
            case CellSense::eq_zero: viol = std::abs(v); break;
            case CellSense::nonneg: viol = std::max(-v, 0.0); break;
            case CellSense::nonpos: viol = std::max(v, 0.0); break;
        }
        cell_viol = std::max(cell_viol, viol);
    }
    double eq_viol = 0.0;
    for (const auto& [A, b] : eqs)
        eq_viol = std::max(eq_viol, std::abs(kern::dot(A.data(), z.data(), z.size()) - b));
    if (cell_viol_out) *cell_viol_out = cell_viol;
    return std::max(cell_viol, eq_viol);
}

} // namespace

ThetaResult solve_conic(const ConicProblem& p, const SolveOptions& opts) {
    const int n = p.objective.n();
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    const Tolerances& tol = opts.tol;

    if (p.equalities.empty() && p.cells.empty() && n == 0)
        throw std::invalid_argument("solve_conic: empty problem");
    // The affine projection is exact only for orthogonal constraint data.
    for (std::size_t i = 0; i < p.equalities.size(); ++i) {
        const auto& Ai = p.equalities[i].first;
        if (kern::dot(Ai.data(), Ai.data(), nn) == 0.0)
            throw std::invalid_argument("solve_conic: zero equality matrix");
        for (std::size_t j = i + 1; j < p.equalities.size(); ++j)
            if (std::abs(inner(Ai, p.equalities[j].first)) != 0.0)
                throw std::invalid_argument("solve_conic: equality matrices must be orthogonal");
        for (const auto& c : p.cells)
            if (Ai(c.u, c.v) != 0.0)
                throw std::invalid_argument("solve_conic: equality matrices must avoid sign cells");
    }

    std::vector<CellIdx> cells;
    cells.reserve(p.cells.size());
    for (const auto& c : p.cells)
        cells.push_back({static_cast<std::size_t>(c.u) * n + c.v,
                         static_cast<std::size_t>(c.v) * n + c.u, c.sense});

    const double* C = p.objective.data();

    std::vector<double> z(nn, 0.0), u(nn, 0.0);
    if (opts.warm_z && opts.warm_z->size() == nn) {
        z = *opts.warm_z;
        if (opts.warm_u && opts.warm_u->size() == nn) u = *opts.warm_u;
    } else {
        // I/n is strictly feasible for every theta problem.
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0 / n;
    }

    double rho = opts.rho0;
    const double alpha = tol.sdp_relax;

    std::vector<double> x(nn), xhat(nn), znew(nn), w(nn);

    ThetaResult res;
    res.tol = tol;
    res.converged = false;

    long it = 0;
    for (; it < tol.sdp_max_iters; ++it) {
        // X-step: project Z - U + C/rho onto the affine/sign set.
        for (std::size_t k = 0; k < nn; ++k) x[k] = z[k] - u[k] + C[k] / rho;
        project_affine(x, cells, p.equalities);

        // Relaxed consensus step.
        for (std::size_t k = 0; k < nn; ++k) xhat[k] = alpha * x[k] + (1.0 - alpha) * z[k];

        for (std::size_t k = 0; k < nn; ++k) w[k] = xhat[k] + u[k];
        znew = psd_project(SymMatrix::from_rowmajor(n, w), tol).raw();

        for (std::size_t k = 0; k < nn; ++k) u[k] += xhat[k] - znew[k];

        const double change2 = kern::diff_norm_sq(znew.data(), z.data(), nn);
        const double primal2 = kern::diff_norm_sq(x.data(), znew.data(), nn);
        z.swap(znew);

        const double znorm = std::sqrt(kern::dot(z.data(), z.data(), nn));
        const double dual_res = rho * std::sqrt(change2);

        if (std::sqrt(change2) <= tol.sdp_iter_change * (1.0 + znorm)) {
            double cell_viol = 0.0;
            const double affine = max_affine_violation(z, cells, p.equalities, &cell_viol);
            const double value = kern::dot(C, z.data(), nn);
            const double obj_gap = std::abs(kern::dot(C, x.data(), nn) - value);
            const double compl_gap = rho * std::abs(kern::dot(u.data(), z.data(), nn));
            const double gap = obj_gap + compl_gap;
            if (!std::isfinite(value)) throw std::runtime_error("solve_conic: non-finite arithmetic");
            if (affine <= tol.sdp_trace_feas && cell_viol <= tol.sdp_sign_viol &&
                gap <= tol.sdp_gap_rel * (1.0 + std::abs(value))) {
                res.converged = true;
                res.primal_residual = affine;
                res.dual_residual = dual_res;
                res.duality_gap = gap;
                ++it;
                break;
            }
        }

        // Residual balancing keeps the two convergence rates comparable.
        if ((it + 1) % 100 == 0) {
            const double pr = std::sqrt(primal2);
            const double dr = dual_res;
            if (!std::isfinite(pr) || !std::isfinite(dr))
                throw std::runtime_error("solve_conic: non-finite arithmetic");
            if (pr > 10.0 * dr && rho < 1e8) {
                rho *= 2.0;
                for (auto& v : u) v *= 0.5;
            } else if (dr > 10.0 * pr && rho > 1e-6) {
                rho *= 0.5;
                for (auto& v : u) v *= 2.0;
            }
        }
    }

    res.iterations = it;
    res.X = SymMatrix::from_rowmajor(n, z);
    res.value = kern::dot(C, res.X.data(), nn);
    if (!res.converged) {
        double cell_viol = 0.0;
        res.primal_residual = max_affine_violation(z, cells, p.equalities, &cell_viol);
        res.dual_residual = 0.0;
        res.duality_gap = std::abs(kern::dot(C, x.data(), nn) - res.value) +
                          opts.rho0 * std::abs(kern::dot(u.data(), z.data(), nn));
    }
    res.dual = std::move(u);
    return res;
}

ThetaResult solve_theta(const Graph& g, ThetaVariant variant, const SolveOptions& opts) {
    if (g.n() > opts.theta_cap)
        throw std::invalid_argument("solve_theta: vertex count exceeds cap");
    if (g.n() == 1) {
        ThetaResult res;
        res.value = 1.0;
        res.X = SymMatrix::identity(1);
        res.variant = variant;
        res.converged = true;
        res.tol = opts.tol;
        return res;
    }
    ThetaResult res = solve_conic(theta_problem(g, variant), opts);
    res.variant = variant;
    return res;
}

} // namespace thetakit
