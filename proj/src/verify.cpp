#include "thetakit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "thetakit/kernels.hpp"

namespace thetakit {
namespace verify {

const char* tier_name(Tier t) { return t == Tier::exact ? "exact" : "float"; }

const char* structure_name(Structure s) {
    return s == Structure::coherent ? "coherent" : "walkregular";
}

SpanBasis SpanBasis::from(const AlgebraBasis& b) {
    SpanBasis out;
    out.n = b.basis.front().n();
    out.exact = b.basis;
    out.contains_J = b.contains_J;
    out.first_is_identity = b.basis.front() == QMatrix::identity(out.n);
    for (const QMatrix& p : out.exact) {
        out.mats.push_back(p.to_double());
        out.norms2.push_back(inner(p, p).get_d());
    }
    return out;
}

SpanBasis SpanBasis::from(const CoherentConfiguration& c) {
    SpanBasis out;
    out.n = c.n();
    std::vector<int> order;
    if (c.identity_index()) order.push_back(*c.identity_index());
    for (int k = 0; k < c.num_classes(); ++k)
        if (!c.identity_index() || k != *c.identity_index()) order.push_back(k);
    for (int k : order) out.exact.push_back(c.class_matrix(k));
    out.first_is_identity = c.identity_index().has_value();

    // J lies in the span exactly when the classes partition all cells.
    QMatrix sum(out.n);
    for (const QMatrix& p : out.exact) sum = sum + p;
    out.contains_J = sum == QMatrix::ones(out.n);

    for (const QMatrix& p : out.exact) {
        out.mats.push_back(p.to_double());
        out.norms2.push_back(inner(p, p).get_d());
    }
    return out;
}

SymMatrix project(const SymMatrix& m, const SpanBasis& b) {
    if (m.n() != b.n) throw std::invalid_argument("project: dimension mismatch");
    const std::size_t nn = m.size();
    std::vector<double> out(nn, 0.0);
    for (std::size_t i = 0; i < b.mats.size(); ++i) {
        const double c = kern::dot(m.data(), b.mats[i].data(), nn) / b.norms2[i];
        if (c != 0.0) kern::axpy(c, b.mats[i].data(), out.data(), nn);
    }
    return SymMatrix::from_rowmajor(m.n(), std::move(out));
}

ConditionReport check_condition(const SymMatrix& M, const SymMatrix& N, const Graph& g,
                                char which, const Tolerances& tol) {
    if (M.n() != g.n() || N.n() != g.n())
        throw std::invalid_argument("check_condition: size mismatch");
    ConditionReport rep;
    rep.condition = which;
    rep.tol = tol.num_tol;

    auto note = [&](double viol, int u, int v) {
        if (viol > rep.max_violation) {
            rep.max_violation = viol;
            rep.witness = {u, v};
        }
    };

    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool edge = g.has_edge(u, v);
            if (which == 'A') {
                if (edge)
                    note(std::abs(M(u, v)), u, v); // M o A = 0
                else
                    note(std::abs(N(u, v)), u, v); // N o Abar = 0
            } else if (which == 'B') {
                if (edge) {
                    note(std::max(M(u, v), 0.0), u, v);  // M o A <= 0
                    note(std::max(-N(u, v), 0.0), u, v); // N o A >= 0
                } else {
                    note(std::abs(N(u, v)), u, v); // N o Abar = 0
                }
            } else {
                throw std::invalid_argument("check_condition: condition must be 'A' or 'B'");
            }
        }
    rep.holds = rep.max_violation <= rep.tol;
    if (rep.holds) rep.witness.reset();
    return rep;
}

namespace {

InequalityReport lemma1_core(const std::vector<double>& per_term,
                             const std::vector<double>& norms2, double tr_m, double tr_n, int n,
                             const Tolerances& tol) {
    InequalityReport rep;
    rep.tier = Tier::floating;
    rep.num_tol = tol.num_tol;
    rep.eq_tol = tol.eq_tol;
    rep.per_term = per_term;

    double lhs = 0.0;
    for (std::size_t i = 0; i < per_term.size(); ++i) lhs += per_term[i] / norms2[i];
    rep.lhs = lhs;
    rep.rhs = tr_m * tr_n / n;
    rep.slack = rep.rhs - rep.lhs;
    rep.holds = rep.slack >= -tol.num_tol;

    double worst = 0.0;
    for (std::size_t i = 1; i < per_term.size(); ++i) {
        worst = std::max(worst, std::abs(per_term[i]));
        if (per_term[i] > tol.num_tol && !rep.precondition_failure)
            rep.precondition_failure = "hypothesis violated: <M,P_" + std::to_string(i) +
                                       "><P_" + std::to_string(i) + ",N> > 0";
    }
    rep.equality = worst <= tol.eq_tol;
    return rep;
}

} // namespace

InequalityReport lemma1_check(const SymMatrix& M, const SymMatrix& N, const SpanBasis& b,
                              const Tolerances& tol) {
    if (M.n() != b.n || N.n() != b.n) throw std::invalid_argument("lemma1_check: size mismatch");
    if (!b.first_is_identity) {
        InequalityReport rep;
        rep.tier = Tier::floating;
        rep.num_tol = tol.num_tol;
        rep.eq_tol = tol.eq_tol;
        rep.precondition_failure = "basis is not homogeneous (no identity element first)";
        return rep;
    }
    std::vector<double> per_term(b.mats.size());
    for (std::size_t i = 0; i < b.mats.size(); ++i)
        per_term[i] = kern::dot(M.data(), b.mats[i].data(), M.size()) *
                      kern::dot(b.mats[i].data(), N.data(), N.size());
    return lemma1_core(per_term, b.norms2, M.trace(), N.trace(), b.n, tol);
}

InequalityReport lemma1_check_exact(const QMatrix& M, const QMatrix& N, const SpanBasis& b,
                                    const Tolerances& /*tol*/) {
    InequalityReport rep;
    rep.tier = Tier::exact;
    rep.num_tol = 0.0;
    rep.eq_tol = 0.0;
    if (!b.first_is_identity) {
        rep.precondition_failure = "basis is not homogeneous (no identity element first)";
        return rep;
    }
    mpq_class lhs = 0;
    bool equality = true;
    for (std::size_t i = 0; i < b.exact.size(); ++i) {
        const mpq_class term = inner(M, b.exact[i]) * inner(b.exact[i], N);
        rep.per_term.push_back(term.get_d());
        lhs += term / inner(b.exact[i], b.exact[i]);
        if (i >= 1) {
            if (term > 0 && !rep.precondition_failure)
                rep.precondition_failure = "hypothesis violated: positive per-term product";
            if (term != 0) equality = false;
        }
    }
    const mpq_class rhs = M.trace() * N.trace() / b.n;
    rep.lhs = lhs.get_d();
    rep.rhs = rhs.get_d();
    const mpq_class slack = rhs - lhs;
    rep.slack = slack.get_d();
    rep.holds = slack >= 0;
    rep.equality = equality;
    return rep;
}

InequalityReport lemma2_check(const SymMatrix& M, const SymMatrix& N, const SpanBasis& b,
                              const Tolerances& tol) {
    if (M.n() != b.n || N.n() != b.n) throw std::invalid_argument("lemma2_check: size mismatch");
    if (!b.contains_J)
        throw std::invalid_argument("lemma2_check: J is not in the span; lemma inapplicable");

    InequalityReport rep;
    rep.tier = Tier::floating;
    rep.num_tol = tol.num_tol;
    rep.eq_tol = tol.eq_tol;

    double lhs = 0.0;
    for (std::size_t i = 0; i < b.mats.size(); ++i) {
        const double term = kern::dot(M.data(), b.mats[i].data(), M.size()) *
                            kern::dot(b.mats[i].data(), N.data(), N.size());
        rep.per_term.push_back(term);
        lhs += term / b.norms2[i];
    }
    const int n = b.n;
    rep.lhs = lhs;
    rep.rhs = M.entry_sum() * N.entry_sum() / (static_cast<double>(n) * n);
    rep.slack = rep.lhs - rep.rhs;
    rep.holds = rep.slack >= -tol.num_tol;

    const SymMatrix Mp = project(M, b);
    const SymMatrix Np = project(N, b);
    const std::vector<double> P = multiply_sym(Mp, Np);
    const double mean = kern::sum(P.data(), P.size()) / static_cast<double>(P.size());
    double resid2 = 0.0, norm2 = 0.0;
    for (double v : P) {
        resid2 += (v - mean) * (v - mean);
        norm2 += v * v;
    }
    rep.certificate_residual = std::sqrt(resid2);
    rep.equality = *rep.certificate_residual <= tol.eq_tol * (1.0 + std::sqrt(norm2));
    return rep;
}

InequalityReport lemma2_check_exact(const QMatrix& M, const QMatrix& N, const SpanBasis& b,
                                    const Tolerances& tol) {
    if (!b.contains_J)
        throw std::invalid_argument("lemma2_check: J is not in the span; lemma inapplicable");
    InequalityReport rep;
    rep.tier = Tier::exact;
    rep.num_tol = 0.0;
    rep.eq_tol = 0.0;

    mpq_class lhs = 0;
    for (const QMatrix& P : b.exact) {
        const mpq_class term = inner(M, P) * inner(P, N);
        rep.per_term.push_back(term.get_d());
        lhs += term / inner(P, P);
    }
    const int n = b.n;
    const mpq_class rhs = M.entry_sum() * N.entry_sum() / (mpq_class(n) * n);
    rep.lhs = lhs.get_d();
    rep.rhs = rhs.get_d();
    const mpq_class slack = lhs - rhs;
    rep.slack = slack.get_d();
    rep.holds = slack >= 0;

    const QMatrix Mp = thetakit::project(M, b.exact, tol);
    const QMatrix Np = thetakit::project(N, b.exact, tol);
    const QMatrix P = Mp * Np;
    const mpq_class mean = P.entry_sum() / (mpq_class(n) * n);
    const QMatrix R = P - QMatrix::ones(n).scaled(mean);
    rep.equality = R.is_zero();
    rep.certificate_residual = std::sqrt(inner(R, R).get_d());
    return rep;
}

namespace {

struct StructureCheck {
    bool ok = false;
    std::string note;
    std::optional<SpanBasis> basis;
};

StructureCheck validate_structure(const Graph& g, Structure structure, const Tolerances& tol) {
    StructureCheck out;
    if (structure == Structure::coherent) {
        if (!is_connected(g)) {
            out.note = "coherent-case theorem requires a connected graph";
            return out;
        }
        CoherentConfiguration c = wl_closure(g);
        if (!is_homogeneous(c)) {
            out.note = "coherent closure is not homogeneous";
            return out;
        }
        out.ok = true;
        out.note = "homogeneous coherent closure with " + std::to_string(c.num_classes()) +
                   " classes";
        out.basis = SpanBasis::from(c);
    } else {
        const OneWalkReport rep = is_one_walk_regular(g, tol);
        if (!rep.is_one_walk_regular) {
            out.note = "graph is not 1-walk regular";
            return out;
        }
        const AlgebraBasis b = adjacency_algebra_basis(g, tol);
        if (!b.contains_J) {
            // The paper's 1-walk-regular theorem does not state
            // connectivity, but its proof leans on J being in the algebra;
            // flagged instead of silently proceeding.
            out.note = "1-walk regular, but J is not in the adjacency algebra "
                       "(disconnected); trace lower bound inapplicable";
            return out;
        }
        out.ok = true;
        out.note = "1-walk regular with adjacency algebra of dimension " +
                   std::to_string(b.dim);
        out.basis = SpanBasis::from(b);
    }
    return out;
}

} // namespace

MainBoundReport main_bound_check(const SymMatrix& M, const SymMatrix& N, const Graph& g,
                                 Structure structure, const Tolerances& tol) {
    MainBoundReport rep;
    rep.structure = structure;

    const double tr_m = M.trace(), tr_n = N.trace();
    if (tr_m == 0.0 || tr_n == 0.0)
        throw std::invalid_argument("main_bound_check: tr M and tr N must be nonzero");

    StructureCheck sc = validate_structure(g, structure, tol);
    rep.structure_ok = sc.ok;
    rep.structure_note = sc.note;

    rep.condition_a = check_condition(M, N, g, 'A', tol);
    rep.condition_b = check_condition(M, N, g, 'B', tol);
    rep.condition_ok = rep.condition_a.holds || rep.condition_b.holds;

    rep.bound.tier = Tier::floating;
    rep.bound.num_tol = tol.num_tol;
    rep.bound.eq_tol = tol.eq_tol;
    rep.bound.lhs = M.entry_sum() * N.entry_sum() / (tr_m * tr_n);
    rep.bound.rhs = static_cast<double>(g.n());
    rep.bound.slack = rep.bound.rhs - rep.bound.lhs;
    rep.bound.holds = rep.bound.slack >= -tol.num_tol;

    if (sc.basis) {
        rep.lemma1 = lemma1_check(M, N, *sc.basis, tol);
        rep.lemma2 = lemma2_check(M, N, *sc.basis, tol);
        rep.bound.equality = rep.lemma1.equality && rep.lemma2.equality;
        rep.bound.per_term = rep.lemma1.per_term;
        rep.bound.certificate_residual = rep.lemma2.certificate_residual;
    }
    return rep;
}

MainBoundReport main_bound_check_exact(const QMatrix& M, const QMatrix& N, const Graph& g,
                                       Structure structure, const Tolerances& tol) {
    MainBoundReport rep;
    rep.structure = structure;

    const mpq_class tr_m = M.trace(), tr_n = N.trace();
    if (tr_m == 0 || tr_n == 0)
        throw std::invalid_argument("main_bound_check: tr M and tr N must be nonzero");

    StructureCheck sc = validate_structure(g, structure, tol);
    rep.structure_ok = sc.ok;
    rep.structure_note = sc.note;

    // Rank-one integer inputs convert to doubles exactly.
    const SymMatrix Mf = SymMatrix::from_rational(M);
    const SymMatrix Nf = SymMatrix::from_rational(N);
    rep.condition_a = check_condition(Mf, Nf, g, 'A', tol);
    rep.condition_b = check_condition(Mf, Nf, g, 'B', tol);
    rep.condition_ok = rep.condition_a.holds || rep.condition_b.holds;

    rep.bound.tier = Tier::exact;
    rep.bound.num_tol = 0.0;
    rep.bound.eq_tol = 0.0;
    const mpq_class ratio = M.entry_sum() * N.entry_sum() / (tr_m * tr_n);
    const mpq_class slack = mpq_class(g.n()) - ratio;
    rep.bound.lhs = ratio.get_d();
    rep.bound.rhs = static_cast<double>(g.n());
    rep.bound.slack = slack.get_d();
    rep.bound.holds = slack >= 0;

    if (sc.basis) {
        rep.lemma1 = lemma1_check_exact(M, N, *sc.basis, tol);
        rep.lemma2 = lemma2_check_exact(M, N, *sc.basis, tol);
        rep.bound.equality = rep.lemma1.equality && rep.lemma2.equality;
        rep.bound.per_term = rep.lemma1.per_term;
        rep.bound.certificate_residual = rep.lemma2.certificate_residual;
    }
    return rep;
}

ProductReport theta_product_check(const Graph& g, const SolveOptions& opts) {
    ProductReport rep;
    rep.n = g.n();
    rep.equality_tol = 1e-3 * g.n();
    rep.inequality_tol = 1e-3 * g.n();

    CoherentConfiguration c = wl_closure(g);
    if (is_homogeneous(c)) {
        rep.qualifies = true;
        rep.structure = "homogeneous coherent configuration";
    } else {
        const OneWalkReport owr = is_one_walk_regular(g, opts.tol);
        if (owr.is_one_walk_regular && is_connected(g)) {
            rep.qualifies = true;
            rep.structure = "connected 1-walk regular";
        } else {
            rep.structure = "unstructured (inequality only)";
        }
    }

    const Graph gc = complement(g);
    rep.theta_g = solve_theta(g, ThetaVariant::lovasz, opts);
    rep.theta_gc = solve_theta(gc, ThetaVariant::lovasz, opts);

    SolveOptions warm_gc = opts;
    warm_gc.warm_z = rep.theta_gc.X.raw();
    warm_gc.warm_u = rep.theta_gc.dual;
    rep.schrijver_gc = solve_theta(gc, ThetaVariant::schrijver, warm_gc);

    SolveOptions warm_g = opts;
    warm_g.warm_z = rep.theta_g.X.raw();
    warm_g.warm_u = rep.theta_g.dual;
    rep.szegedy_g = solve_theta(g, ThetaVariant::szegedy, warm_g);

    rep.product_theta = rep.theta_g.value * rep.theta_gc.value;
    rep.product_variants = rep.schrijver_gc.value * rep.szegedy_g.value;
    rep.all_converged = rep.theta_g.converged && rep.theta_gc.converged &&
                        rep.schrijver_gc.converged && rep.szegedy_g.converged;

    const double n = g.n();
    if (rep.qualifies) {
        rep.holds = std::abs(rep.product_theta - n) <= rep.equality_tol &&
                    std::abs(rep.product_variants - n) <= rep.equality_tol;
    } else {
        rep.holds = rep.product_theta >= n - rep.inequality_tol &&
                    rep.product_variants >= n - rep.inequality_tol;
    }
    return rep;
}

namespace {

// Irreducible 0/1 matrix: its digraph is strongly connected.
bool strongly_connected(const std::vector<std::vector<int>>& fwd,
                        const std::vector<std::vector<int>>& bwd) {
    const int n = static_cast<int>(fwd.size());
    for (const auto* adj : {&fwd, &bwd}) {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : (*adj)[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    q.push(v);
                }
        }
        if (cnt != n) return false;
    }
    return true;
}

} // namespace

Lemma0Report lemma0_check(const CoherentConfiguration& c) {
    Lemma0Report rep;
    const int n = c.n();

    CoherentConfiguration copy = c;
    rep.homogeneous = is_homogeneous(copy);

    rep.row_col_constant = true;
    for (int k = 0; k < c.num_classes(); ++k) {
        std::vector<long long> rs(n, 0), cs(n, 0);
        std::vector<std::vector<int>> fwd(n), bwd(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (c.class_contains(k, i, j)) {
                    ++rs[i];
                    ++cs[j];
                    fwd[i].push_back(j);
                    bwd[j].push_back(i);
                }
        const bool row_const = std::all_of(rs.begin(), rs.end(), [&](long long v) { return v == rs[0]; });
        const bool col_const = std::all_of(cs.begin(), cs.end(), [&](long long v) { return v == cs[0]; });
        if (!(row_const && col_const)) {
            rep.row_col_constant = false;
            if (!rep.witness)
                rep.witness = "class " + std::to_string(k) + " has non-constant row or column sums";
        }
        rep.class_row_sums.push_back(rs[0]);
        if (rs[0] > 0 && strongly_connected(fwd, bwd)) rep.has_irreducible = true;
    }

    QMatrix sum(n);
    for (int k = 0; k < c.num_classes(); ++k) sum = sum + c.class_matrix(k);
    rep.j_in_span = sum == QMatrix::ones(n);
    rep.j_membership_ok = !rep.has_irreducible || rep.j_in_span;

    rep.central_ok = true;
    if (rep.j_in_span) {
        for (int k = 0; k < c.num_classes(); ++k) {
            long long rs = 0, cs = 0;
            for (int j = 0; j < n; ++j) {
                rs += c.class_contains(k, 0, j) ? 1 : 0;
                cs += c.class_contains(k, j, 0) ? 1 : 0;
            }
            if (!rep.row_col_constant) break;
            if (rs != cs) {
                rep.central_ok = false;
                if (!rep.witness)
                    rep.witness = "class " + std::to_string(k) + " row sum != column sum";
            }
        }
    }
    return rep;
}

Lemma0Report lemma0_check(const AlgebraBasis& b, const Graph& g) {
    Lemma0Report rep;
    const int n = g.n();

    // Homogeneous: every algebra element has constant diagonal, which for
    // the orthogonal basis means every basis element does.
    rep.homogeneous = true;
    for (const QMatrix& P : b.basis) {
        for (int i = 1; i < n; ++i)
            if (P(i, i) != P(0, 0)) {
                rep.homogeneous = false;
                if (!rep.witness) rep.witness = "basis element with non-constant diagonal";
                break;
            }
        if (!rep.homogeneous) break;
    }

    // The 0/1 generators at hand: I and, for nonempty graphs, A.
    rep.row_col_constant = true;
    rep.class_row_sums.push_back(1);
    if (b.second_is_A) {
        const int d0 = g.degree(0);
        for (int v = 1; v < n; ++v)
            if (g.degree(v) != d0) {
                rep.row_col_constant = false;
                if (!rep.witness) rep.witness = "adjacency matrix has non-constant row sums";
                break;
            }
        rep.class_row_sums.push_back(d0);
    }

    rep.has_irreducible = (n == 1) || (b.second_is_A && is_connected(g));
    rep.j_in_span = b.contains_J;
    rep.j_membership_ok = !rep.has_irreducible || rep.j_in_span;

    rep.central_ok = true;
    if (rep.j_in_span) {
        for (const QMatrix& P : b.basis) {
            mpq_class rs = 0, cs = 0;
            for (int j = 0; j < n; ++j) {
                rs += P(0, j);
                cs += P(j, 0);
            }
            if (rs != cs) {
                rep.central_ok = false;
                if (!rep.witness) rep.witness = "basis element row sum != column sum";
            }
        }
    }
    return rep;
}

} // namespace verify
} // namespace thetakit
