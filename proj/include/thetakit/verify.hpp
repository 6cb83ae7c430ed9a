#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetakit/algebra.hpp"
#include "thetakit/coherent.hpp"
#include "thetakit/conic.hpp"
#include "thetakit/symmatrix.hpp"
#include "thetakit/tolerances.hpp"

namespace thetakit {
namespace verify {

enum class Tier { exact, floating };

const char* tier_name(Tier t);

// Sign-pattern conditions against A and the complement's adjacency:
//   (A)  M o A = 0  and  N o Abar = 0
//   (B)  M o A <= 0,  N o Abar = 0  and  N o A >= 0
struct ConditionReport {
    char condition = 'A';
    bool holds = false;
    double max_violation = 0.0;
    std::optional<std::pair<int, int>> witness;
    double tol = 0.0;
};

struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs-lhs for upper bounds, lhs-rhs for lower bounds
    bool holds = false;
    bool equality = false;
    std::vector<double> per_term;                      // <M,P_i><P_i,N> per basis index
    std::optional<double> certificate_residual;        // ||M'N' - mean*J||_F
    Tier tier = Tier::floating;
    double num_tol = 0.0, eq_tol = 0.0;
    std::optional<std::string> precondition_failure;
};

// Orthogonal spanning set usable by the trace-bound checks, kept in both
// exact and double form. Built from an adjacency-algebra basis or from the
// classes of a homogeneous coherent configuration (identity class first).
struct SpanBasis {
    int n = 0;
    std::vector<QMatrix> exact;
    std::vector<std::vector<double>> mats;
    std::vector<double> norms2;
    bool first_is_identity = false;
    bool contains_J = false;

    static SpanBasis from(const AlgebraBasis& b);
    static SpanBasis from(const CoherentConfiguration& c);
};

// Orthogonal projection of a float matrix onto the span.
SymMatrix project(const SymMatrix& m, const SpanBasis& b);

ConditionReport check_condition(const SymMatrix& M, const SymMatrix& N, const Graph& g,
                                char which, const Tolerances& tol = default_tolerances());

// <M',N'> <= (tr M)(tr N)/n under the hypothesis <M,P_i><P_i,N> <= 0 for
// all i != 0; equality iff every such product vanishes.
InequalityReport lemma1_check(const SymMatrix& M, const SymMatrix& N, const SpanBasis& b,
                              const Tolerances& tol = default_tolerances());
InequalityReport lemma1_check_exact(const QMatrix& M, const QMatrix& N, const SpanBasis& b,
                                    const Tolerances& tol = default_tolerances());

// <M',N'> >= (tr JM)(tr JN)/n^2 when I and J lie in the span; equality iff
// M'N' is a multiple of J.
InequalityReport lemma2_check(const SymMatrix& M, const SymMatrix& N, const SpanBasis& b,
                              const Tolerances& tol = default_tolerances());
InequalityReport lemma2_check_exact(const QMatrix& M, const QMatrix& N, const SpanBasis& b,
                                    const Tolerances& tol = default_tolerances());

enum class Structure { coherent, walkregular };

const char* structure_name(Structure s);

struct MainBoundReport {
    Structure structure = Structure::coherent;
    bool structure_ok = false;
    std::string structure_note;
    ConditionReport condition_a, condition_b;
    bool condition_ok = false;
    InequalityReport bound;  // n >= (tr JM)(tr JN)/((tr M)(tr N))
    InequalityReport lemma1; // equality certificate: per-term products
    InequalityReport lemma2; // equality certificate: M'N' proportional to J
    bool ok() const { return structure_ok && condition_ok && bound.holds; }
};

MainBoundReport main_bound_check(const SymMatrix& M, const SymMatrix& N, const Graph& g,
                                 Structure structure, const Tolerances& tol = default_tolerances());
MainBoundReport main_bound_check_exact(const QMatrix& M, const QMatrix& N, const Graph& g,
                                       Structure structure,
                                       const Tolerances& tol = default_tolerances());

struct ProductReport {
    int n = 0;
    bool qualifies = false;
    std::string structure;
    ThetaResult theta_g, theta_gc;      // theta(G), theta(complement)
    ThetaResult schrijver_gc, szegedy_g; // theta-(complement), theta+(G)
    double product_theta = 0.0;    // theta(G) * theta(complement)
    double product_variants = 0.0; // theta-(complement) * theta+(G)
    bool all_converged = false;
    bool holds = false;    // equality at qualifying graphs, >= n otherwise
    double equality_tol = 0.0, inequality_tol = 0.0;
};

ProductReport theta_product_check(const Graph& g, const SolveOptions& opts = {});

struct Lemma0Report {
    bool homogeneous = false;
    bool row_col_constant = false; // (a) each 0/1 class: constant row and column sums
    bool has_irreducible = false;
    bool j_in_span = false;
    bool j_membership_ok = false; // (b) irreducible class present -> J in span
    bool central_ok = false;      // (c) J in span -> row sums equal column sums
    std::vector<long long> class_row_sums;
    std::optional<std::string> witness;
    bool ok() const { return homogeneous && row_col_constant && j_membership_ok && central_ok; }
};

Lemma0Report lemma0_check(const CoherentConfiguration& c);
Lemma0Report lemma0_check(const AlgebraBasis& b, const Graph& g);

} // namespace verify
} // namespace thetakit
