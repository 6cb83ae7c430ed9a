#pragma once

#include <json.hpp>

#include "thetakit/coherent.hpp"
#include "thetakit/conic.hpp"
#include "thetakit/oracle.hpp"
#include "thetakit/verify.hpp"

namespace thetakit {

inline nlohmann::json to_json(const Tolerances& t) {
    return {{"eigh_offdiag_rel", t.eigh_offdiag_rel},
            {"eigh_max_sweeps", t.eigh_max_sweeps},
            {"sdp_trace_feas", t.sdp_trace_feas},
            {"sdp_sign_viol", t.sdp_sign_viol},
            {"sdp_gap_rel", t.sdp_gap_rel},
            {"sdp_iter_change", t.sdp_iter_change},
            {"sdp_max_iters", t.sdp_max_iters},
            {"sdp_relax", t.sdp_relax},
            {"num_tol", t.num_tol},
            {"eq_tol", t.eq_tol},
            {"rational_den_bits", t.rational_den_bits}};
}

inline nlohmann::json to_json(const AxiomReport& r) {
    nlohmann::json j = {{"sum_is_J", r.sum_is_J},
                        {"diagonal_split", r.diagonal_split},
                        {"transpose_closed", r.transpose_closed},
                        {"products_in_span", r.products_in_span},
                        {"all", r.all()}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline nlohmann::json to_json(const CoherentConfiguration& c, const AxiomReport& axioms) {
    nlohmann::json j = {{"n", c.n()},
                        {"d", c.d()},
                        {"color", c.color_matrix()},
                        {"graph_classes", std::vector<int>(c.graph_classes().begin(),
                                                           c.graph_classes().end())},
                        {"axioms", to_json(axioms)},
                        {"homogeneous", c.identity_index().has_value()}};
    if (c.identity_index()) j["identity_index"] = *c.identity_index();
    return j;
}

inline nlohmann::json to_json(const ThetaResult& r) {
    return {{"value", r.value},
            {"variant", variant_name(r.variant)},
            {"converged", r.converged},
            {"iterations", r.iterations},
            {"residuals",
             {{"primal", r.primal_residual}, {"dual", r.dual_residual}, {"gap", r.duality_gap}}},
            {"tolerances", to_json(r.tol)}};
}

namespace verify {

inline nlohmann::json to_json(const ConditionReport& r) {
    nlohmann::json j = {{"condition", std::string(1, r.condition)},
                        {"holds", r.holds},
                        {"max_violation", r.max_violation},
                        {"tolerances", {{"num_tol", r.tol}}}};
    if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
    return j;
}

inline nlohmann::json to_json(const InequalityReport& r) {
    nlohmann::json j = {{"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"slack", r.slack},
                        {"holds", r.holds},
                        {"equality", r.equality},
                        {"tier", tier_name(r.tier)},
                        {"per_term", r.per_term},
                        {"tolerances", {{"num_tol", r.num_tol}, {"eq_tol", r.eq_tol}}}};
    if (r.certificate_residual) j["certificate_residual"] = *r.certificate_residual;
    if (r.precondition_failure) j["precondition_failure"] = *r.precondition_failure;
    return j;
}

inline nlohmann::json to_json(const MainBoundReport& r) {
    return {{"structure", structure_name(r.structure)},
            {"structure_ok", r.structure_ok},
            {"structure_note", r.structure_note},
            {"condition_a", to_json(r.condition_a)},
            {"condition_b", to_json(r.condition_b)},
            {"condition_ok", r.condition_ok},
            {"bound", to_json(r.bound)},
            {"lemma1", to_json(r.lemma1)},
            {"lemma2", to_json(r.lemma2)},
            {"ok", r.ok()}};
}

inline nlohmann::json to_json(const ProductReport& r) {
    return {{"n", r.n},
            {"qualifies", r.qualifies},
            {"structure", r.structure},
            {"theta_g", thetakit::to_json(r.theta_g)},
            {"theta_gc", thetakit::to_json(r.theta_gc)},
            {"schrijver_gc", thetakit::to_json(r.schrijver_gc)},
            {"szegedy_g", thetakit::to_json(r.szegedy_g)},
            {"product_theta", r.product_theta},
            {"product_variants", r.product_variants},
            {"all_converged", r.all_converged},
            {"holds", r.holds},
            {"tolerances",
             {{"equality_tol", r.equality_tol}, {"inequality_tol", r.inequality_tol}}}};
}

inline nlohmann::json to_json(const Lemma0Report& r) {
    nlohmann::json j = {{"homogeneous", r.homogeneous},
                        {"row_col_constant", r.row_col_constant},
                        {"has_irreducible", r.has_irreducible},
                        {"j_in_span", r.j_in_span},
                        {"j_membership_ok", r.j_membership_ok},
                        {"central_ok", r.central_ok},
                        {"class_row_sums", r.class_row_sums},
                        {"ok", r.ok()}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

} // namespace verify

namespace oracle {

inline nlohmann::json to_json(const Witness& w) {
    return {{"size", w.size}, {"vertices", w.vertices}};
}

inline nlohmann::json to_json(const CliqueCocliqueReport& r) {
    return {{"n", r.n},
            {"omega", r.omega},
            {"alpha", r.alpha},
            {"product", r.product},
            {"holds", r.holds},
            {"qualifies", r.qualifies},
            {"structure", r.structure},
            {"clique", to_json(r.clique)},
            {"coclique", to_json(r.coclique)}};
}

} // namespace oracle
} // namespace thetakit
