#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "thetakit/algebra.hpp"
#include "thetakit/coherent.hpp"
#include "thetakit/conic.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/json_io.hpp"
#include "thetakit/oracle.hpp"
#include "thetakit/verify.hpp"

using nlohmann::json;
using namespace thetakit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitInputError = 3;

// Source grammar: a token that parses as graph6 wins; otherwise
// "name:p1,p2,..." runs a generator; otherwise an existing file supplies
// its first non-comment graph6 line.
Graph load_source(const std::string& token) {
    try {
        return parse_graph6(token);
    } catch (const Graph6Error&) {
    }
    if (const auto colon = token.find(':'); colon != std::string::npos) {
        const std::string name = token.substr(0, colon);
        std::vector<int> params;
        std::stringstream ss(token.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) params.push_back(std::stoi(item));
        return named_graph(name, params);
    }
    if (std::ifstream in(token); in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            return parse_graph6(line);
        }
        throw std::invalid_argument("file '" + token + "' contains no graph6 line");
    }
    throw std::invalid_argument("'" + token + "' is neither graph6, name:params, nor a file");
}

struct StructureFlags {
    bool homogeneous_coherent = false;
    bool one_walk_regular = false;
    bool connected = false;
    bool contains_J = false;
    int closure_classes = 0;
};

StructureFlags detect_structure(const Graph& g) {
    StructureFlags f;
    f.connected = is_connected(g);
    CoherentConfiguration c = wl_closure(g);
    f.closure_classes = c.num_classes();
    f.homogeneous_coherent = is_homogeneous(c);
    f.one_walk_regular = is_one_walk_regular(g).is_one_walk_regular;
    if (f.one_walk_regular) f.contains_J = adjacency_algebra_basis(g).contains_J;
    return f;
}

json structure_json(const StructureFlags& f) {
    return {{"homogeneous_coherent", f.homogeneous_coherent},
            {"one_walk_regular", f.one_walk_regular},
            {"connected", f.connected},
            {"contains_J", f.contains_J},
            {"closure_classes", f.closure_classes}};
}

struct SandwichReport {
    int alpha = 0, chi_complement = 0;
    double schrijver = 0.0, lovasz = 0.0, szegedy = 0.0;
    bool holds = false;
    bool converged = false;
};

SandwichReport sandwich_check(const Graph& g, const SolveOptions& opts) {
    SandwichReport r;
    r.alpha = oracle::max_coclique(g).size;
    r.chi_complement = oracle::chromatic_number(complement(g));
    const ThetaResult lo = solve_theta(g, ThetaVariant::lovasz, opts);
    SolveOptions warm = opts;
    warm.warm_z = lo.X.raw();
    warm.warm_u = lo.dual;
    const ThetaResult sch = solve_theta(g, ThetaVariant::schrijver, warm);
    const ThetaResult sze = solve_theta(g, ThetaVariant::szegedy, warm);
    r.lovasz = lo.value;
    r.schrijver = sch.value;
    r.szegedy = sze.value;
    r.converged = lo.converged && sch.converged && sze.converged;
    const double t = 1e-4;
    r.holds = r.alpha <= r.schrijver + t && r.schrijver <= r.lovasz + t &&
              r.lovasz <= r.szegedy + t && r.szegedy <= r.chi_complement + t;
    return r;
}

json sandwich_json(const SandwichReport& r) {
    return {{"alpha", r.alpha},
            {"schrijver", r.schrijver},
            {"lovasz", r.lovasz},
            {"szegedy", r.szegedy},
            {"chi_complement", r.chi_complement},
            {"holds", r.holds},
            {"converged", r.converged}};
}

// Rank-one matrices of the oracle's clique/coclique witnesses.
QMatrix rank_one(const oracle::Witness& w, int n) {
    QMatrix m(n);
    for (int u : w.vertices)
        for (int v : w.vertices) m(u, v) = 1;
    return m;
}

int cmd_closure(const std::string& source, bool emit_json) {
    const Graph g = load_source(source);
    CoherentConfiguration c = wl_closure(g);
    const AxiomReport axioms = check_coherent_axioms(c);
    const bool homogeneous = is_homogeneous(c);
    if (emit_json) {
        std::cout << to_json(c, axioms).dump(2) << "\n";
    } else {
        std::cout << "n=" << c.n() << " d=" << c.d() << " classes=" << c.num_classes()
                  << " homogeneous=" << (homogeneous ? "yes" : "no") << " graph_classes={";
        bool first = true;
        for (int k : c.graph_classes()) {
            if (!first) std::cout << ",";
            std::cout << k;
            first = false;
        }
        std::cout << "} axioms=" << (axioms.all() ? "pass" : "FAIL") << "\n";
    }
    return axioms.all() ? kExitPass : kExitCheckFailure;
}

int cmd_theta(const std::string& source, bool lovasz, bool schrijver, bool szegedy,
              const SolveOptions& opts, bool emit_json) {
    const Graph g = load_source(source);
    if (!lovasz && !schrijver && !szegedy) lovasz = true;
    json out = json::array();
    bool all_converged = true;
    std::vector<std::pair<const char*, ThetaVariant>> wanted;
    if (lovasz) wanted.emplace_back("lovasz", ThetaVariant::lovasz);
    if (schrijver) wanted.emplace_back("schrijver", ThetaVariant::schrijver);
    if (szegedy) wanted.emplace_back("szegedy", ThetaVariant::szegedy);
    for (auto [name, variant] : wanted) {
        const ThetaResult r = solve_theta(g, variant, opts);
        all_converged = all_converged && r.converged;
        if (emit_json) {
            out.push_back(to_json(r));
        } else {
            std::cout << name << " = " << std::fixed;
            std::cout.precision(6);
            std::cout << r.value << "  (primal=" << std::scientific << r.primal_residual
                      << " gap=" << r.duality_gap << " iters=" << r.iterations
                      << (r.converged ? "" : " NOT CONVERGED") << ")\n";
            std::cout.unsetf(std::ios::floatfield);
        }
    }
    if (emit_json) std::cout << out.dump(2) << "\n";
    return all_converged ? kExitPass : kExitNoConvergence;
}

struct VerifySelection {
    bool lemma0 = false, cliquecoclique = false, mainbound = false, products = false,
         sandwich = false;
    bool any() const { return lemma0 || cliquecoclique || mainbound || products || sandwich; }
};

json run_verify_checks(const Graph& g, const VerifySelection& sel, const SolveOptions& opts,
                       bool& all_pass, bool& any_nonconverged) {
    const StructureFlags flags = detect_structure(g);
    json checks = json::array();
    auto add = [&](const std::string& name, bool pass, json report) {
        report["check"] = name;
        report["pass"] = pass;
        // failing reports sort first
        if (!pass)
            checks.insert(checks.begin(), std::move(report));
        else
            checks.push_back(std::move(report));
        all_pass = all_pass && pass;
    };

    if (sel.lemma0) {
        if (flags.homogeneous_coherent) {
            CoherentConfiguration c = wl_closure(g);
            const verify::Lemma0Report rep = verify::lemma0_check(c);
            add("lemma0/coherent", rep.ok(), verify::to_json(rep));
        }
        if (flags.one_walk_regular) {
            const verify::Lemma0Report rep = verify::lemma0_check(adjacency_algebra_basis(g), g);
            add("lemma0/walkregular", rep.ok(), verify::to_json(rep));
        }
        if (!flags.homogeneous_coherent && !flags.one_walk_regular)
            add("lemma0", true, json{{"note", "not applicable: no homogeneous structure"}});
    }

    if (sel.cliquecoclique) {
        const oracle::CliqueCocliqueReport rep = oracle::clique_coclique_check(g);
        const bool pass = !rep.qualifies || rep.holds;
        add("clique_coclique", pass, oracle::to_json(rep));
    }

    if (sel.mainbound) {
        const auto clique = oracle::max_clique(g);
        const auto coclique = oracle::max_coclique(g);
        const QMatrix M = rank_one(coclique, g.n()); // M o A = 0
        const QMatrix N = rank_one(clique, g.n());   // N o Abar = 0
        bool applicable = false;
        if (flags.homogeneous_coherent && flags.connected) {
            applicable = true;
            const auto rep = verify::main_bound_check_exact(M, N, g, verify::Structure::coherent);
            add("main_bound/coherent", rep.ok(), verify::to_json(rep));
        }
        if (flags.one_walk_regular && flags.contains_J) {
            applicable = true;
            const auto rep = verify::main_bound_check_exact(M, N, g, verify::Structure::walkregular);
            add("main_bound/walkregular", rep.ok(), verify::to_json(rep));
        }
        if (!applicable)
            add("main_bound", true, json{{"note", "not applicable: no qualifying structure"}});
    }

    if (sel.products) {
        const verify::ProductReport rep = verify::theta_product_check(g, opts);
        any_nonconverged = any_nonconverged || !rep.all_converged;
        add("theta_products", rep.holds, verify::to_json(rep));
    }

    if (sel.sandwich) {
        const SandwichReport rep = sandwich_check(g, opts);
        any_nonconverged = any_nonconverged || !rep.converged;
        add("sandwich_chain", rep.holds, sandwich_json(rep));
    }

    json out;
    out["structure"] = structure_json(flags);
    out["checks"] = std::move(checks);
    return out;
}

int cmd_verify(const std::string& source, VerifySelection sel, bool all,
               const SolveOptions& opts, bool emit_json) {
    const Graph g = load_source(source);
    if (all || !sel.any()) sel = {true, true, true, true, true};

    const auto t0 = std::chrono::steady_clock::now();
    bool all_pass = true;
    bool any_nonconverged = false;
    json report = run_verify_checks(g, sel, opts, all_pass, any_nonconverged);
    report["graph"] = source;
    report["n"] = g.n();
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report["tolerances"] = to_json(opts.tol);
    report["pass"] = all_pass;

    if (emit_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& chk : report["checks"])
            std::cout << (chk["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                      << chk["check"].get<std::string>() << "\n";
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    if (!all_pass) return kExitCheckFailure;
    if (any_nonconverged) return kExitNoConvergence;
    return kExitPass;
}

struct BatchRow {
    std::string graph;
    bool parse_error = false;
    std::string error;
    int n = 0;
    StructureFlags flags;
    int omega = 0, alpha = 0;
    double theta = 0.0, theta_c = 0.0, schrijver_c = 0.0, szegedy = 0.0;
    double product_theta = 0.0, product_variants = 0.0;
    bool products_pass = false, cliquecoclique_pass = false;
    bool converged = true;
};

BatchRow batch_one(const std::string& line, const SolveOptions& opts) {
    BatchRow row;
    row.graph = line;
    try {
        const Graph g = parse_graph6(line);
        row.n = g.n();
        row.flags = detect_structure(g);
        row.omega = oracle::max_clique(g).size;
        row.alpha = oracle::max_coclique(g).size;
        const verify::ProductReport rep = verify::theta_product_check(g, opts);
        row.theta = rep.theta_g.value;
        row.theta_c = rep.theta_gc.value;
        row.schrijver_c = rep.schrijver_gc.value;
        row.szegedy = rep.szegedy_g.value;
        row.product_theta = rep.product_theta;
        row.product_variants = rep.product_variants;
        row.products_pass = rep.holds;
        row.converged = rep.all_converged;
        const oracle::CliqueCocliqueReport cc = oracle::clique_coclique_check(g);
        row.cliquecoclique_pass = !cc.qualifies || cc.holds;
    } catch (const std::exception& e) {
        row.parse_error = true;
        row.error = e.what();
    }
    return row;
}

int cmd_batch(const std::string& path, int jobs, bool emit_json, const SolveOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return kExitInputError;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }

    std::vector<BatchRow> rows(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) break;
            rows[i] = batch_one(lines[i], opts);
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t failures = 0;
    if (emit_json) {
        json out = json::array();
        for (const BatchRow& r : rows) {
            json j;
            j["graph"] = r.graph;
            if (r.parse_error) {
                j["error"] = r.error;
                ++failures;
            } else {
                j["n"] = r.n;
                j["structure"] = structure_json(r.flags);
                j["omega"] = r.omega;
                j["alpha"] = r.alpha;
                j["theta"] = r.theta;
                j["theta_complement"] = r.theta_c;
                j["schrijver_complement"] = r.schrijver_c;
                j["szegedy"] = r.szegedy;
                j["product_theta"] = r.product_theta;
                j["product_variants"] = r.product_variants;
                j["products_pass"] = r.products_pass;
                j["cliquecoclique_pass"] = r.cliquecoclique_pass;
                j["converged"] = r.converged;
                if (!r.products_pass || !r.cliquecoclique_pass) ++failures;
            }
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph,n,coherent,walkreg,omega,alpha,theta,theta_complement,"
                     "schrijver_complement,szegedy,product_theta,product_variants,"
                     "products_pass,cliquecoclique_pass\n";
        for (const BatchRow& r : rows) {
            if (r.parse_error) {
                std::cout << r.graph << ",parse-error\n";
                ++failures;
                continue;
            }
            std::cout << r.graph << "," << r.n << "," << r.flags.homogeneous_coherent << ","
                      << r.flags.one_walk_regular << "," << r.omega << "," << r.alpha << ",";
            const auto old = std::cout.precision(6);
            std::cout << std::fixed << r.theta << "," << r.theta_c << "," << r.schrijver_c << ","
                      << r.szegedy << "," << r.product_theta << "," << r.product_variants;
            std::cout.unsetf(std::ios::floatfield);
            std::cout.precision(old);
            std::cout << "," << r.products_pass << "," << r.cliquecoclique_pass << "\n";
            if (!r.products_pass || !r.cliquecoclique_pass) ++failures;
        }
    }
    std::cout << "# " << rows.size() << " graphs, " << failures << " failures\n";
    return failures == 0 ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta functions, coherent closures, and trace-bound verification for small graphs"};
    app.require_subcommand(1);

    SolveOptions opts;
    double flag_tol = -1.0;
    long flag_max_iters = -1;
    double flag_relax = -1.0;
    app.add_option("--tol", flag_tol, "solver iterate-change tolerance");
    app.add_option("--max-iters", flag_max_iters, "solver iteration cap");
    app.add_option("--relax", flag_relax, "solver over-relaxation parameter");

    std::string source, path;
    bool emit_json = false;
    bool lovasz = false, schrijver = false, szegedy = false;
    bool all = false;
    VerifySelection sel;
    int jobs = 1;

    CLI::App* closure = app.add_subcommand("closure", "coherent closure and axiom check");
    closure->fallthrough();
    closure->add_option("source", source, "graph6, name:params, or file")->required();
    closure->add_flag("--json", emit_json, "emit full JSON");

    CLI::App* theta = app.add_subcommand("theta", "theta function values");
    theta->fallthrough();
    theta->add_option("source", source, "graph6, name:params, or file")->required();
    theta->add_flag("--lovasz", lovasz, "Lovasz theta");
    theta->add_flag("--schrijver", schrijver, "Schrijver theta-");
    theta->add_flag("--szegedy", szegedy, "Szegedy theta+");
    theta->add_flag("--json", emit_json, "emit JSON");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification checks");
    verify_cmd->fallthrough();
    verify_cmd->add_option("source", source, "graph6, name:params, or file")->required();
    verify_cmd->add_flag("--all", all, "run every applicable check");
    verify_cmd->add_flag("--lemma0", sel.lemma0, "row/column-sum and centrality checks");
    verify_cmd->add_flag("--clique-coclique", sel.cliquecoclique, "omega*alpha <= n");
    verify_cmd->add_flag("--main-bound", sel.mainbound, "trace bound on oracle witnesses");
    verify_cmd->add_flag("--products", sel.products, "theta product equalities");
    verify_cmd->add_flag("--sandwich", sel.sandwich, "alpha <= theta- <= theta <= theta+ <= chi");
    verify_cmd->add_flag("--json", emit_json, "emit JSON report");

    CLI::App* batch = app.add_subcommand("batch", "process a file of graph6 lines");
    batch->fallthrough();
    batch->add_option("file", path, "file with one graph6 string per line")->required();
    batch->add_option("--jobs", jobs, "concurrent workers");
    batch->add_flag("--json", emit_json, "emit JSON rows instead of CSV");

    CLI11_PARSE(app, argc, argv);

    if (flag_tol > 0) opts.tol.sdp_iter_change = flag_tol;
    if (flag_max_iters > 0) opts.tol.sdp_max_iters = flag_max_iters;
    if (flag_relax > 0) opts.tol.sdp_relax = flag_relax;

    try {
        if (closure->parsed()) return cmd_closure(source, emit_json);
        if (theta->parsed()) return cmd_theta(source, lovasz, schrijver, szegedy, opts, emit_json);
        if (verify_cmd->parsed()) return cmd_verify(source, sel, all, opts, emit_json);
        if (batch->parsed()) return cmd_batch(path, jobs, emit_json, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
