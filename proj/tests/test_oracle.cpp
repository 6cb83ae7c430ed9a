#include <doctest.h>

#include <random>

#include "support/corpus.hpp"
#include "support/random_gen.hpp"
#include "thetakit/conic.hpp"
#include "thetakit/oracle.hpp"

using namespace thetakit;

TEST_CASE("max_clique: documented cases") {
    CHECK(oracle::max_clique(named_graph("complete", {5})).size == 5);
    CHECK(oracle::max_clique(named_graph("petersen", {})).size == 2);
    CHECK(oracle::max_clique(named_graph("cycle", {5})).size == 2);

    const auto w = oracle::max_clique(named_graph("complete", {4}));
    CHECK(w.vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("max_coclique: documented cases") {
    CHECK(oracle::max_coclique(named_graph("petersen", {})).size == 4);
    CHECK(oracle::max_coclique(named_graph("complete", {5})).size == 1);
    CHECK(oracle::max_coclique(named_graph("empty", {6})).size == 6);
}

TEST_CASE("witnesses really are cliques/cocliques") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 12; ++t) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const Graph g = testsupport::random_graph(n, 0.5, rng);
        const auto cl = oracle::max_clique(g);
        for (std::size_t a = 0; a < cl.vertices.size(); ++a)
            for (std::size_t b = a + 1; b < cl.vertices.size(); ++b)
                CHECK(g.has_edge(cl.vertices[a], cl.vertices[b]));
        const auto co = oracle::max_coclique(g);
        for (std::size_t a = 0; a < co.vertices.size(); ++a)
            for (std::size_t b = a + 1; b < co.vertices.size(); ++b)
                CHECK_FALSE(g.has_edge(co.vertices[a], co.vertices[b]));
        CHECK(co.size == oracle::max_clique(complement(g)).size);
    }
}

TEST_CASE("chromatic_number: documented cases") {
    CHECK(oracle::chromatic_number(named_graph("complete", {5})) == 5);
    CHECK(oracle::chromatic_number(named_graph("cycle", {5})) == 3);
    CHECK(oracle::chromatic_number(named_graph("petersen", {})) == 3);
    CHECK(oracle::chromatic_number(named_graph("cycle", {6})) == 2);
    CHECK(oracle::chromatic_number(named_graph("empty", {7})) == 1);
    CHECK(oracle::chromatic_number(testsupport::paw()) == 3);
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(oracle::max_clique(Graph(31)), std::invalid_argument);
    CHECK_THROWS_AS(oracle::chromatic_number(Graph(17)), std::invalid_argument);
}

TEST_CASE("clique_coclique_check: documented cases") {
    const auto pet = oracle::clique_coclique_check(named_graph("petersen", {}));
    CHECK(pet.qualifies);
    CHECK(pet.omega == 2);
    CHECK(pet.alpha == 4);
    CHECK(pet.product == 8);
    CHECK(pet.holds);

    const auto c5 = oracle::clique_coclique_check(named_graph("cycle", {5}));
    CHECK(c5.qualifies);
    CHECK(c5.product == 4);
    CHECK(c5.holds);

    const auto k6 = oracle::clique_coclique_check(named_graph("complete", {6}));
    CHECK(k6.qualifies);
    CHECK(k6.product == 6); // equality
    CHECK(k6.holds);

    const auto paw = oracle::clique_coclique_check(testsupport::paw());
    CHECK_FALSE(paw.qualifies);
}

TEST_CASE("oracle links to the solver: alpha <= schrijver theta") {
    for (const Graph& g : {named_graph("cycle", {7}), named_graph("petersen", {}),
                           named_graph("hypercube", {3})}) {
        const double alpha = oracle::max_coclique(g).size;
        CHECK(alpha <= solve_theta(g, ThetaVariant::schrijver).value + 1e-4);
    }
}
