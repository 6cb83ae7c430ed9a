#include <doctest.h>

#include <random>

#include "support/random_gen.hpp"
#include "thetakit/eigen.hpp"
#include "thetakit/graph.hpp"

using namespace thetakit;

TEST_CASE("graph6 parse: documented strings") {
    const Graph empty5 = parse_graph6("D??");
    CHECK(empty5.n() == 5);
    CHECK(empty5.edge_count() == 0);

    // 'D' = n=5; '~'=63, '{'=60 give bits 1111111111(00): all ten edges.
    const Graph k5 = parse_graph6("D~{");
    CHECK(k5.n() == 5);
    CHECK(k5.edge_count() == 10);

    const Graph k1 = parse_graph6("@");
    CHECK(k1.n() == 1);
}

TEST_CASE("graph6 parse: distinct errors") {
    CHECK_THROWS_WITH_AS(parse_graph6(std::string("D?\x01")), doctest::Contains("printable range"),
                         Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);    // truncated
    CHECK_THROWS_AS(parse_graph6("D???"), Graph6Error);  // trailing bytes
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);      // no header
    try {
        parse_graph6("D?");
        FAIL("expected truncation error");
    } catch (const Graph6Error& e) {
        CHECK(e.kind == Graph6Error::Kind::truncated);
    }
    try {
        parse_graph6(std::string("D?\x01"));
        FAIL("expected bad-char error");
    } catch (const Graph6Error& e) {
        CHECK(e.kind == Graph6Error::Kind::bad_char);
    }
}

TEST_CASE("graph6 long form reads up to the cap") {
    // n = 63 encoded long form: '~' then 63 in three 6-bit chunks.
    std::string text = "~??";
    text.push_back(static_cast<char>(63 + 63));
    text.append((63 * 62 / 2 + 5) / 6, '?');
    const Graph g = parse_graph6(text);
    CHECK(g.n() == 63);
    CHECK(g.edge_count() == 0);

    CHECK_THROWS_AS(parse_graph6(text, 62), Graph6Error); // cap exceeded
    CHECK_THROWS_AS(parse_graph6("~~??????"), Graph6Error); // 36-bit form
}

TEST_CASE("graph6 write: documented strings and cap") {
    CHECK(write_graph6(named_graph("empty", {5})) == "D??");
    CHECK(write_graph6(named_graph("complete", {5})) == "D~{");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK_THROWS_AS(write_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = testsupport::random_graph(n, 0.4, rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("complement") {
    // C5 is self-complementary up to isomorphism.
    const Graph c5 = named_graph("cycle", {5});
    CHECK(canonical_form(complement(c5)) == canonical_form(c5));

    CHECK(complement(named_graph("complete", {5})) == named_graph("empty", {5}));

    const Graph pc = complement(named_graph("petersen", {}));
    for (int v = 0; v < 10; ++v) CHECK(pc.degree(v) == 6);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const Graph g = testsupport::random_graph(n, 0.5, rng);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("named_graph families") {
    const Graph c5 = named_graph("cycle", {5});
    CHECK(c5.n() == 5);
    CHECK(c5.edge_count() == 5);

    const Graph pet = named_graph("petersen", {});
    CHECK(pet.n() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(girth(pet) == 5);

    // Kneser K(5,2) is the Petersen graph.
    const Graph kn = named_graph("kneser", {5, 2});
    CHECK(canonical_form(kn) == canonical_form(pet));
    const auto spec_kn = eigh(SymMatrix::adjacency(kn)).values;
    const auto spec_pet = eigh(SymMatrix::adjacency(pet)).values;
    for (std::size_t i = 0; i < spec_kn.size(); ++i)
        CHECK(spec_kn[i] == doctest::Approx(spec_pet[i]).epsilon(1e-9));

    // Connection sets close under negation: {1} and {4} agree mod 5.
    CHECK(named_graph("circulant", {5, 1}) == named_graph("circulant", {5, 4}));
    CHECK(named_graph("circulant", {6, 1, 3}).edge_count() == 9); // K3,3

    const Graph q3 = named_graph("hypercube", {3});
    CHECK(q3.n() == 8);
    CHECK(q3.edge_count() == 12);

    CHECK(named_graph("path", {4}).edge_count() == 3);

    CHECK_THROWS_AS(named_graph("mystery", {3}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("circulant", {4, 4}), std::invalid_argument); // 0 mod n
    CHECK_THROWS_AS(named_graph("cycle", {2}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle", {5, 5}), std::invalid_argument);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(named_graph("cycle", {5})));
    CHECK_FALSE(is_connected(named_graph("empty", {2})));
    CHECK_FALSE(is_connected(named_graph("circulant", {6, 2}))); // two triangles
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = testsupport::random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("enumeration counts match the literature") {
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156};
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_graphs(n).size() == all[n - 1]);
        CHECK(enumerate_connected_graphs(n).size() == connected[n - 1]);
    }
}
