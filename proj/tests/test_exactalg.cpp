#include <doctest.h>

#include <map>
#include <random>

#include "support/corpus.hpp"
#include "support/random_gen.hpp"
#include "thetakit/algebra.hpp"
#include "thetakit/coherent.hpp"
#include "thetakit/eigen.hpp"

using namespace thetakit;

TEST_CASE("gram_schmidt: documented cases") {
    const QMatrix I2 = QMatrix::identity(2);
    const QMatrix J2 = QMatrix::ones(2);
    const auto basis = gram_schmidt({I2, J2});
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == I2);
    CHECK(basis[1] == J2 - I2);

    CHECK(gram_schmidt({I2, I2}).size() == 1);

    // C4: third element is A^2 - 2I.
    const Graph c4 = named_graph("cycle", {4});
    const QMatrix A = QMatrix::adjacency(c4);
    const auto b3 = gram_schmidt({QMatrix::identity(4), A, A * A});
    REQUIRE(b3.size() == 3);
    CHECK(b3[2] == A * A - QMatrix::identity(4).scaled(2));

    CHECK_THROWS_AS(gram_schmidt({}), std::invalid_argument);
}

TEST_CASE("gram_schmidt output is pairwise orthogonal and unscaled first") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<QMatrix> mats;
        for (int k = 0; k < 4; ++k) mats.push_back(testsupport::random_rational(4, rng));
        const auto basis = gram_schmidt(mats);
        REQUIRE(!basis.empty());
        CHECK(basis[0] == mats[0]);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                CHECK(inner(basis[i], basis[j]) == 0);
    }
}

TEST_CASE("adjacency_algebra_basis: documented cases") {
    const AlgebraBasis k5 = adjacency_algebra_basis(named_graph("complete", {5}));
    CHECK(k5.dim == 2);
    CHECK(k5.contains_J);
    CHECK(k5.second_is_A);
    CHECK(k5.basis[1] == QMatrix::ones(5) - QMatrix::identity(5));

    const AlgebraBasis pet = adjacency_algebra_basis(named_graph("petersen", {}));
    CHECK(pet.dim == 3);
    CHECK(pet.contains_J);
    CHECK(pet.basis[0] == QMatrix::identity(10));
    CHECK(pet.basis[1] == QMatrix::adjacency(named_graph("petersen", {})));

    const AlgebraBasis e3 = adjacency_algebra_basis(named_graph("empty", {3}));
    CHECK(e3.dim == 1);
    CHECK_FALSE(e3.contains_J);
    CHECK_FALSE(e3.second_is_A);
}

TEST_CASE("algebra dimension equals the count of distinct eigenvalues") {
    std::mt19937_64 rng(41);
    auto count_distinct = [](const Graph& g) {
        const auto vals = eigh(SymMatrix::adjacency(g)).values;
        int distinct = 1;
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (vals[i] - vals[i - 1] > 1e-7) ++distinct;
        return distinct;
    };
    std::vector<Graph> graphs = {named_graph("petersen", {}), named_graph("cycle", {5}),
                                 named_graph("cycle", {6}), named_graph("complete", {5}),
                                 named_graph("path", {4})};
    for (int t = 0; t < 8; ++t) graphs.push_back(testsupport::random_graph(6, 0.5, rng));
    for (const Graph& g : graphs)
        CHECK(adjacency_algebra_basis(g).dim == count_distinct(g));
}

TEST_CASE("is_one_walk_regular: documented cases") {
    const OneWalkReport pet = is_one_walk_regular(named_graph("petersen", {}));
    CHECK(pet.is_one_walk_regular);
    REQUIRE(pet.constants.size() == 3);
    CHECK(pet.constants[2].first == 3);  // a_2: closed 2-walks = degree
    CHECK(pet.constants[2].second == 0); // b_2: triangle-free

    const OneWalkReport p3 = is_one_walk_regular(named_graph("path", {3}));
    CHECK_FALSE(p3.is_one_walk_regular);
    REQUIRE(p3.failure_witness.has_value());
    CHECK(p3.failure_witness->first == 2);
    CHECK(p3.failure_witness->second.first == p3.failure_witness->second.second);

    const OneWalkReport c6 = is_one_walk_regular(named_graph("cycle", {6}));
    CHECK(c6.is_one_walk_regular);
    CHECK(c6.constants[2].first == 2);
    CHECK(c6.constants[2].second == 0);

    // Triangular prism: vertex-transitive but not 1-walk regular.
    const OneWalkReport prism = is_one_walk_regular(named_graph("circulant", {6, 2, 3}));
    CHECK_FALSE(prism.is_one_walk_regular);

    CHECK(is_one_walk_regular(named_graph("empty", {4})).is_one_walk_regular);
    CHECK(is_one_walk_regular(testsupport::two_triangles()).is_one_walk_regular);
}

TEST_CASE("one-walk constants satisfy their defining identities exactly") {
    for (const Graph& g : {named_graph("petersen", {}), named_graph("cycle", {6}),
                           named_graph("hypercube", {3}), named_graph("complete", {4})}) {
        const OneWalkReport rep = is_one_walk_regular(g);
        REQUIRE(rep.is_one_walk_regular);
        const QMatrix A = QMatrix::adjacency(g);
        QMatrix power = QMatrix::identity(g.n());
        for (std::size_t k = 0; k < rep.constants.size(); ++k) {
            const auto& [a_k, b_k] = rep.constants[k];
            for (int i = 0; i < g.n(); ++i)
                for (int j = 0; j < g.n(); ++j) {
                    if (i == j) CHECK(power(i, i) == a_k);
                    if (g.has_edge(i, j)) CHECK(power(i, j) == b_k);
                }
            power = power * A;
        }
    }
}

TEST_CASE("wl_closure: documented cases") {
    CoherentConfiguration kn = wl_closure(named_graph("complete", {6}));
    CHECK(kn.num_classes() == 2);
    CHECK(is_homogeneous(kn));

    CoherentConfiguration pet = wl_closure(named_graph("petersen", {}));
    CHECK(pet.num_classes() == 3);
    CHECK(is_homogeneous(pet));
    CHECK(pet.graph_classes() == std::set<int>{1});
    CHECK(pet.identity_index() == 0);

    CoherentConfiguration p3 = wl_closure(named_graph("path", {3}));
    CHECK_FALSE(is_homogeneous(p3));
    // Diagonal splits by degree: at least two diagonal classes.
    std::set<int> diag_classes;
    for (int v = 0; v < 3; ++v) diag_classes.insert(p3.color(v, v));
    CHECK(diag_classes.size() >= 2);

    CHECK_THROWS_AS(wl_closure(Graph(2), 1), std::invalid_argument);
}

TEST_CASE("wl_closure output is a refinement fixed point") {
    for (const Graph& g : {named_graph("petersen", {}), named_graph("path", {4}),
                           testsupport::paw(), named_graph("cycle", {6})}) {
        const CoherentConfiguration c = wl_closure(g);
        const std::vector<int> again = wl_refine_once(c.color_matrix(), g.n());
        // Same partition: cells share a color before iff they do after.
        std::map<int, int> fwd;
        bool same = true;
        for (std::size_t i = 0; i < again.size(); ++i) {
            auto [it, fresh] = fwd.try_emplace(c.color_matrix()[i], again[i]);
            same = same && (it->second == again[i]);
        }
        CHECK(same);
        CHECK(fwd.size() == static_cast<std::size_t>(c.num_classes()));
    }
}

TEST_CASE("check_coherent_axioms: documented cases") {
    CHECK(check_coherent_axioms(wl_closure(named_graph("petersen", {}))).all());

    // {I, J-I} on n=4: the complete-graph scheme; (J-I)^2 = 3I + 2(J-I).
    const QMatrix I4 = QMatrix::identity(4);
    const QMatrix K = QMatrix::ones(4) - I4;
    const auto two = CoherentConfiguration::from_matrices({I4, K});
    const AxiomReport ok = check_coherent_axioms(two);
    CHECK(ok.all());
    CHECK(K * K == I4.scaled(3) + K.scaled(2));

    // {J} on n=2: nonzero diagonal entries in a non-diagonal class.
    const auto bad = CoherentConfiguration::from_matrices({QMatrix::ones(2)});
    const AxiomReport rep = check_coherent_axioms(bad);
    CHECK(rep.sum_is_J);
    CHECK_FALSE(rep.diagonal_split);
    CHECK_FALSE(rep.all());
    CHECK(rep.witness.has_value());
}

TEST_CASE("is_homogeneous: documented cases") {
    CoherentConfiguration c5 = wl_closure(named_graph("cycle", {5}));
    CHECK(is_homogeneous(c5));
    CoherentConfiguration p3 = wl_closure(named_graph("path", {3}));
    CHECK_FALSE(is_homogeneous(p3));
    auto two = CoherentConfiguration::from_matrices(
        {QMatrix::identity(3), QMatrix::ones(3) - QMatrix::identity(3)});
    CHECK(is_homogeneous(two));
    CHECK(two.identity_index() == 0);
}

TEST_CASE("project: documented cases") {
    const AlgebraBasis pet = adjacency_algebra_basis(named_graph("petersen", {}));
    CHECK(project(QMatrix::identity(10), pet) == QMatrix::identity(10));
    CHECK(project(QMatrix::ones(10), pet) == QMatrix::ones(10));

    // E_11 onto {I, J-I} on n=3 is I/3.
    const QMatrix I3 = QMatrix::identity(3);
    QMatrix e11(3);
    e11(0, 0) = 1;
    const QMatrix got = project(e11, {I3, QMatrix::ones(3) - I3});
    CHECK(got == I3.scaled(mpq_class(1, 3)));

    CHECK_THROWS_AS(project(e11, std::vector<QMatrix>{}), std::invalid_argument);
    CHECK_THROWS_AS(project(e11, {QMatrix::identity(4)}), std::invalid_argument);
    CHECK_THROWS_AS(project(e11, {QMatrix(3)}), std::invalid_argument); // zero basis element
}

TEST_CASE("projection is idempotent, self-adjoint, trace preserving") {
    std::mt19937_64 rng(53);
    const AlgebraBasis pet = adjacency_algebra_basis(named_graph("petersen", {}));
    for (int trial = 0; trial < 8; ++trial) {
        const QMatrix M = testsupport::random_rational(10, rng);
        const QMatrix N = testsupport::random_rational(10, rng);
        const QMatrix Mp = project(M, pet);
        CHECK(project(Mp, pet) == Mp);
        CHECK(inner(M, project(N, pet)) == inner(Mp, N));
        CHECK(Mp.trace() == M.trace()); // I in span
        CHECK(inner(QMatrix::ones(10), Mp) == inner(QMatrix::ones(10), M)); // J in span
    }
}

TEST_CASE("homogeneous closures have constant row and column sums per class") {
    for (const auto& [name, g] : testsupport::equality_suite()) {
        CAPTURE(name);
        CoherentConfiguration c = wl_closure(g);
        REQUIRE(is_homogeneous(c));
        for (int k = 0; k < c.num_classes(); ++k) {
            const QMatrix A = c.class_matrix(k);
            mpq_class row0 = 0, col0 = 0;
            for (int j = 0; j < c.n(); ++j) {
                row0 += A(0, j);
                col0 += A(j, 0);
            }
            for (int i = 0; i < c.n(); ++i) {
                mpq_class row = 0, col = 0;
                for (int j = 0; j < c.n(); ++j) {
                    row += A(i, j);
                    col += A(j, i);
                }
                CHECK(row == row0);
                CHECK(col == col0);
            }
            CHECK(row0 == col0); // J in span: row sums equal column sums
        }
    }
}

TEST_CASE("denominator cap aborts instead of degrading") {
    std::mt19937_64 rng(61);
    Tolerances tight;
    tight.rational_den_bits = 4;
    bool threw = false;
    for (int trial = 0; trial < 12 && !threw; ++trial) {
        std::vector<QMatrix> mats;
        for (int k = 0; k < 5; ++k) mats.push_back(testsupport::random_rational(5, rng));
        try {
            gram_schmidt(mats, tight);
        } catch (const std::runtime_error&) {
            threw = true;
        }
    }
    CHECK(threw);
}
