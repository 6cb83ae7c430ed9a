#include "thetakit/algebra.hpp"

#include "thetakit/coherent.hpp"

namespace thetakit {

namespace {

// Residual of m against an already-orthogonal list.
QMatrix residual(const QMatrix& m, const std::vector<QMatrix>& basis) {
    QMatrix r = m;
    for (const QMatrix& b : basis) {
        const mpq_class c = inner(r, b) / inner(b, b);
        if (c != 0) r = r - b.scaled(c);
    }
    return r;
}

} // namespace

std::vector<QMatrix> gram_schmidt(const std::vector<QMatrix>& mats, const Tolerances& tol) {
    if (mats.empty()) throw std::invalid_argument("gram_schmidt: empty input");
    const int n = mats.front().n();
    std::vector<QMatrix> out;
    for (const QMatrix& m : mats) {
        if (m.n() != n) throw std::invalid_argument("gram_schmidt: dimension mismatch");
        QMatrix r = residual(m, out);
        enforce_denominator_cap(r, tol.rational_den_bits);
        if (!r.is_zero()) out.push_back(std::move(r));
    }
    return out;
}

AlgebraBasis adjacency_algebra_basis(const Graph& g, const Tolerances& tol) {
    const int n = g.n();
    const QMatrix A = QMatrix::adjacency(g);

    AlgebraBasis out;
    out.basis.push_back(QMatrix::identity(n));
    if (!A.is_zero()) {
        // A is orthogonal to I already (zero diagonal).
        out.basis.push_back(A);
        out.second_is_A = true;
        QMatrix power = A;
        while (true) {
            power = power * A;
            QMatrix r = residual(power, out.basis);
            enforce_denominator_cap(r, tol.rational_den_bits);
            if (r.is_zero()) break;
            out.basis.push_back(std::move(r));
        }
    }
    out.dim = static_cast<int>(out.basis.size());

    const QMatrix J = QMatrix::ones(n);
    out.contains_J = project(J, out.basis, tol) == J;
    return out;
}

OneWalkReport is_one_walk_regular(const Graph& g, const Tolerances& tol) {
    const int n = g.n();

    OneWalkReport rep;
    rep.is_one_walk_regular = true;

    // Regularity first: the diagonal of A^2 is the degree sequence, and an
    // unequal diagonal is the natural witness for irregular graphs. Cheap
    // exit before any exact-arithmetic work.
    for (int i = 1; i < n; ++i) {
        if (g.degree(i) != g.degree(0)) {
            rep.is_one_walk_regular = false;
            rep.failure_witness = {2, {i, i}};
            return rep;
        }
    }

    const QMatrix A = QMatrix::adjacency(g);
    const AlgebraBasis ab = adjacency_algebra_basis(g, tol);

    // Orthogonal-basis criterion: every basis element past I and A must
    // vanish on the diagonal and on the support of A.
    for (int k = 2; k < ab.dim && rep.is_one_walk_regular; ++k) {
        const QMatrix& B = ab.basis[k];
        for (int i = 0; i < n && rep.is_one_walk_regular; ++i) {
            for (int j = 0; j < n; ++j) {
                const bool constrained = (i == j) || g.has_edge(i, j);
                if (constrained && B(i, j) != 0) {
                    rep.is_one_walk_regular = false;
                    rep.failure_witness = {k, {i, j}};
                    break;
                }
            }
        }
    }

    // Constants a_k, b_k for k = 0..dim-1 from the expansion of A^k.
    const mpq_class edge_norm = inner(A, A); // 2|E|
    QMatrix power = QMatrix::identity(n);
    for (int k = 0; k < ab.dim; ++k) {
        const mpq_class a_k = inner(power, QMatrix::identity(n)) / n;
        const mpq_class b_k = edge_norm != 0 ? mpq_class(inner(power, A) / edge_norm) : mpq_class(0);
        rep.constants.emplace_back(a_k, b_k);
        if (k + 1 < ab.dim) power = power * A;
    }
    return rep;
}

QMatrix project(const QMatrix& m, const std::vector<QMatrix>& basis, const Tolerances& tol) {
    if (basis.empty()) throw std::invalid_argument("project: empty basis");
    QMatrix out(m.n());
    for (const QMatrix& b : basis) {
        if (b.n() != m.n()) throw std::invalid_argument("project: dimension mismatch");
        const mpq_class denom = inner(b, b);
        if (denom == 0) throw std::invalid_argument("project: zero basis element");
        const mpq_class c = inner(m, b) / denom;
        if (c != 0) out = out + b.scaled(c);
    }
    enforce_denominator_cap(out, tol.rational_den_bits);
    return out;
}

QMatrix project(const QMatrix& m, const AlgebraBasis& b, const Tolerances& tol) {
    return project(m, b.basis, tol);
}

QMatrix project(const QMatrix& m, const CoherentConfiguration& c, const Tolerances& tol) {
    std::vector<QMatrix> classes;
    classes.reserve(c.num_classes());
    for (int k = 0; k < c.num_classes(); ++k) classes.push_back(c.class_matrix(k));
    return project(m, classes, tol);
}

} // namespace thetakit
