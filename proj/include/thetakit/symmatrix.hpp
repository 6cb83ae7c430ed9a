#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/kernels.hpp"
#include "thetakit/qmatrix.hpp"

namespace thetakit {

// Dense symmetric matrix of doubles, full row-major storage. Symmetry is
// enforced on construction by averaging mirrored entries.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("SymMatrix: side must be positive");
        a_.assign(static_cast<std::size_t>(n) * n, 0.0);
    }

    static SymMatrix identity(int n) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) m.a_[static_cast<std::size_t>(i) * n + i] = 1.0;
        return m;
    }

    static SymMatrix ones(int n) {
        SymMatrix m(n);
        std::fill(m.a_.begin(), m.a_.end(), 1.0);
        return m;
    }

    static SymMatrix adjacency(const Graph& g) {
        SymMatrix m(g.n());
        for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
        return m;
    }

    static SymMatrix from_rowmajor(int n, std::vector<double> data) {
        if (data.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("SymMatrix: bad buffer size");
        SymMatrix m(n);
        m.a_ = std::move(data);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double v = 0.5 * (m.a_[static_cast<std::size_t>(i) * n + j] +
                                        m.a_[static_cast<std::size_t>(j) * n + i]);
                m.a_[static_cast<std::size_t>(i) * n + j] = v;
                m.a_[static_cast<std::size_t>(j) * n + i] = v;
            }
        return m;
    }

    static SymMatrix from_rational(const QMatrix& q) {
        if (!q.is_symmetric()) throw std::invalid_argument("SymMatrix: rational input not symmetric");
        return from_rowmajor(q.n(), q.to_double());
    }

    int n() const { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    std::size_t size() const { return a_.size(); }
    const std::vector<double>& raw() const { return a_; }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += a_[idx(i, i)];
        return t;
    }

    // tr(JM): sum of all entries.
    double entry_sum() const { return kern::sum(a_.data(), a_.size()); }

    double frobenius_norm() const { return std::sqrt(kern::dot(a_.data(), a_.data(), a_.size())); }

    bool all_finite() const {
        for (double v : a_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("SymMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<double> a_;
};

// Frobenius inner product <A,B>.
inline double inner(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("inner: dimension mismatch");
    return kern::dot(a.data(), b.data(), a.size());
}

// Product of two symmetric matrices (not symmetric in general), row-major.
inline std::vector<double> multiply_sym(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiply_sym: dimension mismatch");
    const int n = a.n();
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i) * n + j] =
                kern::dot(a.data() + static_cast<std::size_t>(i) * n,
                          b.data() + static_cast<std::size_t>(j) * n, n);
    return out;
}

} // namespace thetakit
