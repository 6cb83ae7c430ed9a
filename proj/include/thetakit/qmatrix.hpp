#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

// Exact rational square matrix. Entries are GMP rationals, always
// normalized; all arithmetic is exact.
class QMatrix {
public:
    explicit QMatrix(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("QMatrix: side must be positive");
        e_.assign(static_cast<std::size_t>(n) * n, mpq_class(0));
    }

    static QMatrix identity(int n) {
        QMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static QMatrix ones(int n) {
        QMatrix m(n);
        for (auto& x : m.e_) x = 1;
        return m;
    }

    static QMatrix adjacency(const Graph& g) {
        QMatrix m(g.n());
        for (auto [u, v] : g.edges()) {
            m(u, v) = 1;
            m(v, u) = 1;
        }
        return m;
    }

    int n() const { return n_; }

    const mpq_class& operator()(int i, int j) const { return e_[idx(i, j)]; }
    mpq_class& operator()(int i, int j) { return e_[idx(i, j)]; }

    QMatrix operator+(const QMatrix& o) const {
        check_same(o);
        QMatrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    QMatrix operator-(const QMatrix& o) const {
        check_same(o);
        QMatrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    QMatrix operator*(const QMatrix& o) const {
        check_same(o);
        QMatrix r(n_);
        mpq_class t;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const mpq_class& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n_; ++j) {
                    t = aik * o(k, j);
                    r(i, j) += t;
                }
            }
        return r;
    }

    QMatrix scaled(const mpq_class& c) const {
        QMatrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
        return r;
    }

    QMatrix transpose() const {
        QMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    mpq_class trace() const {
        mpq_class t = 0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    // tr(JM): the sum of all entries.
    mpq_class entry_sum() const {
        mpq_class t = 0;
        for (const auto& x : e_) t += x;
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool operator==(const QMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    std::vector<double> to_double() const {
        std::vector<double> out(e_.size());
        for (std::size_t k = 0; k < e_.size(); ++k) out[k] = e_[k].get_d();
        return out;
    }

    // Largest denominator bit size over all entries.
    unsigned long max_denominator_bits() const {
        unsigned long best = 0;
        for (const auto& x : e_) {
            const unsigned long b = mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
            if (b > best) best = b;
        }
        return best;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("QMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }
    void check_same(const QMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("QMatrix: dimension mismatch");
    }

    int n_;
    std::vector<mpq_class> e_;
};

// Trace inner product <M,N> = tr(M N^*); for real matrices this is the
// entrywise sum of products.
inline mpq_class inner(const QMatrix& a, const QMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("inner: dimension mismatch");
    mpq_class acc = 0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) acc += a(i, j) * b(i, j);
    return acc;
}

inline void enforce_denominator_cap(const QMatrix& m, unsigned long bits) {
    if (m.max_denominator_bits() > bits)
        throw std::runtime_error("exact arithmetic: denominator exceeded " +
                                 std::to_string(bits) + " bits");
}

} // namespace thetakit
