#include "thetakit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "thetakit/kernels.hpp"

namespace thetakit {

EighResult eigh(const SymMatrix& m, const Tolerances& tol) {
    if (!m.all_finite()) throw std::invalid_argument("eigh: non-finite entries");
    const int n = m.n();
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    std::vector<double> a(m.raw());
    std::vector<double> vt(nn, 0.0); // row k accumulates eigenvector k
    for (int i = 0; i < n; ++i) vt[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double norm = m.frobenius_norm();
    bool converged = (norm == 0.0) || (n == 1);

    for (int sweep = 0; sweep < tol.eigh_max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double v = a[static_cast<std::size_t>(p) * n + q];
                off += 2.0 * v * v;
            }
        if (std::sqrt(off) <= tol.eigh_offdiag_rel * norm) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = 0.5 * (aqq - app) / apq;
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- G^T A G: rotate rows p,q then columns p,q.
                kern::rot(a.data() + static_cast<std::size_t>(p) * n,
                          a.data() + static_cast<std::size_t>(q) * n, c, s, n);
                for (int i = 0; i < n; ++i) {
                    double& aip = a[static_cast<std::size_t>(i) * n + p];
                    double& aiq = a[static_cast<std::size_t>(i) * n + q];
                    const double x = aip, y = aiq;
                    aip = c * x - s * y;
                    aiq = s * x + c * y;
                }
                // Closed forms for the 2x2 block beat the rotated values.
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;
                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;

                kern::rot(vt.data() + static_cast<std::size_t>(p) * n,
                          vt.data() + static_cast<std::size_t>(q) * n, c, s, n);
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double v = a[static_cast<std::size_t>(p) * n + q];
                off += 2.0 * v * v;
            }
        if (std::sqrt(off) > tol.eigh_offdiag_rel * norm)
            throw std::runtime_error("eigh: Jacobi did not converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x] < a[static_cast<std::size_t>(y) * n + y];
    });

    EighResult out;
    out.values.resize(n);
    out.vectors.resize(nn);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a[static_cast<std::size_t>(order[k]) * n + order[k]];
        std::copy_n(vt.data() + static_cast<std::size_t>(order[k]) * n, n,
                    out.vectors.data() + static_cast<std::size_t>(k) * n);
    }
    return out;
}

SymMatrix psd_project(const SymMatrix& m, const Tolerances& tol) {
    const int n = m.n();
    const EighResult eg = eigh(m, tol);
    std::vector<double> b(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        const double lam = eg.values[k];
        if (lam <= 0.0) continue;
        const double* v = eg.vector(k);
        for (int i = 0; i < n; ++i)
            if (v[i] != 0.0) kern::axpy(lam * v[i], v, b.data() + static_cast<std::size_t>(i) * n, n);
    }
    return SymMatrix::from_rowmajor(n, std::move(b));
}

double min_eigenvalue(const SymMatrix& m, const Tolerances& tol) {
    return eigh(m, tol).values.front();
}

} // namespace thetakit
