#pragma once

#include <vector>

#include "thetakit/symmatrix.hpp"
#include "thetakit/tolerances.hpp"

namespace thetakit {

struct EighResult {
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row-major; row k is the eigenvector of values[k]

    const double* vector(int k) const {
        return vectors.data() + static_cast<std::size_t>(k) * values.size();
    }
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
EighResult eigh(const SymMatrix& m, const Tolerances& tol = default_tolerances());

// Frobenius-nearest positive semidefinite matrix: clamp negative
// eigenvalues to zero and reassemble.
SymMatrix psd_project(const SymMatrix& m, const Tolerances& tol = default_tolerances());

double min_eigenvalue(const SymMatrix& m, const Tolerances& tol = default_tolerances());

} // namespace thetakit
