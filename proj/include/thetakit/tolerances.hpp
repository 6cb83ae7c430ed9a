#pragma once

namespace thetakit {

// Every tolerance used anywhere in the toolkit, with its default. Reports
// echo the values they were produced with.
struct Tolerances {
    // eigensolver (cyclic Jacobi)
    double eigh_offdiag_rel = 1e-12; // stop when off-diagonal norm <= rel * ||m||_F
    int eigh_max_sweeps = 100;

    // conic solver
    double sdp_trace_feas = 1e-7;  // |tr X - 1| on the reported iterate
    double sdp_sign_viol = 1e-8;   // max sign/zero-cell violation
    double sdp_gap_rel = 1e-6;     // duality gap <= gap_rel * (1 + |value|)
    double sdp_iter_change = 1e-9; // successive-iterate Frobenius change
    long sdp_max_iters = 200000;
    double sdp_relax = 1.6; // over-relaxation parameter

    // verification, float tier
    double num_tol = 1e-8; // feasibility / hypothesis slack
    double eq_tol = 1e-4;  // equality detection

    // exact rational arithmetic
    unsigned long rational_den_bits = 1ul << 20; // abort past this many bits
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

} // namespace thetakit
