#pragma once

#include <utility>

#include "mixoracle/types.hpp"

namespace mixoracle {

/// Bounded polytope {x : A x >= b} with rows a_i'.
struct Polytope {
    Matrix A;  // m x n
    Vector b;  // m

    int n() const { return static_cast<int>(A.cols()); }
    int m() const { return static_cast<int>(A.rows()); }

    Vector slacks(const Vector& x) const { return A * x - b; }
    bool is_interior(const Vector& x) const { return slacks(x).minCoeff() > 0.0; }

    void append_row(const Vector& a, double beta);
    void remove_row(int i);
};

/// Hessian of the logarithmic barrier, H(x) = sum_i a_i a_i' / s_i(x)^2.
Matrix log_barrier_hessian(const Polytope& poly, const Vector& x);

/// Cholesky of H with a one-shot jitter retry for near-singular H.
Eigen::LLT<Matrix> factor_barrier_hessian(const Matrix& H);

/// Leverage scores sigma_i(x) = a_i' H(x)^{-1} a_i / s_i(x)^2; they sum to n.
Vector leverage_scores(const Polytope& poly, const Vector& x);

/// Volumetric barrier F(x) = (1/2) ln det H(x).
double volumetric_barrier(const Polytope& poly, const Vector& x);

/// Gradient of F, -sum_i sigma_i(x) a_i / s_i(x).
Vector volumetric_barrier_gradient(const Polytope& poly, const Vector& x);

/// Initial simplex P0 containing the ball of radius R around the origin:
/// rows (e_1 ... e_n, -1) with b = -R (1, ..., 1, n)'. The returned center
/// is the exact volumetric center omega = ((n-1)/(n+1)) R 1.
std::pair<Polytope, Vector> initial_simplex(int n, double R);

struct RecentreOptions {
    double newton_tol = 1e-10;
    int max_newton_steps = 50;
    int max_backtracks = 60;
};

/// Damped Newton minimization of F from a strictly interior start. Uses
/// Vaidya's surrogate Q(x) = sum_i sigma_i a_i a_i' / s_i^2 as the Hessian
/// model and a halving line search that maintains interiority and descent.
Vector recentre(const Polytope& poly, const Vector& z, const RecentreOptions& opts = {});

}  // namespace mixoracle
