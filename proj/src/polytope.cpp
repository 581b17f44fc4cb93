#include "mixoracle/polytope.hpp"

#include <cmath>

namespace mixoracle {

void Polytope::append_row(const Vector& a, double beta) {
    A.conservativeResize(A.rows() + 1, Eigen::NoChange);
    A.row(A.rows() - 1) = a.transpose();
    b.conservativeResize(b.size() + 1);
    b[b.size() - 1] = beta;
}

void Polytope::remove_row(int i) {
    const int mm = m();
    if (i < 0 || i >= mm) throw InvalidParameter("remove_row: index out of range");
    if (i < mm - 1) {
        A.block(i, 0, mm - 1 - i, A.cols()) = A.bottomRows(mm - 1 - i).eval();
        b.segment(i, mm - 1 - i) = b.tail(mm - 1 - i).eval();
    }
    A.conservativeResize(mm - 1, Eigen::NoChange);
    b.conservativeResize(mm - 1);
}

static Vector checked_slacks(const Polytope& poly, const Vector& x) {
    Vector s = poly.slacks(x);
    if (s.minCoeff() <= 0.0)
        throw NotInterior("query point has a nonpositive slack");
    return s;
}

Matrix log_barrier_hessian(const Polytope& poly, const Vector& x) {
    const Vector s = checked_slacks(poly, x);
    const int n = poly.n();
    Matrix H = Matrix::Zero(n, n);
    for (int i = 0; i < poly.m(); ++i) {
        const auto a = poly.A.row(i).transpose();
        H.noalias() += (a * a.transpose()) / (s[i] * s[i]);
    }
    return H;
}

Eigen::LLT<Matrix> factor_barrier_hessian(const Matrix& H) {
    Eigen::LLT<Matrix> llt(H);
    if (llt.info() == Eigen::Success) return llt;
    // One jitter attempt before giving up.
    const double jitter = 1e-12 * H.trace() / static_cast<double>(H.rows());
    Matrix Hj = H + jitter * Matrix::Identity(H.rows(), H.cols());
    llt.compute(Hj);
    if (llt.info() != Eigen::Success)
        throw NumericalFailure("barrier Hessian is not positive definite");
    return llt;
}

Vector leverage_scores(const Polytope& poly, const Vector& x) {
    const Vector s = checked_slacks(poly, x);
    const Matrix H = log_barrier_hessian(poly, x);
    const auto llt = factor_barrier_hessian(H);
    Vector sigma(poly.m());
    for (int i = 0; i < poly.m(); ++i) {
        const Vector a = poly.A.row(i).transpose();
        const Vector u = llt.solve(a);
        sigma[i] = a.dot(u) / (s[i] * s[i]);
    }
    return sigma;
}

double volumetric_barrier(const Polytope& poly, const Vector& x) {
    const Matrix H = log_barrier_hessian(poly, x);
    const auto llt = factor_barrier_hessian(H);
    // ln det H = 2 sum ln diag(L).
    double ld = 0.0;
    const Matrix L = llt.matrixL();
    for (int i = 0; i < L.rows(); ++i) ld += std::log(L(i, i));
    return ld;
}

Vector volumetric_barrier_gradient(const Polytope& poly, const Vector& x) {
    const Vector s = checked_slacks(poly, x);
    const Vector sigma = leverage_scores(poly, x);
    Vector g = Vector::Zero(poly.n());
    for (int i = 0; i < poly.m(); ++i)
        g.noalias() -= (sigma[i] / s[i]) * poly.A.row(i).transpose();
    return g;
}

std::pair<Polytope, Vector> initial_simplex(int n, double R) {
    if (n < 1) throw InvalidDimension("initial_simplex: n must be >= 1");
    if (R <= 0.0) throw InvalidParameter("initial_simplex: R must be positive");
    Polytope p;
    p.A = Matrix::Zero(n + 1, n);
    p.A.topRows(n) = Matrix::Identity(n, n);
    p.A.row(n) = -Vector::Ones(n).transpose();
    p.b = Vector::Constant(n + 1, -R);
    p.b[n] = -static_cast<double>(n) * R;
    Vector omega = Vector::Constant(n, (static_cast<double>(n) - 1.0) / (n + 1.0) * R);
    return {std::move(p), std::move(omega)};
}

Vector recentre(const Polytope& poly, const Vector& z, const RecentreOptions& opts) {
    if (!poly.is_interior(z)) throw NotInterior("recentre: start point is not interior");
    const int n = poly.n();
    const int m = poly.m();
    Vector x = z;
    double F = volumetric_barrier(poly, x);
    for (int it = 0; it < opts.max_newton_steps; ++it) {
        const Vector s = poly.slacks(x);
        Matrix V(m, n);  // scaled rows a_i / s_i
        for (int i = 0; i < m; ++i) V.row(i) = poly.A.row(i) / s[i];
        const Matrix H = V.transpose() * V;
        const auto lltH = factor_barrier_hessian(H);
        const Matrix P = V * lltH.solve(V.transpose());
        const Vector sigma = P.diagonal();

        const Vector grad = -V.transpose() * sigma;
        // Exact Hessian of F: V' (3 diag(sigma) - 2 P.P) V, sandwiched
        // between Q and 3Q since P.P has row sums sigma.
        Matrix W = -2.0 * P.cwiseProduct(P);
        W.diagonal() += 3.0 * sigma;
        const Matrix Hess = V.transpose() * W * V;

        const double crit = std::sqrt(std::max(0.0, grad.dot(lltH.solve(grad))));
        if (crit <= opts.newton_tol) break;

        const auto lltN = factor_barrier_hessian(Hess);
        const Vector step = -lltN.solve(grad);
        double t = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < opts.max_backtracks; ++bt, t *= 0.5) {
            const Vector cand = x + t * step;
            if (!poly.is_interior(cand)) continue;
            const double Fc = volumetric_barrier(poly, cand);
            if (Fc <= F) {
                x = cand;
                F = Fc;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // At the numerical floor of F; the gradient criterion decides.
            if (crit <= 1e-6) break;
            throw CenteringFailure("recentre: line search failed to make progress");
        }
        if (step.norm() * t <= 1e-15 * (1.0 + x.norm())) break;
    }
    return x;
}

}  // namespace mixoracle
