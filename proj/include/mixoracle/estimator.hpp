#pragma once

#include <functional>

#include "mixoracle/rng.hpp"
#include "mixoracle/types.hpp"

namespace mixoracle {

/// In-place variant for hot loops; e keeps its size.
inline void sample_unit_sphere_inplace(Vector& e, SeededRng& rng) {
    if (e.size() < 1) throw InvalidDimension("sample_unit_sphere: dimension must be >= 1");
    double nrm = 0.0;
    do {
        for (Eigen::Index i = 0; i < e.size(); ++i) e[i] = rng.gaussian();
        nrm = e.norm();
    } while (nrm == 0.0);
    e /= nrm;
}

/// Uniform direction on the unit Euclidean sphere (normalized Gaussians,
/// which is rotation-invariant by construction).
inline Vector sample_unit_sphere(int n, SeededRng& rng) {
    if (n < 1) throw InvalidDimension("sample_unit_sphere: dimension must be >= 1");
    Vector e(n);
    sample_unit_sphere_inplace(e, rng);
    return e;
}

/// Two-point directional gradient estimate along a unit direction e:
///   (n / tau) * (fn(y + tau e) - fn(y)) * e.
/// Costs exactly two fn evaluations; fn is expected to route through the
/// caller's ledger.
inline Vector grad_estimate(const std::function<double(const Vector&)>& fn, const Vector& y,
                            double tau, const Vector& e, int n) {
    if (tau <= 0.0) throw InvalidParameter("grad_estimate: tau must be positive");
    const double f_shift = fn(y + tau * e);
    const double f_base = fn(y);
    return (static_cast<double>(n) / tau) * (f_shift - f_base) * e;
}

}  // namespace mixoracle
