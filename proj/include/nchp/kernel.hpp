#pragma once

#include <utility>

#include "nchp/vec3.hpp"

namespace nchp {

// Cross-section data for the non-cutoff hard-potential kernel
// |v - v*|^gamma * beta(theta) with beta(theta) = kappa * theta^{-nu-1}.
// kappa1 <= kappa <= kappa2 keeps the singularity envelope
// kappa1 theta^{-nu-1} <= beta <= kappa2 theta^{-nu-1} tight by default.
struct KernelParams {
    double gamma = 1.0;    // velocity exponent, (0, 1]
    double nu = 1.0;       // angular singularity, (0, 2)
    double kappa1 = 1.0;   // envelope lower amplitude
    double kappa2 = 1.0;   // envelope upper amplitude
    double kappa = 1.0;    // concrete beta amplitude
    double eps_cut = 1e-2; // angular cutoff used by the simulation only

    double beta(double theta) const;  // kappa * theta^{-nu-1}

    // throws std::invalid_argument if any invariant fails
    void validate() const;
};

// Orthogonal frame attached to a relative velocity X: I.X = J.X = I.J = 0 and
// |I| = |J| = |X|; all three vanish when X does.
struct CollisionFrame {
    Vec3 x;
    Vec3 i;
    Vec3 j;
};

// One resolved collision: deflection angle theta in (0, pi], azimuth phi in
// [0, 2pi), pre- and post-collision velocity pairs.
struct CollisionEvent {
    double theta = 0.0;
    double phi = 0.0;
    Vec3 v, vstar;
    Vec3 v_post, vstar_post;
};

// Deterministic frame: picks the coordinate axis least aligned with X,
// Gram-Schmidt orthogonalizes it, and completes with the cross product.
CollisionFrame build_frame(const Vec3& x);

// Post-collision velocities
//   v'  = v  - sin^2(theta/2) (v - v*) + (sin theta / 2) Gamma(v - v*, phi)
//   v*' = v* + sin^2(theta/2) (v - v*) - (sin theta / 2) Gamma(v - v*, phi)
// with Gamma(X, phi) = cos(phi) I(X) + sin(phi) J(X). The same displacement
// is added to one side and subtracted from the other, so momentum is
// conserved bit-for-bit and energy up to rounding.
std::pair<Vec3, Vec3> post_collision(const Vec3& v, const Vec3& vstar, double theta,
                                     double phi);

// Total (phi x theta) collision mass above the cutoff:
//   2 pi * kappa * (lower^-nu - pi^-nu) / nu,
// the closed form for beta = kappa theta^{-nu-1}. Throws for lower <= 0
// (the non-cutoff mass diverges) and lower > pi.
double angular_rate(const KernelParams& params, double lower);

// Inverse-CDF sample of beta restricted to [eps_cut, pi]; monotone in u,
// u = 0 -> eps_cut, u = 1 -> pi.
double sample_theta(const KernelParams& params, double u);

}  // namespace nchp
