#include "nchp/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace nchp {

double KernelParams::beta(double theta) const {
    return kappa * std::pow(theta, -nu - 1.0);
}

void KernelParams::validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("KernelParams: gamma must lie in (0, 1]");
    if (!(nu > 0.0 && nu < 2.0))
        throw std::invalid_argument("KernelParams: nu must lie in (0, 2)");
    if (!(kappa1 > 0.0 && kappa1 <= kappa && kappa <= kappa2))
        throw std::invalid_argument("KernelParams: need 0 < kappa1 <= kappa <= kappa2");
    if (!(eps_cut > 0.0 && eps_cut < M_PI))
        throw std::invalid_argument("KernelParams: eps_cut must lie in (0, pi)");
}

CollisionFrame build_frame(const Vec3& x) {
    CollisionFrame f{x, {}, {}};
    double n2 = x.norm2();
    if (n2 == 0.0) return f;  // I(0) = J(0) = 0
    double n = std::sqrt(n2);

    // axis least aligned with x (first index on ties)
    double ax = std::fabs(x.x), ay = std::fabs(x.y), az = std::fabs(x.z);
    Vec3 e;
    if (ax <= ay && ax <= az) e = {1.0, 0.0, 0.0};
    else if (ay <= az) e = {0.0, 1.0, 0.0};
    else e = {0.0, 0.0, 1.0};

    Vec3 xhat = x / n;
    Vec3 u = e - xhat * e.dot(xhat);
    f.i = u * (n / u.norm());
    f.j = xhat.cross(f.i);
    return f;
}

std::pair<Vec3, Vec3> post_collision(const Vec3& v, const Vec3& vstar, double theta,
                                     double phi) {
    Vec3 x = v - vstar;
    CollisionFrame frame = build_frame(x);
    double sh = std::sin(0.5 * theta);
    double ch = std::cos(0.5 * theta);
    // (1 - cos theta)/2 = sin^2(theta/2), sin(theta)/2 = sin(theta/2)cos(theta/2):
    // both stay accurate for grazing angles
    Vec3 gamma_vec = frame.i * std::cos(phi) + frame.j * std::sin(phi);
    Vec3 delta = gamma_vec * (sh * ch) - x * (sh * sh);
    return {v + delta, vstar - delta};
}

double angular_rate(const KernelParams& params, double lower) {
    if (!(lower > 0.0))
        throw std::invalid_argument("angular_rate: cutoff must be positive (rate diverges)");
    if (lower > M_PI) throw std::invalid_argument("angular_rate: cutoff exceeds pi");
    double nu = params.nu;
    return 2.0 * M_PI * params.kappa *
           (std::pow(lower, -nu) - std::pow(M_PI, -nu)) / nu;
}

double sample_theta(const KernelParams& params, double u) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::invalid_argument("sample_theta: u must lie in [0, 1]");
    double nu = params.nu;
    double a = std::pow(params.eps_cut, -nu);
    double b = std::pow(M_PI, -nu);
    return std::pow(a - u * (a - b), -1.0 / nu);
}

}  // namespace nchp
