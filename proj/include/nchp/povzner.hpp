#pragma once

#include <cstddef>
#include <vector>

#include "nchp/kernel.hpp"
#include "nchp/quadrature.hpp"
#include "nchp/vec3.hpp"

namespace nchp {

// Azimuthal average (1/2pi) int_0^{2pi} |v'|^{2n} dphi in closed form: the
// two extreme terms plus a sum over {i+j+k=n, i,j <= n-1, k even} with
// multinomial weights n!/(i! j! [(k/2)!]^2), all accumulated in log-space so
// the combinatorics stay finite up to n = 200. Throws for n < 1.
double theta_average_exact(int n, const Vec3& v, const Vec3& vstar, double theta);

// Integrand of the pair functional below at fixed theta, without the cross
// section: the azimuthal average of |v'|^{2n} + |v*'|^{2n} - |v|^{2n} -
// |v*|^{2n}. Evaluated through a resummed form that is O(n) per call and
// cancellation-free as theta -> 0, where the value decays like theta^2.
double collision_integrand(int n, const Vec3& v, const Vec3& vstar, double theta);

// D_n(v, v*) = int_0^pi int_0^{2pi} [|v'|^{2n} + |v*'|^{2n} - |v|^{2n} -
// |v*|^{2n}] dphi beta(theta) dtheta, by adaptive quadrature on a mesh graded
// toward theta = 0 (integrand ~ theta^{1-nu} there). Throws QuadratureError
// when the estimated error exceeds the relative target.
double collision_functional(int n, const Vec3& v, const Vec3& vstar,
                            const KernelParams& params, const QuadOptions& opts = d_n_options());

// a_n = int_0^pi (1 - [(1+cos)/2]^n - [(1-cos)/2]^n) beta dtheta; nonnegative
// integrand, grows like n^{nu/2}.
double a_n_integral(int n, const KernelParams& params, const QuadOptions& opts = {});

// J_{n,a} = int_0^pi [(1+cos)/2]^a [(1-cos)/2]^{n-a} beta dtheta for
// 1 <= a <= n-1; integrand ~ theta^{2(n-a)-nu-1} near 0.
double j_integral(int n, int a, const KernelParams& params, const QuadOptions& opts = {});

// I_{i,j,k} = int_0^pi [(1+cos)/2]^i [(1-cos)/2]^j [sin/2]^k beta dtheta,
// kept in the literal three-exponent form for the cross-check against
// J_{n,a} binom(n,a)^2.
double i_integral(int i, int j, int k, const KernelParams& params,
                  const QuadOptions& opts = {});

// Half-interval pieces of the J_{n,a} estimate: K over (0, pi/2] against
// theta^{-nu-1}, L = (2/pi)^{nu+1} times the plain integral over [pi/2, pi].
double k_half_integral(double nu, int n, int a, const QuadOptions& opts = {});
double l_half_integral(double nu, int n, int a, const QuadOptions& opts = {});

// u_{nu,k} = Gamma(k+1)/Gamma(k+1-nu/2), asymptotically k^{nu/2}.
double u_ratio(double nu, double k);

// K_{n,a} = sum over {(i,j,k) : i+k/2 = a} of the multinomial-weighted
// I_{i,j,k}; equals J_{n,a} binom(n,a)^2.
double k_sum_direct(int n, int a, const KernelParams& params, const QuadOptions& opts = {});

// Default quadrature targets: 1e-9 for the single integrals, 1e-8 for the
// pair functional, which stacks the azimuthal closed form on top.
inline QuadOptions d_n_options() {
    QuadOptions o;
    o.rel_tol = 1e-8;
    return o;
}

struct PovznerConstants {
    double zeta1 = 0.0;    // kappa1 / (20 (2 - nu)), explicit
    double zeta2 = 0.0;    // grid-calibrated with a 5% safety factor
    double lambda1 = 0.0;  // 2 pi zeta1
    double lambda2 = 0.0;  // 2 pi zeta2
    int zeta2_n_max = 0;   // calibration range; zeta2 is certified there only
    int argmax_n = 0;      // where the zeta2 ratio peaks
    int argmax_a = 0;
};

// zeta1 from its explicit formula; zeta2 = 1.05 * max over
// {2 <= n <= n_max, 1 <= a <= n-1} of binom(n,a) J_{n,a} divided by
// n^{nu/2}/(n-a)^{nu/2+1} + 1/a.
PovznerConstants calibrate_constants(const KernelParams& params, int n_max,
                                     const QuadOptions& opts = {});

struct PovznerGridSpec {
    std::vector<int> n_values;
    std::vector<double> speeds;
    std::vector<double> angles;  // angle between v and v*
};

// n in [2, 50], speeds 10^-2..10^2 (9-point log grid), 5 relative angles
PovznerGridSpec default_povzner_grid();

struct PovznerPoint {
    int n = 0;
    double speed_v = 0.0;
    double speed_w = 0.0;
    double angle = 0.0;
    double d_n = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - d_n, >= 0 when certified
};

struct PovznerReport {
    KernelParams params;
    PovznerConstants constants;
    PovznerGridSpec grid;
    std::size_t points = 0;
    double worst_slack = 0.0;           // minimum slack over the grid
    double worst_relative_slack = 0.0;  // slack / (|D_n| + drift-term scale)
    std::vector<PovznerPoint> violations;
    bool certified() const { return points > 0 && violations.empty(); }
};

// Upper bound of the pair inequality:
//   -lambda1 n^{nu/2} (|v|^{2n} + |v*|^{2n})
//   + lambda2 sum_a binom(n,a) (n^{nu/2}/(n-a)^{nu/2+1} + 1/a)
//                  (|v|^{2a}|v*|^{2(n-a)} + |v|^{2(n-a)}|v*|^{2a})
double povzner_rhs(int n, const Vec3& v, const Vec3& vstar, const PovznerConstants& c,
                   double nu);

// Sweeps the grid checking D_n <= rhs pointwise.
PovznerReport certify_povzner(const KernelParams& params, const PovznerConstants& consts,
                              const PovznerGridSpec& grid);

}  // namespace nchp
