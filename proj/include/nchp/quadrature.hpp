#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace nchp {

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;     // extra absolute floor, 0 disables
    int max_depth = 28;       // bisection depth per panel
    int grading_levels = 40;  // initial mesh breakpoints upper * 2^{-k}
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // accumulated error estimate
    bool converged = false;
    std::size_t evaluations = 0;
};

// Integrates f over (0, upper] where f(x) ~ C x^s as x -> 0 with s > -1.
// The initial mesh is dyadically graded toward 0; each panel is handled by a
// Gauss rule with bisection refinement. The stub (0, upper*2^-levels] is
// closed with the power-law model, exact when f is a pure power there.
QuadResult integrate_graded(const std::function<double(double)>& f, double upper,
                            double endpoint_exponent, const QuadOptions& opts = {});

// Plain adaptive Gauss integration over [a, b] (no endpoint singularity).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts = {});

}  // namespace nchp
