#include "nchp/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace nchp {

namespace {

constexpr int kGaussN = 15;

struct GaussRule {
    std::array<double, kGaussN> node;    // on [-1, 1]
    std::array<double, kGaussN> weight;
};

// Nodes are the roots of the degree-15 Legendre polynomial, found by Newton
// iteration from the Chebyshev initial guess; generating them avoids a
// hardcoded constant table.
GaussRule make_gauss_rule() {
    GaussRule r{};
    const int n = kGaussN;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        r.node[i] = -x;
        r.node[n - 1 - i] = x;
        r.weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weight[n - 1 - i] = r.weight[i];
    }
    return r;
}

const GaussRule& gauss_rule() {
    static const GaussRule r = make_gauss_rule();
    return r;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   std::size_t& evals) {
    const GaussRule& r = gauss_rule();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kGaussN; ++i) {
        s += r.weight[i] * f(mid + half * r.node[i]);
    }
    evals += kGaussN;
    return s * half;
}

// Bisection refinement: a panel is accepted when one-shot Gauss agrees with
// the sum over its halves.
void refine_panel(const std::function<double(double)>& f, double a, double b, double whole,
                  double tol, int depth, const QuadOptions& opts, double& total, double& err,
                  bool& converged, std::size_t& evals) {
    double mid = 0.5 * (a + b);
    double left = gauss_panel(f, a, mid, evals);
    double right = gauss_panel(f, mid, b, evals);
    double diff = std::fabs(whole - (left + right));
    if (diff <= tol || depth >= opts.max_depth) {
        total += left + right;
        err += diff;
        if (diff > tol) converged = false;
        return;
    }
    refine_panel(f, a, mid, left, 0.5 * tol, depth + 1, opts, total, err, converged, evals);
    refine_panel(f, mid, b, right, 0.5 * tol, depth + 1, opts, total, err, converged, evals);
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& breaks, const QuadOptions& opts,
                        QuadResult& out) {
    std::size_t evals = 0;
    // rough pass to set the absolute tolerance scale
    std::vector<double> rough(breaks.size() - 1);
    double rough_total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        rough[i] = gauss_panel(f, breaks[i], breaks[i + 1], evals);
        rough_total += std::fabs(rough[i]);
    }
    double scale = std::max(rough_total, opts.abs_tol > 0 ? opts.abs_tol : 0.0);
    double budget = std::max(opts.rel_tol * scale, opts.abs_tol);
    if (budget == 0.0) budget = 1e-300;
    double per_panel = budget / static_cast<double>(breaks.size() - 1);

    double total = 0.0, err = 0.0;
    bool converged = true;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        refine_panel(f, breaks[i], breaks[i + 1], rough[i], per_panel, 0, opts, total, err,
                     converged, evals);
    }
    out.error = err;
    out.converged = converged;
    out.evaluations = evals;
    return total;
}

}  // namespace

QuadResult integrate_graded(const std::function<double(double)>& f, double upper,
                            double endpoint_exponent, const QuadOptions& opts) {
    if (!(upper > 0.0)) throw QuadratureError("integrate_graded: upper bound must be positive");
    if (!(endpoint_exponent > -1.0))
        throw QuadratureError("integrate_graded: endpoint exponent must exceed -1");
    QuadResult out{};
    std::vector<double> breaks;
    breaks.reserve(opts.grading_levels + 1);
    for (int k = opts.grading_levels; k >= 0; --k) {
        breaks.push_back(upper * std::ldexp(1.0, -k));
    }
    double total = integrate_panels(f, breaks, opts, out);

    // stub (0, upper*2^-levels]: with f = C x^s the remainder is
    // f(d) * d / (s + 1); relative model error is O(d^2) here
    double d = breaks.front();
    double stub = f(d) * d / (endpoint_exponent + 1.0);
    out.evaluations += 1;
    out.value = total + stub;
    double scale = std::max(std::fabs(out.value), opts.abs_tol);
    if (out.error > opts.rel_tol * scale * 4.0 && out.error > opts.abs_tol) {
        out.converged = false;
    }
    return out;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts) {
    if (!(b > a)) throw QuadratureError("integrate_adaptive: empty interval");
    QuadResult out{};
    std::vector<double> breaks{a, 0.5 * (a + b), b};
    out.value = integrate_panels(f, breaks, opts, out);
    double scale = std::max(std::fabs(out.value), opts.abs_tol);
    if (out.error > opts.rel_tol * scale * 4.0 && out.error > opts.abs_tol) {
        out.converged = false;
    }
    return out;
}

}  // namespace nchp
