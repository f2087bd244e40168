#include "nchp/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nchp {

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma: argument must be positive");
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

namespace {

constexpr int kLogFactTableSize = 2048;

const std::vector<double>& log_fact_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogFactTableSize);
        // accumulate in long double to keep the table accurate to ~1 ulp
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int n = 1; n < kLogFactTableSize; ++n) {
            acc += std::log(static_cast<long double>(n));
            t[n] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

}  // namespace

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
    if (n < kLogFactTableSize) return log_fact_table()[n];
    return log_gamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k outside [0, n]");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

std::uint64_t binomial_exact(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("binomial_exact: k outside [0, n]");
    if (k > n - k) k = n - k;
    // r * (n - k + i) is divisible by i at every step, so the division is exact
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    if (r > static_cast<unsigned __int128>(~0ULL))
        throw std::overflow_error("binomial_exact: result exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

double wallis_factor(int k) {
    if (k < 0 || k % 2 != 0)
        throw std::invalid_argument("wallis_factor: k must be even and nonnegative");
    if (k == 0) return 1.0;
    int h = k / 2;
    return std::exp(log_factorial(k) - k * M_LN2 - 2.0 * log_factorial(h));
}

VandermondeCheck vandermonde(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("vandermonde: negative argument");
    VandermondeCheck out{};
    int m = std::min(a, b);
    if (a + b <= 60) {
        unsigned __int128 lhs = 0;
        for (int l = 0; l <= m; ++l) {
            lhs += static_cast<unsigned __int128>(binomial_exact(a, l)) * binomial_exact(b, l);
        }
        std::uint64_t rhs = binomial_exact(a + b, a);
        out.lhs = static_cast<double>(static_cast<std::uint64_t>(lhs));
        out.rhs = static_cast<double>(rhs);
        out.exact = true;
        out.holds = (lhs == rhs);
        return out;
    }
    // log-space: sum positive terms scaled by their maximum
    double log_rhs = log_binomial(a + b, a);
    double max_log = -INFINITY;
    std::vector<double> logs(m + 1);
    for (int l = 0; l <= m; ++l) {
        logs[l] = log_binomial(a, l) + log_binomial(b, l);
        max_log = std::max(max_log, logs[l]);
    }
    double s = 0.0;
    for (int l = 0; l <= m; ++l) s += std::exp(logs[l] - max_log);
    double log_lhs = max_log + std::log(s);
    out.lhs = log_lhs;
    out.rhs = log_rhs;
    out.exact = false;
    out.holds = std::fabs(log_lhs - log_rhs) <= 1e-12 * std::max(1.0, std::fabs(log_rhs));
    return out;
}

}  // namespace nchp
