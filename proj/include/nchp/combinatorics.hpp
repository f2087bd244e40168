#pragma once

#include <cstdint>

namespace nchp {

// Thread-safe log-Gamma (std::lgamma races on signgam). Arguments must be
// positive.
double log_gamma(double x);

// log(n!) with a cached table for integer n.
double log_factorial(int n);

// log of binomial(n, k)
double log_binomial(int n, int k);

// Exact binomial; valid while the result fits in uint64 (n <= 62 always
// works, larger n for small k).
std::uint64_t binomial_exact(int n, int k);

// k! / (2^k ((k/2)!)^2) for even k >= 0: the full-circle average of sin^k.
// Evaluated in log-space so it stays finite for large k. Throws on odd or
// negative k (the odd-power average vanishes and must not be asked for).
double wallis_factor(int k);

struct VandermondeCheck {
    double lhs;       // sum_l binom(a,l) binom(b,l)
    double rhs;       // binom(a+b, a)
    bool exact;       // integer path used (a + b <= 60)
    bool holds;       // exact equality, or relative agreement <= 1e-12
};

// Convolution identity sum_l binom(a,l) binom(b,l) = binom(a+b,a), both sides
// computed independently: exact integers up to a+b = 60, log-space beyond.
VandermondeCheck vandermonde(int a, int b);

}  // namespace nchp
