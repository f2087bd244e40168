#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "nchp/vec3.hpp"

namespace nchp {

// All distribution transforms are hand-rolled on top of mt19937_64, whose
// output sequence is fixed by the standard, so a (seed, config) pair produces
// identical streams on every platform and compiler.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]
    double uniform_pos() { return 1.0 - uniform(); }

    // uniform integer in [0, n), Lemire multiply-shift
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    double exponential() { return -std::log(uniform_pos()); }

    // Marsaglia polar method
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Gamma with integer shape, unit scale: sum of iid exponentials
    double gamma_int(int shape) {
        double s = 0.0;
        for (int i = 0; i < shape; ++i) s += exponential();
        return s;
    }

    Vec3 isotropic_direction() {
        double c = 2.0 * uniform() - 1.0;
        double phi = 2.0 * M_PI * uniform();
        double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        return {s * std::cos(phi), s * std::sin(phi), c};
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream for replicate r of a run seeded with `seed`.
inline Rng replicate_rng(std::uint64_t seed, std::uint64_t replicate) {
    return Rng(splitmix64(seed ^ splitmix64(replicate + 1)));
}

}  // namespace nchp
