#pragma once

#include <cstdint>
#include <random>

namespace g2 {

// Thin wrapper over mt19937_64 that produces the same stream on every
// platform. std::uniform_real_distribution is implementation-defined, so we
// do the float conversion ourselves.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

    /// Symmetric values in [-1, 1).
    double sym() { return uniform(-1.0, 1.0); }

    /// Independent stream derived from the original seed; trial i of a
    /// multi-start search uses fork(i) so that raising the trial count only
    /// adds candidates and never perturbs earlier ones.
    Rng fork(std::uint64_t salt) const {
        return Rng(seed_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace g2
