#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace marsnav {

/// splitmix64 step; also used as a stateless integer mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
    std::uint64_t s = seed ^ (v + 0x9e3779b97f4a7c15ULL);
    return splitmix64(s);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Small deterministic generator used everywhere in the simulator. The
/// engine is splitmix64, which is plenty for simulation noise and keeps
/// sequences identical across platforms (std:: distributions are not
/// portable). Independent streams are made with fork().
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {
        // decorrelate trivially related seeds
        splitmix64(state_);
    }

    /// Independent child stream; same (seed, tag) always gives the same stream.
    Rng fork(std::uint64_t tag) const { return Rng(hash_combine(state_, tag)); }
    Rng fork(std::string_view tag) const { return fork(fnv1a(tag)); }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // modulo bias is irrelevant at simulation scales
        return n == 0 ? 0 : next_u64() % n;
    }

    /// Box-Muller; consumes two uniforms per sample.
    double gaussian(double mean = 0.0, double sigma = 0.0) {
        if (sigma == 0.0) return mean;
        double u1 = uniform();
        const double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace marsnav
