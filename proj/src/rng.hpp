#pragma once

#include <cmath>
#include <cstdint>

namespace brw {

// splitmix64, used for seeding only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ by Blackman & Vigna. Small state, fast, and trivially
// seedable per replica, which is what the replica-indexed stream contract
// needs. Not cryptographic.
class Rng {
  public:
    Rng() : Rng(0x853c49e6748fea9bULL) {}

    explicit Rng(std::uint64_t seed) { reseed(seed); }

    // Derives an independent stream for (master seed, replica index).
    Rng(std::uint64_t master_seed, std::uint64_t stream_index) {
        reseed(master_seed ^ (0x9e3779b97f4a7c15ULL * (stream_index + 1)));
    }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
        have_cached_normal_ = false;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on (0,1); never returns 0 so log() is safe.
    double uniform() {
        const std::uint64_t bits = next_u64() >> 11;  // 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Marsaglia polar, with the second variate cached.
    double normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        cached_normal_ = v * m;
        have_cached_normal_ = true;
        return u * m;
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    double exponential() { return -std::log(uniform()); }

    // Knuth product-of-uniforms; large means are split additively so the
    // running product stays representable.
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 60.0) {
            total += poisson_knuth(30.0);
            mean -= 30.0;
        }
        return total + poisson_knuth(mean);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t poisson_knuth(double mean) {
        const double limit = std::exp(-mean);
        double prod = uniform();
        std::uint64_t k = 0;
        while (prod > limit) {
            ++k;
            prod *= uniform();
        }
        return k;
    }

    std::uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool have_cached_normal_ = false;
};

}  // namespace brw
