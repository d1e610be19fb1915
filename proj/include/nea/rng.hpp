#pragma once

#include <cstdint>

namespace nea {

// splitmix64 step; used for seeding and for deriving per-task stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic mix of a master seed with two stream coordinates.
/// stream_seed(master, a, b) feeds master, a, b through splitmix64 in
/// that order, so distinct (a, b) pairs give decorrelated streams.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s = h ^ a;
    h = splitmix64(s);
    s = h ^ b;
    return splitmix64(s);
}

/// xoshiro256++ generator. Hand-rolled (not std::) so that sequences are
/// bit-exact across platforms and standard libraries; std distribution
/// objects are implementation-defined and must not be used with it.
///
/// Draw accounting, relied on by callers that document their draw budget:
///   next()          1 draw
///   u01()           1 draw, value in [0,1) with 53-bit resolution
///   bernoulli(p)    1 draw
///   index_below(n)  1 draw (floor(u01*n); grid bias ~n/2^53 is negligible)
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t next() {
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

    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return u01() < p; }

    std::uint64_t index_below(std::uint64_t n) {
        std::uint64_t i = static_cast<std::uint64_t>(u01() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace nea
