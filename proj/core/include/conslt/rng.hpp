#pragma once

#include <cmath>
#include <cstdint>

namespace conslt {

inline constexpr double kPi = 3.14159265358979323846;

// Deterministic counter-based generator (splitmix64). The state advances by a
// fixed increment per draw and the output is a bijective mix of the state, so
// the whole stream is a pure function of (seed, draw index).
//
// Reference outputs, seed 0: 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4,
// 0x06c45d188009454f, 0xf88bb8a8724c81ec (frozen in tests/test_rng.cpp).
class RngState {
public:
    explicit RngState(std::uint64_t seed, std::uint64_t stream_id = 0)
        : state_(seed), stream_id_(stream_id) {}

    std::uint64_t next_u64() {
        ++draws_;
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Standard normal via Box-Muller (no cached spare; two draws per call).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    // Derives an independent substream. Disjoint stream_ids give streams that
    // never collide with the parent or with each other.
    RngState fork(std::uint64_t stream_id) const {
        return RngState(mix(state_ ^ mix(stream_id * 0xD6E8FEB86659FD93ULL + 0x2545F4914F6CDD1DULL)),
                        stream_id);
    }

    std::uint64_t draws() const { return draws_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    std::uint64_t stream_id_;
    std::uint64_t draws_ = 0;
};

}  // namespace conslt
