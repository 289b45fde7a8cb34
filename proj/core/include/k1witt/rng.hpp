#pragma once

#include <cstdint>

namespace k1witt {

/// splitmix64: tiny, seedable, and platform-independent, so seeded runs
/// are bit-reproducible everywhere (std::uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); the tiny modulo bias is irrelevant for
    /// test-case generation and keeps the stream trivially portable.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace k1witt
