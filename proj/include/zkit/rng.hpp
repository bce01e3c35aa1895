#pragma once

#include <cstdint>

#include "zkit/rat.hpp"

namespace zkit {

/// SplitMix64 (Steele, Lea, Flood 2014): the pinned generator for every
/// seeded sampling routine. Splittable, so independent streams can be derived
/// per axis or per candidate without coordination.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream seeded from this one.
    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Random rational with numerator in [-span, span] and denominator in
    /// [1, span]; small by design so downstream discriminants stay cheap to
    /// canonicalize.
    Rat rat(long span = 12) {
        long num = range(-span, span);
        long den = range(1, span);
        return Rat(Int(num), Int(den));
    }

    /// Nonzero variant.
    Rat nonzero_rat(long span = 12) {
        for (;;) {
            Rat r = rat(span);
            if (!r.is_zero()) return r;
        }
    }

    /// Rational strictly inside (0, 1).
    Rat unit_rat(long span = 12) {
        long den = range(2, span < 2 ? 2 : span);
        long num = range(1, den - 1);
        return Rat(Int(num), Int(den));
    }

    /// Rational slope strictly inside (-1, 1).
    Rat slope(long span = 12) {
        long den = range(2, span < 2 ? 2 : span);
        long num = range(-(den - 1), den - 1);
        return Rat(Int(num), Int(den));
    }

private:
    std::uint64_t state_;
};

}  // namespace zkit
