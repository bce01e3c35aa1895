#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here must stay independent of the implementation paths it checks: the
// comparison oracle brackets values with integer square roots only.

#include <optional>
#include <utility>

#include "zkit/minkowski.hpp"
#include "zkit/onedimset.hpp"
#include "zkit/quadext.hpp"
#include "zkit/rat.hpp"
#include "zkit/rng.hpp"

namespace zkit::testing {

/// Rational bracket of sqrt(c) to `bits` fractional bits: isqrt(c * 4^bits)
/// over 2^bits.
inline std::pair<Rat, Rat> sqrt_bracket(const Int& c, unsigned bits) {
    Int scaled = c << (2 * bits);
    Int root = boost::multiprecision::sqrt(scaled);
    Int denom = Int(1) << bits;
    return {Rat(root, denom), Rat(root + 1, denom)};
}

/// Rational interval guaranteed to contain a + b*sqrt(c).
inline std::pair<Rat, Rat> value_bracket(const QuadExt& x, unsigned bits) {
    Rat a = x.a(), b = x.b();
    if (b.is_zero()) return {a, a};
    auto [lo, hi] = sqrt_bracket(x.c().num(), bits);
    if (b.sign() > 0) return {a + b * lo, a + b * hi};
    return {a + b * hi, a + b * lo};
}

/// Bracketing comparison oracle: refine until the intervals separate; values
/// that never separate at 512 bits are reported equal.
inline Ordering bracket_cmp(const QuadExt& x, const QuadExt& y) {
    for (unsigned bits = 32; bits <= 512; bits *= 2) {
        auto [xl, xh] = value_bracket(x, bits);
        auto [yl, yh] = value_bracket(y, bits);
        if (xh < yl) return Ordering::Less;
        if (yh < xl) return Ordering::Greater;
    }
    return Ordering::Equal;
}

inline QuadExt random_quadext(SplitMix64& rng, long span = 8) {
    Rat a = rng.rat(span);
    if (rng.below(3) == 0) return QuadExt(a);
    return QuadExt(a, rng.nonzero_rat(span), Rat(static_cast<long>(rng.below(30))));
}

inline OneDimSet random_set(SplitMix64& rng) {
    std::vector<Piece> raw;
    std::size_t n = rng.below(4);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.below(4) == 0) {
            raw.push_back(Piece::point(random_quadext(rng)));
            continue;
        }
        QuadExt a = random_quadext(rng);
        QuadExt b = random_quadext(rng);
        if (a.cmp(b) > 0) std::swap(a, b);
        Bound lo = rng.below(8) == 0 ? Bound::neg_inf() : Bound::at(a);
        Bound hi = rng.below(8) == 0 ? Bound::pos_inf() : Bound::at(b);
        raw.push_back(
            Piece::interval(lo, hi, rng.below(2) == 0, rng.below(2) == 0));
    }
    return OneDimSet::from_pieces(std::move(raw));
}

inline Point random_point(SplitMix64& rng, long span = 10) {
    return Point({rng.rat(span), rng.rat(span)});
}

inline Vector random_vector_of_class(SplitMix64& rng, CausalClass klass, long span = 10) {
    for (;;) {
        Rat scale = rng.nonzero_rat(span);
        switch (klass) {
            case CausalClass::Timelike: {
                Vector v{scale, scale * rng.slope()};
                if (causal_class(v) == CausalClass::Timelike) return v;
                break;
            }
            case CausalClass::Spacelike: {
                Vector v{scale * rng.slope(), scale};
                if (causal_class(v) == CausalClass::Spacelike) return v;
                break;
            }
            case CausalClass::Lightlike: {
                Rat s = rng.below(2) == 0 ? scale : -scale;
                return Vector{scale, s};
            }
            case CausalClass::Zero: return Vector{Rat(0), Rat(0)};
        }
    }
}

/// Random axis; through `through` when given, else based at a random point.
inline Axis random_axis(SplitMix64& rng, const std::optional<Point>& through = std::nullopt) {
    Point base = through ? *through : random_point(rng);
    if (rng.below(2) == 0)
        return Axis::timelike_line(base, random_vector_of_class(rng, CausalClass::Timelike));
    return Axis::spacelike_line(base, random_vector_of_class(rng, CausalClass::Spacelike));
}

}  // namespace zkit::testing
