#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/minkowski.hpp"
#include "zkit/rat.hpp"

namespace zkit {

namespace detail {

/// n with ratio^n == value exactly, for ratio in (0,1); nullopt otherwise.
inline std::optional<std::size_t> power_index(const Rat& value, const Rat& ratio) {
    if (value.sign() <= 0) return std::nullopt;
    if (value == Rat(1)) return 0;
    if (value > Rat(1)) return std::nullopt;
    Rat cur = ratio;
    std::size_t n = 1;
    while (cur > value) {
        cur *= ratio;
        ++n;
    }
    if (cur == value) return n;
    return std::nullopt;
}

}  // namespace detail

/// The rotating timelike directions d_n = e0 + (1 - 1/(n+2)) e1, pairwise
/// non-proportional with slopes strictly inside (0,1).
inline Vector rotating_direction(std::size_t n) {
    Rat slope = Rat(1) - Rat(Int(1), Int(n + 2));
    return Vector{Rat(1), slope};
}

/// Inverse of rotating_direction on slopes: n with slope == (n+1)/(n+2).
inline std::optional<std::size_t> rotating_index_of_slope(const Rat& slope) {
    Rat gap = Rat(1) - slope;
    if (gap.sign() <= 0) return std::nullopt;
    Rat inv = Rat(1) / gap;  // should be n + 2
    if (!inv.is_integer()) return std::nullopt;
    Int n2 = inv.num();
    if (n2 < 2) return std::nullopt;
    return static_cast<std::size_t>(n2.convert_to<unsigned long>()) - 2;
}

struct GeometricOnLine {
    Point p;
    Vector v;  // nonzero; p_n = p + ratio^n v
    Rat ratio;
};

struct RotatingAxial {
    Point p;
    Rat ratio;  // p_n = p + ratio^n d_n
};

struct ConeSequence {
    Point p;
    Vector dir;  // lightlike; p_n = p + ratio^n dir
    Rat ratio;
};

struct FinitePrefix {
    std::vector<Point> points;
    Point limit;
};

/// Axial family with per-index radial scales produced by a deterministic
/// generator (each scale positive and at most ratio^n, so convergence and the
/// one-point-per-axis property are inherited from the rotating construction).
struct ScaledAxial {
    Point p;
    Rat ratio;
    std::function<Rat(std::size_t)> scale;
};

/// Hits of a sequence image on a probe line.
struct LineTrace {
    bool infinite = false;                           // whole tail lies on the line
    std::vector<std::pair<std::size_t, Rat>> hits;   // (index, parameter on the line)
};

/// Closed-form point sequence with an exact limit; the unit of Zeno
/// classification. Immutable; points are generated on demand.
class SequenceFamily {
public:
    using Impl = std::variant<GeometricOnLine, RotatingAxial, ConeSequence, FinitePrefix,
                              ScaledAxial>;

    static SequenceFamily geometric_on_line(Point p, Vector v, Rat ratio) {
        if (v.is_zero()) throw InvalidArgument("GeometricOnLine requires a nonzero direction");
        check_ratio(ratio);
        return SequenceFamily(GeometricOnLine{std::move(p), std::move(v), std::move(ratio)});
    }
    static SequenceFamily rotating_axial(Point p, Rat ratio) {
        require_k1(p, "RotatingAxial");
        check_ratio(ratio);
        return SequenceFamily(RotatingAxial{std::move(p), std::move(ratio)});
    }
    static SequenceFamily cone_sequence(Point p, Vector dir, Rat ratio) {
        if (causal_class(dir) != CausalClass::Lightlike)
            throw InvalidArgument("ConeSequence requires a lightlike direction");
        check_ratio(ratio);
        return SequenceFamily(ConeSequence{std::move(p), std::move(dir), std::move(ratio)});
    }
    static SequenceFamily finite_prefix(std::vector<Point> points, Point limit) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] == limit)
                throw InvalidArgument("FinitePrefix points must differ from the limit");
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw InvalidArgument("FinitePrefix points must be pairwise distinct");
        }
        return SequenceFamily(FinitePrefix{std::move(points), std::move(limit)});
    }
    static SequenceFamily scaled_axial(Point p, Rat ratio, std::function<Rat(std::size_t)> scale) {
        require_k1(p, "ScaledAxial");
        check_ratio(ratio);
        return SequenceFamily(ScaledAxial{std::move(p), std::move(ratio), std::move(scale)});
    }

    const Impl& impl() const { return impl_; }

    std::string kind() const {
        if (std::holds_alternative<GeometricOnLine>(impl_)) return "geometric-on-line";
        if (std::holds_alternative<RotatingAxial>(impl_)) return "rotating-axial";
        if (std::holds_alternative<ConeSequence>(impl_)) return "cone-sequence";
        if (std::holds_alternative<FinitePrefix>(impl_)) return "finite-prefix";
        return "scaled-axial";
    }

    /// Limit point of the sequence in the natural topology.
    const Point& limit() const {
        return std::visit(
            [](const auto& f) -> const Point& {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, FinitePrefix>)
                    return f.limit;
                else
                    return f.p;
            },
            impl_);
    }

    bool has_point(std::size_t n) const {
        if (const auto* fp = std::get_if<FinitePrefix>(&impl_)) return n < fp->points.size();
        return true;
    }

    Point point(std::size_t n) const {
        return std::visit(
            [n](const auto& f) -> Point {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, GeometricOnLine>) {
                    return f.p + f.ratio.pow(static_cast<unsigned>(n)) * f.v;
                } else if constexpr (std::is_same_v<T, RotatingAxial>) {
                    return f.p + f.ratio.pow(static_cast<unsigned>(n)) * rotating_direction(n);
                } else if constexpr (std::is_same_v<T, ConeSequence>) {
                    return f.p + f.ratio.pow(static_cast<unsigned>(n)) * f.dir;
                } else if constexpr (std::is_same_v<T, FinitePrefix>) {
                    if (n >= f.points.size())
                        throw InvalidArgument("FinitePrefix index out of range");
                    return f.points[n];
                } else {
                    Rat s = f.scale(n);
                    if (s.sign() <= 0 || s > f.ratio.pow(static_cast<unsigned>(n)))
                        throw InvalidArgument("ScaledAxial scale out of contract");
                    return f.p + s * rotating_direction(n);
                }
            },
            impl_);
    }

    /// Exact inverse of point(): the index n with point(n) == x, if any.
    std::optional<std::size_t> membership_index(const Point& x) const {
        return std::visit(
            [&x, this](const auto& f) -> std::optional<std::size_t> {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, GeometricOnLine> ||
                              std::is_same_v<T, ConeSequence>) {
                    const Vector dir = direction_of(f);
                    Vector d = x - f.p;
                    std::optional<Rat> rho;
                    for (std::size_t i = 0; i < dir.dim(); ++i) {
                        if (dir[i].is_zero()) {
                            if (!d[i].is_zero()) return std::nullopt;
                            continue;
                        }
                        Rat r = d[i] / dir[i];
                        if (rho && !(*rho == r)) return std::nullopt;
                        rho = r;
                    }
                    if (!rho) return std::nullopt;
                    return detail::power_index(*rho, f.ratio);
                } else if constexpr (std::is_same_v<T, RotatingAxial>) {
                    Vector d = x - f.p;
                    auto n = detail::power_index(d[0], f.ratio);
                    if (!n) return std::nullopt;
                    if (point(*n) == x) return n;
                    return std::nullopt;
                } else if constexpr (std::is_same_v<T, FinitePrefix>) {
                    for (std::size_t i = 0; i < f.points.size(); ++i)
                        if (f.points[i] == x) return i;
                    return std::nullopt;
                } else {
                    Vector d = x - f.p;
                    if (d[0].sign() <= 0) return std::nullopt;
                    auto n = rotating_index_of_slope(d[1] / d[0]);
                    if (!n) return std::nullopt;
                    if (point(*n) == x) return n;
                    return std::nullopt;
                }
            },
            impl_);
    }

    /// All sequence points lying on the probe line (k = 1), as parameters.
    /// The trace is infinite exactly when the line carries the whole tail,
    /// which happens only for the on-a-line variants restricted to their own
    /// carrier.
    LineTrace line_trace(const Point& base, const Vector& dir) const {
        require_k1(base, "line_trace");
        if (dir.is_zero()) throw InvalidArgument("line_trace requires a nonzero direction");
        return std::visit(
            [&](const auto& f) -> LineTrace {
                using T = std::decay_t<decltype(f)>;
                LineTrace out;
                if constexpr (std::is_same_v<T, GeometricOnLine> ||
                              std::is_same_v<T, ConeSequence>) {
                    const Vector carrier = direction_of(f);
                    if (cross2(dir, carrier).is_zero() &&
                        cross2(dir, f.p - base).is_zero()) {
                        out.infinite = true;
                        return out;
                    }
                    auto meet = line_line_meet(base, dir, f.p, carrier);
                    if (meet.kind != LineMeet::Single) return out;
                    Point q = base + meet.t * dir;
                    if (auto n = membership_index(q)) out.hits.emplace_back(*n, meet.t);
                    return out;
                } else if constexpr (std::is_same_v<T, FinitePrefix>) {
                    for (std::size_t i = 0; i < f.points.size(); ++i)
                        if (auto t = param_on_line(base, dir, f.points[i]))
                            out.hits.emplace_back(i, *t);
                    return out;
                } else {
                    // axial variants: at most one hit per through-p direction,
                    // finitely many hits for lines missing p
                    if (auto tp = param_on_line(base, dir, f.p)) {
                        (void)tp;
                        if (dir[0].is_zero()) return out;  // spacelike axis through p
                        auto n = rotating_index_of_slope(dir[1] / dir[0]);
                        if (n && has_scale(f, *n)) {
                            Point q = point(*n);
                            if (auto t = param_on_line(base, dir, q))
                                out.hits.emplace_back(*n, *t);
                        }
                        return out;
                    }
                    Rat d2 = euclid_dist2_to_line(base, dir, f.p);
                    // |p_n - p|^2 < 2 ratio^(2n); enumerate until below dist^2
                    Rat bound = Rat(2);
                    Rat rr = f.ratio * f.ratio;
                    for (std::size_t n = 0; bound > d2 || bound == d2; ++n, bound *= rr) {
                        Point q = point(n);
                        if (auto t = param_on_line(base, dir, q)) out.hits.emplace_back(n, *t);
                    }
                    return out;
                }
            },
            impl_);
    }

    SequenceFamily translated(const Vector& v) const {
        return std::visit(
            [&v](const auto& f) -> SequenceFamily {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, GeometricOnLine>) {
                    return SequenceFamily(GeometricOnLine{f.p + v, f.v, f.ratio});
                } else if constexpr (std::is_same_v<T, RotatingAxial>) {
                    return SequenceFamily(RotatingAxial{f.p + v, f.ratio});
                } else if constexpr (std::is_same_v<T, ConeSequence>) {
                    return SequenceFamily(ConeSequence{f.p + v, f.dir, f.ratio});
                } else if constexpr (std::is_same_v<T, FinitePrefix>) {
                    std::vector<Point> pts;
                    pts.reserve(f.points.size());
                    for (const auto& q : f.points) pts.push_back(q + v);
                    return SequenceFamily(FinitePrefix{std::move(pts), f.limit + v});
                } else {
                    return SequenceFamily(ScaledAxial{f.p + v, f.ratio, f.scale});
                }
            },
            impl_);
    }

private:
    explicit SequenceFamily(Impl impl) : impl_(std::move(impl)) {}

    static void check_ratio(const Rat& r) {
        if (!(r.sign() > 0 && r < Rat(1)))
            throw InvalidArgument("ratio must lie strictly in (0, 1)");
    }

    static const Vector& direction_of(const GeometricOnLine& f) { return f.v; }
    static const Vector& direction_of(const ConeSequence& f) { return f.dir; }

    static bool has_scale(const RotatingAxial&, std::size_t) { return true; }
    static bool has_scale(const ScaledAxial&, std::size_t) { return true; }

    Impl impl_;
};

}  // namespace zkit
