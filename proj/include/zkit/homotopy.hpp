#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/minkowski.hpp"
#include "zkit/region.hpp"

namespace zkit {

/// Piecewise-linear closed loop with rational vertices and a rational
/// parametrization of [0,1]; vertex i sits at breakpoint i, and the final
/// edge returns to the base vertex at parameter 1.
class Loop {
public:
    Loop(std::vector<Point> vertices, std::vector<Rat> breakpoints)
        : vertices_(std::move(vertices)), breakpoints_(std::move(breakpoints)) {
        if (vertices_.size() < 2) throw InvalidArgument("loop needs at least two vertices");
        if (breakpoints_.size() != vertices_.size() + 1)
            throw InvalidArgument("loop needs one breakpoint per vertex plus the closing one");
        if (!(breakpoints_.front() == Rat(0)) || !(breakpoints_.back() == Rat(1)))
            throw InvalidArgument("loop parametrization must start at 0 and end at 1");
        for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
            if (!(breakpoints_[i] < breakpoints_[i + 1]))
                throw InvalidArgument("loop breakpoints must increase strictly");
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == vertices_[(i + 1) % vertices_.size()])
                throw InvalidArgument("consecutive loop vertices must be distinct");
    }

    static Loop polygon(std::vector<Point> vertices) {
        std::size_t m = vertices.size();
        std::vector<Rat> breaks;
        breaks.reserve(m + 1);
        for (std::size_t i = 0; i <= m; ++i) breaks.push_back(Rat(Int(i), Int(m)));
        return Loop(std::move(vertices), std::move(breaks));
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Rat>& breakpoints() const { return breakpoints_; }
    const Point& base() const { return vertices_.front(); }
    std::size_t edge_count() const { return vertices_.size(); }

    Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    Point point_at(const Rat& u) const {
        if (u.sign() < 0 || u > Rat(1)) throw InvalidArgument("loop parameter outside [0,1]");
        for (std::size_t i = 0; i < edge_count(); ++i) {
            if (u <= breakpoints_[i + 1]) {
                Rat span = breakpoints_[i + 1] - breakpoints_[i];
                Rat frac = (u - breakpoints_[i]) / span;
                return vertices_[i] + frac * (vertex(i + 1) - vertices_[i]);
            }
        }
        return vertices_.front();
    }

    bool on_image(const Point& x) const {
        for (std::size_t i = 0; i < edge_count(); ++i) {
            auto t = param_on_line(vertices_[i], vertex(i + 1) - vertices_[i], x);
            if (t && t->sign() >= 0 && *t <= Rat(1)) return true;
        }
        return false;
    }

    Loop reversed() const {
        std::vector<Point> verts{vertices_.front()};
        for (std::size_t i = vertices_.size(); i-- > 1;) verts.push_back(vertices_[i]);
        std::vector<Rat> breaks;
        breaks.reserve(breakpoints_.size());
        for (std::size_t i = breakpoints_.size(); i-- > 0;)
            breaks.push_back(Rat(1) - breakpoints_[i]);
        return Loop(std::move(verts), std::move(breaks));
    }

    /// n-fold concatenation (n >= 1), traversing each copy in 1/n of the time.
    Loop repeated(std::size_t n) const {
        if (n == 0) throw InvalidArgument("cannot build a zero-fold loop");
        std::vector<Point> verts;
        std::vector<Rat> breaks;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                verts.push_back(vertices_[i]);
                breaks.push_back(Rat(Int(k), Int(n)) + breakpoints_[i] / Rat(Int(n)));
            }
        breaks.push_back(Rat(1));
        return Loop(std::move(verts), std::move(breaks));
    }

private:
    std::vector<Point> vertices_;
    std::vector<Rat> breakpoints_;
};

/// The four-segment loop around the parallelogram spanned by a timelike and
/// a spacelike edge at o.
struct ParallelogramLoop {
    Point o;
    Vector t;  // timelike
    Vector s;  // spacelike

    ParallelogramLoop(Point o_, Vector t_, Vector s_)
        : o(std::move(o_)), t(std::move(t_)), s(std::move(s_)) {
        if (causal_class(t) != CausalClass::Timelike)
            throw InvalidArgument("parallelogram loop edge t must be timelike");
        if (causal_class(s) != CausalClass::Spacelike)
            throw InvalidArgument("parallelogram loop edge s must be spacelike");
    }

    Loop loop() const {
        return Loop::polygon({o, o + t, o + t + s, o + s});
    }

    Region region() const { return Region::parallelogram(o, t, s); }

    bool operator==(const ParallelogramLoop& other) const {
        return o == other.o && t == other.t && s == other.s;
    }
};

/// Exact evaluation of the four-case traversal formula; adjacent cases agree
/// at u = 1/4, 1/2, 3/4.
inline Point gamma_point(const ParallelogramLoop& P, const Rat& u) {
    if (u.sign() < 0 || u > Rat(1)) throw InvalidArgument("loop parameter outside [0,1]");
    Rat four(4);
    if (u <= Rat(Int(1), Int(4))) return P.o + (four * u) * P.t;
    if (u <= Rat(Int(1), Int(2))) return P.o + P.t + (four * u - Rat(1)) * P.s;
    if (u <= Rat(Int(3), Int(4))) return P.o + (Rat(3) - four * u) * P.t + P.s;
    return P.o + (four * (Rat(1) - u)) * P.s;
}

namespace detail {

// height of v over the ray line through x with direction d; positive side is
// the one a counterclockwise loop crosses downward-to-upward for +1
inline Rat ray_height(const Point& x, const Vector& d, const Point& v) {
    Vector w = v - x;
    return w[0] * d[1] - w[1] * d[0];
}

inline bool vertex_on_closed_ray(const Point& x, const Vector& d, const Point& v) {
    if (!ray_height(x, d, v).is_zero()) return false;
    // forward along the ray: positive euclidean component
    return euclid(v - x, d).sign() >= 0;
}

}  // namespace detail

/// Exact winding number by signed ray crossings. The ray leaves x in the
/// +e1 direction; an edge counts only when its lower endpoint lies strictly
/// below the ray line (so a vertex crossing is attributed to exactly one
/// edge), and only for intersections strictly ahead of x. Directions are
/// perturbed rationally until no vertex sits on the closed ray.
inline long winding(const Loop& loop, const Point& x) {
    require_k1(x, "winding");
    if (loop.on_image(x)) throw PointOnLoop("winding query point lies on the loop");
    for (unsigned long j = 0;; ++j) {
        Vector d = j == 0 ? Vector{Rat(0), Rat(1)}
                          : Vector{Rat(Int(1), Int(2 * j + 1)), Rat(1)};
        bool degenerate = false;
        for (std::size_t i = 0; i < loop.edge_count() && !degenerate; ++i)
            degenerate = detail::vertex_on_closed_ray(x, d, loop.vertex(i));
        if (degenerate) continue;
        long total = 0;
        for (std::size_t i = 0; i < loop.edge_count(); ++i) {
            Point a = loop.vertex(i);
            Point b = loop.vertex(i + 1);
            Rat ha = detail::ray_height(x, d, a);
            Rat hb = detail::ray_height(x, d, b);
            int up = (ha.sign() < 0 && hb.sign() >= 0) ? 1 : 0;
            int down = (ha.sign() >= 0 && hb.sign() < 0) ? -1 : 0;
            if (up == 0 && down == 0) continue;
            Vector e = b - a;
            Rat tau = cross2(a - x, e) / cross2(d, e);
            if (tau.sign() > 0) total += up + down;
        }
        return total;
    }
}

/// Open parallelogram membership: both barycentric parameters strictly
/// inside (0,1).
inline bool interior_contains(const ParallelogramLoop& P, const Point& x) {
    require_k1(x, "interior_contains");
    Rat det = cross2(P.t, P.s);
    Vector d = x - P.o;
    Rat lam = cross2(d, P.s) / det;
    Rat mu = cross2(P.t, d) / det;
    return lam.sign() > 0 && lam < Rat(1) && mu.sign() > 0 && mu < Rat(1);
}

/// Certificate that two loops are distinguished by an exact invariant: a
/// point avoiding both images whose winding numbers differ.
struct WindingCertificate {
    Point point;
    long w1 = 0;
    long w2 = 0;
};

struct DistinguishOutcome {
    std::optional<WindingCertificate> certificate;
    bool not_separable_by_winding = false;
};

namespace detail {

inline bool closed_region_contains(const ParallelogramLoop& P, const Point& x) {
    Rat det = cross2(P.t, P.s);
    Vector d = x - P.o;
    Rat lam = cross2(d, P.s) / det;
    Rat mu = cross2(P.t, d) / det;
    return lam.sign() >= 0 && lam <= Rat(1) && mu.sign() >= 0 && mu <= Rat(1);
}

/// Region equality for marked parallelograms sharing the base corner: the
/// extreme-point sets must coincide.
inline bool regions_coincide(const ParallelogramLoop& a, const ParallelogramLoop& b) {
    if (!(a.o == b.o)) return false;
    auto matches = [](const Vector& v, const ParallelogramLoop& P) {
        return v == P.t || v == P.s || v == P.t + P.s;
    };
    return matches(a.t, b) && matches(a.s, b) && matches(a.t + a.s, b) && matches(b.t, a) &&
           matches(b.s, a) && matches(b.t + b.s, a);
}

}  // namespace detail

/// Search the dyadic grids of both parallelograms for a point interior to one
/// and outside the other; its winding numbers then differ by the obstruction
/// argument. Coincident regions (impossible for marked pairs, checked anyway)
/// report NotSeparableByWinding instead.
inline DistinguishOutcome distinguish(const ParallelogramLoop& P1, const ParallelogramLoop& P2,
                                      int max_depth = 20) {
    if (!(P1.o == P2.o))
        throw InvalidArgument("distinguish requires loops with a shared base point");
    if (P1 == P2) throw InvalidArgument("distinguish requires distinct edge pairs");
    if (detail::regions_coincide(P1, P2)) return {std::nullopt, true};

    Loop l1 = P1.loop();
    Loop l2 = P2.loop();
    for (int depth = 1; depth <= max_depth; ++depth) {
        Int den = Int(1) << depth;
        for (Int i = 1; i < den; i += 2) {
            for (Int j = 1; j < den; j += 2) {
                Rat lam(i, den), mu(j, den);
                for (int which = 0; which < 2; ++which) {
                    const ParallelogramLoop& inner = which == 0 ? P1 : P2;
                    const ParallelogramLoop& outer = which == 0 ? P2 : P1;
                    Point x = inner.o + lam * inner.t + mu * inner.s;
                    if (detail::closed_region_contains(outer, x)) continue;
                    WindingCertificate cert;
                    cert.point = x;
                    cert.w1 = winding(l1, x);
                    cert.w2 = winding(l2, x);
                    if (cert.w1 == cert.w2)
                        throw Error("Internal", "separating point with equal windings");
                    return {cert, false};
                }
            }
        }
    }
    throw SearchExhausted("dyadic grids exhausted without a separating point");
}

/// Winding of the n-fold power, computed both by concatenating the loop and
/// by integer multiplication; the two must agree.
inline long power_winding(const ParallelogramLoop& P, long n, const Point& x) {
    Loop base = P.loop();
    long w = winding(base, x);
    long expected = n * w;
    if (n != 0) {
        Loop powered = n > 0 ? base.repeated(static_cast<std::size_t>(n))
                             : base.reversed().repeated(static_cast<std::size_t>(-n));
        long direct = winding(powered, x);
        if (direct != expected)
            throw Error("Internal", "power winding mismatch between routes");
    }
    return expected;
}

/// Path between two points whose image is covered by at most two axes; the
/// covering family is the continuity certificate. Lightlike-separated pairs
/// route through a deterministic intermediate point off both cones.
struct ZPath {
    std::vector<Point> waypoints;  // p, (r,) q
    std::vector<Axis> axes;        // one per segment
};

inline ZPath z_path(const Point& p, const Point& q) {
    require_k1(p, "z_path");
    ZPath out;
    out.waypoints.push_back(p);
    if (p == q) return out;
    if (!on_light_cone(q, p)) {
        out.waypoints.push_back(q);
        out.axes.push_back(axis_through(p, q));
        return out;
    }
    // each cone meets the candidate line in at most two points, so the scan
    // terminates within five steps
    Vector half = Rat(Int(1), Int(2)) * (q - p);
    for (long j = 1;; ++j) {
        Point r = p + half + Rat(j) * Vector{Rat(0), Rat(1)};
        if (on_light_cone(r, p) || on_light_cone(r, q)) continue;
        out.waypoints.push_back(r);
        out.waypoints.push_back(q);
        out.axes.push_back(axis_through(p, r));
        out.axes.push_back(axis_through(r, q));
        return out;
    }
}

}  // namespace zkit
