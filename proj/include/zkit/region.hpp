#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/families.hpp"
#include "zkit/minkowski.hpp"
#include "zkit/onedimset.hpp"

namespace zkit {

class Region;

namespace leaves {

struct OpenBall {
    Point center;
    Rat radius;  // > 0; Euclidean ball in frame coordinates
};
struct Cone {
    Point vertex;
};
struct LightRay {
    Point base;
    Vector dir;  // lightlike
};
struct Singleton {
    Point at;
};
struct Segment {
    Point p, q;  // closed, p != q
};
struct FullLine {
    Point base;
    Vector dir;  // nonzero
};
struct Parallelogram {
    Point o;
    Vector t;  // timelike
    Vector s;  // spacelike
};
struct SequenceImage {
    SequenceFamily family;
    bool include_limit = false;
};
struct Everything {};
struct Nothing {};

}  // namespace leaves

/// Symbolic spacetime subset: a finite expression tree over geometric leaves
/// with union / intersection / difference nodes. Values are immutable and
/// share structure.
class Region {
public:
    struct UnionNode {
        std::vector<Region> parts;
    };
    struct IntersectionNode {
        std::vector<Region> parts;
    };
    struct DifferenceNode {
        std::vector<Region> parts;  // exactly {left, right}
        const Region& left() const { return parts[0]; }
        const Region& right() const { return parts[1]; }
    };

    using Node = std::variant<leaves::OpenBall, leaves::Cone, leaves::LightRay,
                              leaves::Singleton, leaves::Segment, leaves::FullLine,
                              leaves::Parallelogram, leaves::SequenceImage, leaves::Everything,
                              leaves::Nothing, UnionNode, IntersectionNode, DifferenceNode>;

    static Region ball(Point center, Rat radius) {
        if (radius.sign() <= 0) throw InvalidArgument("ball radius must be positive");
        return make(leaves::OpenBall{std::move(center), std::move(radius)});
    }
    static Region cone(Point vertex) { return make(leaves::Cone{std::move(vertex)}); }
    static Region light_ray(Point base, Vector dir) {
        if (causal_class(dir) != CausalClass::Lightlike)
            throw InvalidArgument("light ray direction must be lightlike");
        return make(leaves::LightRay{std::move(base), std::move(dir)});
    }
    static Region singleton(Point at) { return make(leaves::Singleton{std::move(at)}); }
    static Region segment(Point p, Point q) {
        if (p == q) throw InvalidArgument("segment endpoints must be distinct");
        return make(leaves::Segment{std::move(p), std::move(q)});
    }
    static Region full_line(Point base, Vector dir) {
        if (dir.is_zero()) throw InvalidArgument("line direction must be nonzero");
        return make(leaves::FullLine{std::move(base), std::move(dir)});
    }
    static Region parallelogram(Point o, Vector t, Vector s) {
        if (causal_class(t) != CausalClass::Timelike)
            throw InvalidArgument("parallelogram edge t must be timelike");
        if (causal_class(s) != CausalClass::Spacelike)
            throw InvalidArgument("parallelogram edge s must be spacelike");
        return make(leaves::Parallelogram{std::move(o), std::move(t), std::move(s)});
    }
    static Region sequence_image(SequenceFamily family, bool include_limit = false) {
        return make(leaves::SequenceImage{std::move(family), include_limit});
    }
    static Region everything() { return make(leaves::Everything{}); }
    static Region nothing() { return make(leaves::Nothing{}); }
    static Region union_of(std::vector<Region> parts) {
        return make(UnionNode{std::move(parts)});
    }
    static Region intersection_of(std::vector<Region> parts) {
        return make(IntersectionNode{std::move(parts)});
    }
    static Region difference(Region left, Region right) {
        return make(DifferenceNode{{std::move(left), std::move(right)}});
    }

    const Node& node() const { return *node_; }

private:
    static Region make(Node n) {
        Region r;
        r.node_ = std::make_shared<const Node>(std::move(n));
        return r;
    }
    std::shared_ptr<const Node> node_;
};

/// Exact membership by structural recursion; every leaf decision is rational
/// arithmetic (or an exact sequence-index solve).
inline bool contains(const Region& r, const Point& x) {
    return std::visit(
        [&x](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, leaves::OpenBall>) {
                Vector d = x - n.center;
                return euclid(d, d) < n.radius * n.radius;
            } else if constexpr (std::is_same_v<T, leaves::Cone>) {
                return on_light_cone(x, n.vertex);
            } else if constexpr (std::is_same_v<T, leaves::LightRay> ||
                                 std::is_same_v<T, leaves::FullLine>) {
                return param_on_line(n.base, n.dir, x).has_value();
            } else if constexpr (std::is_same_v<T, leaves::Singleton>) {
                return x == n.at;
            } else if constexpr (std::is_same_v<T, leaves::Segment>) {
                auto t = param_on_line(n.p, n.q - n.p, x);
                return t && t->sign() >= 0 && *t <= Rat(1);
            } else if constexpr (std::is_same_v<T, leaves::Parallelogram>) {
                require_k1(x, "parallelogram membership");
                Rat det = cross2(n.t, n.s);
                Vector d = x - n.o;
                Rat lam = cross2(d, n.s) / det;
                Rat mu = cross2(n.t, d) / det;
                return lam.sign() >= 0 && lam <= Rat(1) && mu.sign() >= 0 && mu <= Rat(1);
            } else if constexpr (std::is_same_v<T, leaves::SequenceImage>) {
                if (n.include_limit && x == n.family.limit()) return true;
                return n.family.membership_index(x).has_value();
            } else if constexpr (std::is_same_v<T, leaves::Everything>) {
                return true;
            } else if constexpr (std::is_same_v<T, leaves::Nothing>) {
                return false;
            } else if constexpr (std::is_same_v<T, Region::UnionNode>) {
                for (const auto& part : n.parts)
                    if (contains(part, x)) return true;
                return false;
            } else if constexpr (std::is_same_v<T, Region::IntersectionNode>) {
                for (const auto& part : n.parts)
                    if (!contains(part, x)) return false;
                return true;
            } else {
                return contains(n.left(), x) && !contains(n.right(), x);
            }
        },
        r.node());
}

/// Exact restriction of a region to the line base + t dir as a subset of the
/// parameter axis (k = 1). Balls give open intervals with quadratic-
/// irrational endpoints, cones give at most two isolated points or the whole
/// line, and the boolean structure maps to the 1-d set algebra.
inline OneDimSet restrict_to_line(const Region& r, const Point& base, const Vector& dir) {
    require_k1(base, "restrict_to_line");
    if (dir.is_zero()) throw InvalidArgument("restrict_to_line requires a nonzero direction");
    return std::visit(
        [&](const auto& n) -> OneDimSet {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, leaves::OpenBall>) {
                // |base + t dir - c|^2 < r^2, Euclidean
                Vector w = base - n.center;
                Rat a = euclid(dir, dir);
                Rat b = euclid(dir, w);  // half coefficient
                Rat c = euclid(w, w) - n.radius * n.radius;
                Rat disc = b * b - a * c;
                if (disc.sign() <= 0) return OneDimSet::empty();
                QuadExt mid(-b / a);
                QuadExt half(Rat(0), Rat(1) / a, disc);
                return OneDimSet::open_interval(mid - half, mid + half);
            } else if constexpr (std::is_same_v<T, leaves::Cone>) {
                auto roots = line_cone_params(base, dir, n.vertex);
                if (roots.all_reals) return OneDimSet::all();
                std::vector<Piece> pieces;
                for (const auto& t : roots.roots) pieces.push_back(Piece::point(t));
                return OneDimSet::from_pieces(std::move(pieces));
            } else if constexpr (std::is_same_v<T, leaves::LightRay> ||
                                 std::is_same_v<T, leaves::FullLine>) {
                auto meet = line_line_meet(base, dir, n.base, n.dir);
                if (meet.kind == LineMeet::Coincident) return OneDimSet::all();
                if (meet.kind == LineMeet::Empty) return OneDimSet::empty();
                return OneDimSet::point(QuadExt(meet.t));
            } else if constexpr (std::is_same_v<T, leaves::Singleton>) {
                if (auto t = param_on_line(base, dir, n.at))
                    return OneDimSet::point(QuadExt(*t));
                return OneDimSet::empty();
            } else if constexpr (std::is_same_v<T, leaves::Segment>) {
                Vector sd = n.q - n.p;
                Rat det = cross2(dir, sd);
                if (det.is_zero()) {
                    if (!cross2(dir, n.p - base).is_zero()) return OneDimSet::empty();
                    Rat tp = *param_on_line(base, dir, n.p);
                    Rat tq = *param_on_line(base, dir, n.q);
                    if (tq < tp) std::swap(tp, tq);
                    return OneDimSet::closed_interval(QuadExt(tp), QuadExt(tq));
                }
                // transversal: the lines meet once; on-segment check via sigma
                auto meet = line_line_meet(n.p, sd, base, dir);
                Rat sigma = meet.t;
                if (sigma.sign() < 0 || sigma > Rat(1)) return OneDimSet::empty();
                Point hit = n.p + sigma * sd;
                return OneDimSet::point(QuadExt(*param_on_line(base, dir, hit)));
            } else if constexpr (std::is_same_v<T, leaves::Parallelogram>) {
                // lambda(t), mu(t) affine in t; each constraint in [0,1] cuts a
                // closed parameter interval (or decides all / nothing)
                Rat det = cross2(n.t, n.s);
                Vector w = base - n.o;
                Rat lam0 = cross2(w, n.s) / det, lam1 = cross2(dir, n.s) / det;
                Rat mu0 = cross2(n.t, w) / det, mu1 = cross2(n.t, dir) / det;
                OneDimSet cur = OneDimSet::all();
                for (const auto& [c0, c1] : {std::pair{lam0, lam1}, std::pair{mu0, mu1}}) {
                    OneDimSet band;
                    if (c1.is_zero()) {
                        band = (c0.sign() >= 0 && c0 <= Rat(1)) ? OneDimSet::all()
                                                                : OneDimSet::empty();
                    } else {
                        Rat t0 = (Rat(0) - c0) / c1;
                        Rat t1 = (Rat(1) - c0) / c1;
                        if (t1 < t0) std::swap(t0, t1);
                        band = OneDimSet::closed_interval(QuadExt(t0), QuadExt(t1));
                    }
                    cur = set_intersect(cur, band);
                }
                return cur;
            } else if constexpr (std::is_same_v<T, leaves::SequenceImage>) {
                LineTrace trace = n.family.line_trace(base, dir);
                if (trace.infinite)
                    throw UnrepresentableRestriction(
                        "sequence image restricted to its carrier line is an infinite set");
                std::vector<Piece> pieces;
                for (const auto& [idx, t] : trace.hits) pieces.push_back(Piece::point(QuadExt(t)));
                if (n.include_limit)
                    if (auto t = param_on_line(base, dir, n.family.limit()))
                        pieces.push_back(Piece::point(QuadExt(*t)));
                return OneDimSet::from_pieces(std::move(pieces));
            } else if constexpr (std::is_same_v<T, leaves::Everything>) {
                return OneDimSet::all();
            } else if constexpr (std::is_same_v<T, leaves::Nothing>) {
                return OneDimSet::empty();
            } else if constexpr (std::is_same_v<T, Region::UnionNode>) {
                OneDimSet acc = OneDimSet::empty();
                for (const auto& part : n.parts)
                    acc = set_union(acc, restrict_to_line(part, base, dir));
                return acc;
            } else if constexpr (std::is_same_v<T, Region::IntersectionNode>) {
                OneDimSet acc = OneDimSet::all();
                for (const auto& part : n.parts)
                    acc = set_intersect(acc, restrict_to_line(part, base, dir));
                return acc;
            } else {
                return set_difference(restrict_to_line(n.left(), base, dir),
                                      restrict_to_line(n.right(), base, dir));
            }
        },
        r.node());
}

inline OneDimSet restrict_to_axis(const Region& r, const Axis& axis) {
    return restrict_to_line(r, axis.base, axis.line_dir());
}

/// Shift every leaf by v.
inline Region translate(const Region& r, const Vector& v) {
    return std::visit(
        [&v](const auto& n) -> Region {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, leaves::OpenBall>) {
                return Region::ball(n.center + v, n.radius);
            } else if constexpr (std::is_same_v<T, leaves::Cone>) {
                return Region::cone(n.vertex + v);
            } else if constexpr (std::is_same_v<T, leaves::LightRay>) {
                return Region::light_ray(n.base + v, n.dir);
            } else if constexpr (std::is_same_v<T, leaves::Singleton>) {
                return Region::singleton(n.at + v);
            } else if constexpr (std::is_same_v<T, leaves::Segment>) {
                return Region::segment(n.p + v, n.q + v);
            } else if constexpr (std::is_same_v<T, leaves::FullLine>) {
                return Region::full_line(n.base + v, n.dir);
            } else if constexpr (std::is_same_v<T, leaves::Parallelogram>) {
                return Region::parallelogram(n.o + v, n.t, n.s);
            } else if constexpr (std::is_same_v<T, leaves::SequenceImage>) {
                return Region::sequence_image(n.family.translated(v), n.include_limit);
            } else if constexpr (std::is_same_v<T, leaves::Everything>) {
                return Region::everything();
            } else if constexpr (std::is_same_v<T, leaves::Nothing>) {
                return Region::nothing();
            } else if constexpr (std::is_same_v<T, Region::UnionNode>) {
                std::vector<Region> parts;
                parts.reserve(n.parts.size());
                for (const auto& part : n.parts) parts.push_back(translate(part, v));
                return Region::union_of(std::move(parts));
            } else if constexpr (std::is_same_v<T, Region::IntersectionNode>) {
                std::vector<Region> parts;
                parts.reserve(n.parts.size());
                for (const auto& part : n.parts) parts.push_back(translate(part, v));
                return Region::intersection_of(std::move(parts));
            } else {
                return Region::difference(translate(n.left(), v), translate(n.right(), v));
            }
        },
        r.node());
}

// ---------------------------------------------------------------------------
// Certified open sets
// ---------------------------------------------------------------------------

class CertifiedOpen;

/// What was removed from the base of a punctured certified open: either a
/// finite point set (closed, the space being Hausdorff and finer than the
/// natural topology) or the image of an axial Zeno family (closed because
/// every axis meets it finitely).
using RemovedSet = std::variant<std::vector<Point>, SequenceFamily>;

struct NaturallyOpenCert {};
struct ZeemanBallCert {
    Point p;
    Rat radius;
};
struct DiffZClosedCert {
    std::shared_ptr<const CertifiedOpen> base;
    RemovedSet removed;
};
struct UnionCert {
    std::vector<CertifiedOpen> parts;
};

using Certificate = std::variant<NaturallyOpenCert, ZeemanBallCert, DiffZClosedCert, UnionCert>;

/// Region paired with a construction rule guaranteeing openness on every
/// axis. Finite axis sampling can only falsify openness; these constructors
/// are the sound side of the split.
class CertifiedOpen {
public:
    CertifiedOpen(Region region, Certificate certificate)
        : region_(std::move(region)), certificate_(std::move(certificate)) {}

    const Region& region() const { return region_; }
    const Certificate& certificate() const { return certificate_; }

    std::string certificate_kind() const {
        if (std::holds_alternative<NaturallyOpenCert>(certificate_)) return "naturally-open";
        if (std::holds_alternative<ZeemanBallCert>(certificate_)) return "zeeman-ball";
        if (std::holds_alternative<DiffZClosedCert>(certificate_)) return "diff-z-closed";
        return "union-of-certified";
    }

private:
    Region region_;
    Certificate certificate_;
};

namespace detail {

inline bool naturally_open_shape(const Region& r) {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, leaves::OpenBall> ||
                          std::is_same_v<T, leaves::Everything> ||
                          std::is_same_v<T, leaves::Nothing>) {
                return true;
            } else if constexpr (std::is_same_v<T, Region::UnionNode> ||
                                 std::is_same_v<T, Region::IntersectionNode>) {
                for (const auto& part : n.parts)
                    if (!naturally_open_shape(part)) return false;
                return true;
            } else {
                return false;
            }
        },
        r.node());
}

}  // namespace detail

/// Natural opens are open in the finer topology as well; the certificate
/// records that the region is a finite union/intersection of open balls.
inline CertifiedOpen natural_open(Region r) {
    if (!detail::naturally_open_shape(r))
        throw InvalidArgument(
            "natural_open requires a finite union/intersection of open balls");
    return CertifiedOpen(std::move(r), NaturallyOpenCert{});
}

/// The punctured-ball construction: (B \ C(p)) u {p}. Every axis through p
/// meets it exactly as it meets B; any other axis loses at most two cone
/// points from an open interval. Light rays through p meet it in {p} alone.
inline CertifiedOpen zeeman_ball(const Point& p, const Rat& radius) {
    if (radius.sign() <= 0) throw InvalidArgument("zeeman_ball radius must be positive");
    Region b = Region::ball(p, radius);
    Region body = Region::difference(b, Region::cone(p));
    Region r = Region::union_of({body, Region::singleton(p)});
    return CertifiedOpen(std::move(r), ZeemanBallCert{p, radius});
}

/// Remove a Z-closed point set from a certified open. Finite sets are closed
/// outright; infinite removals must be axial Zeno images, whose closedness is
/// the rotating-axes mechanism: every axis meets such an image finitely.
inline CertifiedOpen diff_z_closed(CertifiedOpen base, RemovedSet removed) {
    Region removed_region = std::visit(
        [](const auto& rem) -> Region {
            using T = std::decay_t<decltype(rem)>;
            if constexpr (std::is_same_v<T, std::vector<Point>>) {
                std::vector<Region> pts;
                pts.reserve(rem.size());
                for (const auto& q : rem) pts.push_back(Region::singleton(q));
                return Region::union_of(std::move(pts));
            } else {
                if (rem.kind() != "rotating-axial" && rem.kind() != "scaled-axial")
                    throw InvalidArgument(
                        "infinite removal must be an axial Zeno image");
                return Region::sequence_image(rem, false);
            }
        },
        removed);
    Region r = Region::difference(base.region(), std::move(removed_region));
    auto base_ptr = std::make_shared<const CertifiedOpen>(std::move(base));
    return CertifiedOpen(std::move(r), DiffZClosedCert{std::move(base_ptr), std::move(removed)});
}

inline CertifiedOpen union_certified(std::vector<CertifiedOpen> parts) {
    std::vector<Region> regions;
    regions.reserve(parts.size());
    for (const auto& c : parts) regions.push_back(c.region());
    Region r = Region::union_of(std::move(regions));
    return CertifiedOpen(std::move(r), UnionCert{std::move(parts)});
}

inline CertifiedOpen translate_certified(const CertifiedOpen& c, const Vector& v) {
    Certificate cert = std::visit(
        [&v](const auto& k) -> Certificate {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, NaturallyOpenCert>) {
                return NaturallyOpenCert{};
            } else if constexpr (std::is_same_v<T, ZeemanBallCert>) {
                return ZeemanBallCert{k.p + v, k.radius};
            } else if constexpr (std::is_same_v<T, DiffZClosedCert>) {
                auto base = std::make_shared<const CertifiedOpen>(
                    translate_certified(*k.base, v));
                RemovedSet moved = std::visit(
                    [&v](const auto& rem) -> RemovedSet {
                        using R = std::decay_t<decltype(rem)>;
                        if constexpr (std::is_same_v<R, std::vector<Point>>) {
                            std::vector<Point> pts;
                            pts.reserve(rem.size());
                            for (const auto& q : rem) pts.push_back(q + v);
                            return pts;
                        } else {
                            return rem.translated(v);
                        }
                    },
                    k.removed);
                return DiffZClosedCert{std::move(base), std::move(moved)};
            } else {
                std::vector<CertifiedOpen> parts;
                parts.reserve(k.parts.size());
                for (const auto& part : k.parts) parts.push_back(translate_certified(part, v));
                return UnionCert{std::move(parts)};
            }
        },
        c.certificate());
    return CertifiedOpen(translate(c.region(), v), std::move(cert));
}

// ---------------------------------------------------------------------------
// Axis sampling falsifier
// ---------------------------------------------------------------------------

struct AxisFailure {
    Axis axis;
    OneDimSet witness;
};

struct OpenCheckReport {
    bool all_open = true;
    std::vector<AxisFailure> failures;
};

/// Finite-sample falsifier for openness along axes: a clean bill means no
/// sampled axis witnesses a violation, not a proof.
inline OpenCheckReport check_open_on_axes(const Region& r, const std::vector<Axis>& axes) {
    OpenCheckReport report;
    for (const auto& axis : axes) {
        OneDimSet trace = restrict_to_axis(r, axis);
        if (!trace.is_open()) {
            report.all_open = false;
            report.failures.push_back({axis, std::move(trace)});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Constructive rationalization (density of the rational lattice)
// ---------------------------------------------------------------------------

namespace detail {

inline Int floor_qe(const QuadExt& x) {
    if (x.is_rational()) return x.as_rat().floor();
    double est = x.to_double();
    Int n(static_cast<long long>(std::floor(est)));
    while (x.cmp(QuadExt(Rat(n + 1))) >= 0) ++n;
    while (x.cmp(QuadExt(Rat(n))) < 0) --n;
    return n;
}

/// Sign of (x + y) - k without forming the mixed-radicand sum.
inline int cmp_sum(const QuadExt& x, const QuadExt& y, const Rat& k) {
    return x.cmp(QuadExt(k) - y);
}

inline Rat simplest_bounded(const QuadExt& lo, const QuadExt& hi, int depth = 0);

/// Smallest integer strictly above x.
inline Int int_above(const QuadExt& x) { return floor_qe(x) + 1; }

inline Rat simplest_bounded(const QuadExt& lo, const QuadExt& hi, int depth) {
    if (depth > 4096) throw SearchExhausted("simplest rational recursion too deep");
    Int n_min = int_above(lo);
    Int n_max = -int_above(-hi);  // largest integer strictly below hi
    if (n_min <= n_max) {
        // At the top level every integer has denominator 1; ties break toward
        // the midpoint, lower value winning exact ties. Deeper in the descent
        // the integer is a continued-fraction term, and the smallest term
        // minimizes the final denominator.
        if (depth > 0) return Rat(n_min);
        double guess = (lo.to_double() + hi.to_double()) / 2.0;
        Int n(static_cast<long long>(std::llround(guess)));
        if (n < n_min) n = n_min;
        if (n > n_max) n = n_max;
        while (n > n_min && cmp_sum(lo, hi, Rat(2 * n - 1)) <= 0) --n;
        while (n < n_max && cmp_sum(lo, hi, Rat(2 * n + 1)) > 0) ++n;
        return Rat(n);
    }
    // no integer inside: recurse on the reciprocal of the fractional part
    Int a = floor_qe(lo);
    QuadExt lo_f = lo - QuadExt(Rat(a));
    QuadExt hi_f = hi - QuadExt(Rat(a));
    Rat inner;
    if (lo_f.is_zero()) {
        inner = Rat(int_above(QuadExt(Rat(1)) / hi_f));
    } else {
        inner = simplest_bounded(QuadExt(Rat(1)) / hi_f, QuadExt(Rat(1)) / lo_f, depth + 1);
    }
    return Rat(a) + Rat(1) / inner;
}

}  // namespace detail

/// The rational with the smallest denominator strictly inside the interval
/// piece (Stern-Brocot descent); among smallest-denominator candidates the
/// one nearest the midpoint wins, lower value on ties. Unbounded intervals
/// take the integer nearest zero.
inline Rat simplest_rational_in(const Piece& piece) {
    if (piece.is_point())
        throw InvalidArgument("simplest_rational_in requires a nondegenerate interval");
    bool lo_inf = !piece.lo.finite();
    bool hi_inf = !piece.hi.finite();
    if (lo_inf && hi_inf) return Rat(0);
    if (lo_inf) {
        Int top = -detail::int_above(-piece.hi.value);
        return Rat(top >= 0 ? Int(0) : top);
    }
    if (hi_inf) {
        Int bot = detail::int_above(piece.lo.value);
        return Rat(bot <= 0 ? Int(0) : bot);
    }
    QuadExt lo = piece.lo.value;
    QuadExt hi = piece.hi.value;
    // closed finite endpoints are irrelevant here: an open subinterval always
    // contains the simplest strictly-interior rational we return
    return detail::simplest_bounded(lo, hi);
}

/// Constructive density step: from any point of a certified open, walk to an
/// all-rational point inside it. First slide along the timelike axis through
/// q to make the time coordinate rational, then along the spacelike axis
/// through the intermediate point for the space coordinate; each slide picks
/// the simplest rational in the exact 1-d neighborhood.
inline Point rationalize(const CertifiedOpen& c, const Point& q) {
    require_k1(q, "rationalize");
    if (!contains(c.region(), q))
        throw MembershipFailure("rationalize requires a point inside the region");
    Point cur = q;
    const Vector dirs[2] = {Vector{Rat(1), Rat(0)}, Vector{Rat(0), Rat(1)}};
    for (std::size_t step = 0; step < 2; ++step) {
        OneDimSet trace = restrict_to_line(c.region(), cur, dirs[step]);
        auto piece = trace.piece_containing(QuadExt(Rat(0)));
        if (!piece || piece->is_point())
            throw MembershipFailure("certified region has no 1-d neighborhood on the axis");
        // shift the parameter window to the coordinate window around cur
        Piece coord = *piece;
        QuadExt offset{cur[step]};
        if (coord.lo.finite()) coord.lo.value = coord.lo.value + offset;
        if (coord.hi.finite()) coord.hi.value = coord.hi.value + offset;
        Rat target = simplest_rational_in(coord);
        cur = cur + (target - cur[step]) * dirs[step];
    }
    if (!contains(c.region(), cur))
        throw MembershipFailure("rationalize produced a point outside the region");
    return cur;
}

}  // namespace zkit
