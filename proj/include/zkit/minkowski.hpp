#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/quadext.hpp"
#include "zkit/rat.hpp"

namespace zkit {

/// Displacement in the vector space attached to spacetime; coordinates are
/// relative to the fixed orthonormal frame, index 0 being time.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<Rat> coords) : c_(std::move(coords)) {}
    Vector(std::initializer_list<Rat> coords) : c_(coords) {}

    std::size_t dim() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vector operator+(const Vector& o) const {
        check_dim(o.dim());
        std::vector<Rat> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
        return Vector(std::move(r));
    }
    Vector operator-(const Vector& o) const { return *this + (-o); }
    Vector operator-() const {
        std::vector<Rat> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(-x);
        return Vector(std::move(r));
    }
    friend Vector operator*(const Rat& s, const Vector& v) {
        std::vector<Rat> r;
        r.reserve(v.c_.size());
        for (const auto& x : v.c_) r.push_back(s * x);
        return Vector(std::move(r));
    }

    bool operator==(const Vector& o) const { return c_ == o.c_; }

    /// True when o = s * this for some scalar s (both nonzero).
    bool proportional_to(const Vector& o) const {
        check_dim(o.dim());
        if (is_zero() || o.is_zero()) return false;
        std::optional<Rat> ratio;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero() != o.c_[i].is_zero()) return false;
            if (c_[i].is_zero()) continue;
            Rat r = o.c_[i] / c_[i];
            if (ratio && !(*ratio == r)) return false;
            ratio = r;
        }
        return ratio.has_value();
    }

    void check_dim(std::size_t d) const {
        if (c_.size() != d)
            throw DimensionMismatch("vector dimensions " + std::to_string(c_.size()) + " vs " +
                                    std::to_string(d));
    }

private:
    std::vector<Rat> c_;
};

/// Point of spacetime, p = o + sum p^i e_i in the fixed frame.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rat> coords) : c_(std::move(coords)) {}
    Point(std::initializer_list<Rat> coords) : c_(coords) {}

    static Point origin(std::size_t dim) { return Point(std::vector<Rat>(dim, Rat(0))); }

    std::size_t dim() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    Point operator+(const Vector& v) const {
        v.check_dim(c_.size());
        std::vector<Rat> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
        return Point(std::move(r));
    }
    Vector operator-(const Point& o) const {
        if (c_.size() != o.c_.size()) throw DimensionMismatch("point dimensions differ");
        std::vector<Rat> r;
        r.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] - o.c_[i]);
        return Vector(std::move(r));
    }

    bool operator==(const Point& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_;
};

enum class CausalClass { Timelike, Spacelike, Lightlike, Zero };

inline std::string to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Timelike: return "Timelike";
        case CausalClass::Spacelike: return "Spacelike";
        case CausalClass::Lightlike: return "Lightlike";
        case CausalClass::Zero: return "Zero";
    }
    return "?";
}

/// Minkowski product with signature (-, +, ..., +).
inline Rat metric(const Vector& v, const Vector& w) {
    v.check_dim(w.dim());
    if (v.dim() == 0) throw DimensionMismatch("zero-dimensional vectors");
    Rat acc = -(v[0] * w[0]);
    for (std::size_t i = 1; i < v.dim(); ++i) acc += v[i] * w[i];
    return acc;
}

/// Euclidean product of the same coordinate tuples; induces the natural
/// topology and is the ball metric for region constructions.
inline Rat euclid(const Vector& v, const Vector& w) {
    v.check_dim(w.dim());
    Rat acc(0);
    for (std::size_t i = 0; i < v.dim(); ++i) acc += v[i] * w[i];
    return acc;
}

inline CausalClass causal_class(const Vector& v) {
    if (v.is_zero()) return CausalClass::Zero;
    int s = metric(v, v).sign();
    if (s > 0) return CausalClass::Spacelike;
    if (s < 0) return CausalClass::Timelike;
    return CausalClass::Lightlike;
}

/// q on the light cone with vertex p: g(q-p, q-p) = 0. The vertex itself
/// belongs to its cone.
inline bool on_light_cone(const Point& q, const Point& p) {
    return metric(q - p, q - p).is_zero();
}

/// Straight timelike line or spacelike flat (a spacelike line when k = 1).
/// These are exactly the subsets on which the finer topology induces the
/// natural one.
struct Axis {
    Point base;
    std::vector<Vector> dirs;  // one timelike dir, or k pairwise orthogonal spacelike dirs
    bool timelike = true;

    static Axis timelike_line(Point base, Vector dir) {
        if (causal_class(dir) != CausalClass::Timelike)
            throw InvalidArgument("axis direction must be timelike");
        return {std::move(base), {std::move(dir)}, true};
    }
    static Axis spacelike_line(Point base, Vector dir) {
        if (causal_class(dir) != CausalClass::Spacelike)
            throw InvalidArgument("spacelike axis direction must be spacelike");
        return {std::move(base), {std::move(dir)}, false};
    }

    /// 1+1 dimensional axes are lines; the single direction.
    const Vector& line_dir() const {
        if (dirs.size() != 1)
            throw UnsupportedDimension("axis is not a line (k > 1 spacelike flat)");
        return dirs[0];
    }

    bool passes_through(const Point& x) const {
        Vector d = x - base;
        if (d.is_zero()) return true;
        const Vector& u = line_dir();
        // collinearity in the plane: cross product vanishes
        if (x.dim() == 2) return (d[0] * u[1] - d[1] * u[0]).is_zero();
        return d.proportional_to(u);
    }
};

inline void require_k1(const Point& p, const char* what) {
    if (p.dim() != 2)
        throw UnsupportedDimension(std::string(what) + " requires 1+1 dimensions (k = 1)");
}

/// The unique axis through two non-lightlike-separated points (k = 1).
inline Axis axis_through(const Point& p, const Point& q) {
    require_k1(p, "axis_through");
    if (p == q) throw EqualPoints("axis_through requires distinct points");
    Vector d = q - p;
    switch (causal_class(d)) {
        case CausalClass::Timelike: return Axis::timelike_line(p, d);
        case CausalClass::Spacelike: return Axis::spacelike_line(p, d);
        default:
            throw LightlikeSeparation("points are lightlike separated; no axis joins them");
    }
}

/// Parameters t with base + t*dir on the cone C(vertex): roots of
/// g(d,d) t^2 + 2 g(d,w) t + g(w,w) = 0 for w = base - vertex. The marker
/// case is a lightlike line through the vertex, which lies inside the cone.
struct LineConeParams {
    bool all_reals = false;
    std::vector<QuadExt> roots;  // sorted, 0..2 entries; empty when no hit
};

inline LineConeParams line_cone_params(const Point& base, const Vector& dir, const Point& vertex) {
    if (dir.is_zero()) throw InvalidArgument("line_cone_params requires a nonzero direction");
    Vector w = base - vertex;
    Rat a = metric(dir, dir);
    Rat b = metric(dir, w);  // half the linear coefficient
    Rat c = metric(w, w);
    LineConeParams out;
    if (a.is_zero()) {
        if (b.is_zero()) {
            if (c.is_zero()) out.all_reals = true;
            return out;
        }
        out.roots.push_back(QuadExt(-c / (Rat(2) * b)));
        return out;
    }
    Rat disc = b * b - a * c;
    int s = disc.sign();
    if (s < 0) return out;
    QuadExt mid(-b / a);
    if (s == 0) {
        out.roots.push_back(mid);
        return out;
    }
    QuadExt half = QuadExt(Rat(0), Rat(1) / a.abs(), disc);
    out.roots.push_back(mid - half);
    out.roots.push_back(mid + half);
    return out;
}

/// Generator of the homeomorphism group in a fixed frame: x -> dilation *
/// (linear x) + translation with linear^T eta linear = eta exactly.
class PoincareMap {
public:
    PoincareMap(std::vector<std::vector<Rat>> linear, Vector translation, Rat dilation)
        : linear_(std::move(linear)), translation_(std::move(translation)),
          dilation_(std::move(dilation)) {
        if (dilation_.sign() <= 0) throw InvalidArgument("dilation must be positive");
        check_lorentz();
    }

    static PoincareMap identity(std::size_t dim) {
        std::vector<std::vector<Rat>> lin(dim, std::vector<Rat>(dim, Rat(0)));
        for (std::size_t i = 0; i < dim; ++i) lin[i][i] = Rat(1);
        return PoincareMap(std::move(lin), Vector(std::vector<Rat>(dim, Rat(0))), Rat(1));
    }

    std::size_t dim() const { return linear_.size(); }
    const std::vector<std::vector<Rat>>& linear() const { return linear_; }
    const Vector& translation() const { return translation_; }
    const Rat& dilation() const { return dilation_; }

    Vector apply(const Vector& v) const {
        v.check_dim(dim());
        std::vector<Rat> r(dim(), Rat(0));
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) r[i] += linear_[i][j] * v[j];
        for (auto& x : r) x *= dilation_;
        return Vector(std::move(r));
    }

    Point apply(const Point& p) const {
        Vector moved = apply(Vector(p.coords()));
        std::vector<Rat> r(moved.coords());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += translation_[i];
        return Point(std::move(r));
    }

private:
    void check_lorentz() const {
        std::size_t n = linear_.size();
        if (n == 0) throw InvalidArgument("empty linear part");
        for (const auto& row : linear_)
            if (row.size() != n) throw InvalidArgument("linear part must be square");
        translation_.check_dim(n);
        // (L^T eta L)_{jk} = sum_i eta_ii L_ij L_ik
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t kk = 0; kk < n; ++kk) {
                Rat acc(0);
                for (std::size_t i = 0; i < n; ++i) {
                    Rat term = linear_[i][j] * linear_[i][kk];
                    acc += (i == 0) ? -term : term;
                }
                Rat want = (j == kk) ? (j == 0 ? Rat(-1) : Rat(1)) : Rat(0);
                if (!(acc == want))
                    throw InvalidArgument("linear part does not preserve the metric form");
            }
        }
    }

    std::vector<std::vector<Rat>> linear_;
    Vector translation_;
    Rat dilation_;
};

/// Rational boost in 1+1 dimensions: cosh = (1+m^2)/(1-m^2), sinh =
/// 2m/(1-m^2) for a slope |m| < 1, so the hyperbolic identity holds exactly.
inline PoincareMap boost_from_slope(const Rat& m) {
    if (!(m.abs() < Rat(1))) throw InvalidArgument("boost slope must satisfy |m| < 1");
    Rat den = Rat(1) - m * m;
    Rat ch = (Rat(1) + m * m) / den;
    Rat sh = (Rat(2) * m) / den;
    std::vector<std::vector<Rat>> lin = {{ch, sh}, {sh, ch}};
    return PoincareMap(std::move(lin), Vector({Rat(0), Rat(0)}), Rat(1));
}

inline Point apply_map(const PoincareMap& L, const Point& p) { return L.apply(p); }
inline Vector apply_map(const PoincareMap& L, const Vector& v) { return L.apply(v); }

// 2d cross product in frame coordinates; zero iff parallel.
inline Rat cross2(const Vector& u, const Vector& v) {
    u.check_dim(2);
    v.check_dim(2);
    return u[0] * v[1] - u[1] * v[0];
}

/// Intersection of lines base1 + t dir1 and base2 + s dir2 in the plane.
struct LineMeet {
    enum Kind { Empty, Single, Coincident } kind = Empty;
    Rat t;  // parameter on the first line when kind == Single
};

inline LineMeet line_line_meet(const Point& base1, const Vector& dir1, const Point& base2,
                               const Vector& dir2) {
    Rat det = cross2(dir1, dir2);
    Vector d = base2 - base1;
    if (det.is_zero()) {
        if (cross2(dir1, d).is_zero()) return {LineMeet::Coincident, Rat(0)};
        return {LineMeet::Empty, Rat(0)};
    }
    // solve t*dir1 - s*dir2 = d by Cramer
    Rat t = cross2(d, dir2) / det;
    return {LineMeet::Single, t};
}

/// Parameter of x on the line base + t*dir, if x lies on it exactly.
inline std::optional<Rat> param_on_line(const Point& base, const Vector& dir, const Point& x) {
    Vector d = x - base;
    std::size_t pivot = 0;
    while (pivot < dir.dim() && dir[pivot].is_zero()) ++pivot;
    if (pivot == dir.dim()) return std::nullopt;  // zero direction
    Rat t = d[pivot] / dir[pivot];
    for (std::size_t i = 0; i < dir.dim(); ++i)
        if (!(d[i] == t * dir[i])) return std::nullopt;
    return t;
}

/// Squared Euclidean distance from x to the line through base with direction
/// dir (plane case).
inline Rat euclid_dist2_to_line(const Point& base, const Vector& dir, const Point& x) {
    Rat num = cross2(dir, x - base);
    return num * num / euclid(dir, dir);
}

}  // namespace zkit
