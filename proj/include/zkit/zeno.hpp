#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/families.hpp"
#include "zkit/region.hpp"

namespace zkit {

enum class ZenoAnswer { Yes, No, Inconclusive };

inline std::string to_string(ZenoAnswer a) {
    switch (a) {
        case ZenoAnswer::Yes: return "yes";
        case ZenoAnswer::No: return "no";
        case ZenoAnswer::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of exact Zeno classification. A yes always names one of the two
/// mechanisms: the sequence sits on the punctured light cone of its limit, or
/// it spreads over pairwise distinct axes so that every axis meets its image
/// finitely.
struct ZenoVerdict {
    ZenoAnswer is_zeno = ZenoAnswer::Inconclusive;
    std::string reason;
    std::optional<bool> completed_image_z_closed;
    std::map<std::string, std::size_t> per_axis_multiplicity;  // FinitePrefix only
};

namespace detail {

inline std::string direction_key(const Vector& d) {
    std::size_t pivot = 0;
    while (pivot < d.dim() && d[pivot].is_zero()) ++pivot;
    if (pivot == d.dim()) return "zero";
    std::string out = "(";
    for (std::size_t i = 0; i < d.dim(); ++i) {
        if (i) out += ",";
        out += (d[i] / d[pivot]).str();
    }
    return out + ")";
}

}  // namespace detail

/// Exact tail classification. Convergence always holds in the natural
/// topology (geometric scales); what is decided is convergence in the finer
/// topology.
inline ZenoVerdict classify(const SequenceFamily& f) {
    ZenoVerdict v;
    if (const auto* g = std::get_if<GeometricOnLine>(&f.impl())) {
        if (causal_class(g->v) == CausalClass::Lightlike) {
            v.is_zeno = ZenoAnswer::Yes;
            v.reason = "tail lies on the punctured light cone of the limit";
            v.completed_image_z_closed = true;  // subset of a light ray
        } else {
            v.is_zeno = ZenoAnswer::No;
            v.reason = "whole completed image lies on one axis and converges there";
            v.completed_image_z_closed = true;  // compact on its axis
        }
        return v;
    }
    if (std::holds_alternative<ConeSequence>(f.impl())) {
        v.is_zeno = ZenoAnswer::Yes;
        v.reason = "tail lies on the punctured light cone of the limit";
        v.completed_image_z_closed = true;
        return v;
    }
    if (std::holds_alternative<RotatingAxial>(f.impl()) ||
        std::holds_alternative<ScaledAxial>(f.impl())) {
        v.is_zeno = ZenoAnswer::Yes;
        v.reason = "points sit on pairwise distinct timelike axes through the limit";
        v.completed_image_z_closed = true;  // every axis meets the image finitely
        return v;
    }
    const auto& fp = std::get<FinitePrefix>(f.impl());
    v.is_zeno = ZenoAnswer::Inconclusive;
    v.reason = "finite data cannot decide a tail property";
    v.completed_image_z_closed = true;  // finite sets are closed
    for (const auto& q : fp.points) {
        Vector d = q - fp.limit;
        ++v.per_axis_multiplicity[detail::direction_key(d)];
    }
    return v;
}

/// An open neighborhood of the limit excluding the whole image, realizing the
/// subsequence-separation step of the compactness argument. Tail exclusion is
/// structural: cone families lie on the removed punctured cone, axial
/// families are the removed Z-closed image itself. The first few points are
/// additionally checked one by one.
inline CertifiedOpen separating_neighborhood(const SequenceFamily& f,
                                             std::size_t verify_prefix = 32) {
    ZenoVerdict v = classify(f);
    if (v.is_zeno != ZenoAnswer::Yes)
        throw NotZeno("separating_neighborhood requires a Zeno family (verdict: " +
                      to_string(v.is_zeno) + ")");
    const Point& p = f.limit();
    CertifiedOpen out = [&]() -> CertifiedOpen {
        if (const auto* g = std::get_if<GeometricOnLine>(&f.impl())) {
            Rat r = euclid(g->v, g->v);
            if (r < Rat(1)) r = Rat(1);
            return zeeman_ball(p, r);
        }
        if (const auto* cs = std::get_if<ConeSequence>(&f.impl())) {
            Rat r = euclid(cs->dir, cs->dir);
            if (r < Rat(1)) r = Rat(1);
            return zeeman_ball(p, r);
        }
        return diff_z_closed(natural_open(Region::ball(p, Rat(2))), f);
    }();
    if (!contains(out.region(), p))
        throw Error("Internal", "separating neighborhood lost its center");
    for (std::size_t n = 0; n < verify_prefix && f.has_point(n); ++n)
        if (contains(out.region(), f.point(n)))
            throw Error("Internal", "separating neighborhood failed to exclude a point");
    return out;
}

/// Zeno sequence threaded through a certified open: point n sits on the n-th
/// rotating timelike axis through p, at the largest power of `ratio` not
/// exceeding ratio^n that lands inside. Every open set admits one; no open
/// set has compact closure.
inline SequenceFamily zeno_inside_open(const CertifiedOpen& c, const Point& p,
                                       const Rat& ratio = Rat(Int(1), Int(2))) {
    require_k1(p, "zeno_inside_open");
    if (!contains(c.region(), p))
        throw MembershipFailure("zeno_inside_open requires the base point inside the region");
    auto holder = std::make_shared<const CertifiedOpen>(c);
    Point base = p;
    Rat q = ratio;
    auto scale = [holder, base, q](std::size_t n) -> Rat {
        Rat t = q.pow(static_cast<unsigned>(n));
        Vector d = rotating_direction(n);
        for (int attempts = 0; attempts < 4096; ++attempts) {
            if (contains(holder->region(), base + t * d)) return t;
            t *= q;
        }
        throw SearchExhausted("no admissible scale found on the rotating axis");
    };
    return SequenceFamily::scaled_axial(p, ratio, std::move(scale));
}

struct RefuterWitness {
    std::size_t j;     // which neighborhood the witness certifies
    Point point;       // p_j, on the j-th rotating axis through p
    std::size_t axis;  // index of the rotating direction used
};

struct RefuterResult {
    CertifiedOpen refuting_open;  // U = U_0 minus the witness set
    std::vector<RefuterWitness> witnesses;
};

/// The no-countable-neighborhood-base construction: one witness per
/// neighborhood, all on distinct timelike axes through p, then U_0 punctured
/// by the (finite, hence Z-closed) witness set. Every U_j keeps its witness
/// while U drops it, so no U_j fits inside U.
inline RefuterResult first_countability_refuter(const std::vector<CertifiedOpen>& nested,
                                                const Point& p,
                                                const Rat& ratio = Rat(Int(1), Int(2))) {
    require_k1(p, "first_countability_refuter");
    if (nested.empty()) throw InvalidArgument("need at least one neighborhood");
    for (std::size_t i = 0; i < nested.size(); ++i)
        if (!contains(nested[i].region(), p))
            throw MembershipFailure("neighborhood " + std::to_string(i) +
                                    " does not contain the base point");
    RefuterResult out{nested[0], {}};
    std::vector<Point> removed;
    for (std::size_t j = 0; j < nested.size(); ++j) {
        Vector d = rotating_direction(j);
        Rat t = ratio.pow(static_cast<unsigned>(j + 1));
        Point witness = p;
        bool found = false;
        for (int attempts = 0; attempts < 4096; ++attempts) {
            witness = p + t * d;
            if (contains(nested[j].region(), witness)) {
                found = true;
                break;
            }
            t *= ratio;
        }
        if (!found) throw SearchExhausted("no witness found inside neighborhood");
        // nestedness check on the witness: it must belong to all earlier sets
        for (std::size_t i = 0; i < j; ++i)
            if (!contains(nested[i].region(), witness))
                throw MembershipFailure("input not nested: witness of neighborhood " +
                                        std::to_string(j) + " escapes neighborhood " +
                                        std::to_string(i));
        out.witnesses.push_back({j, witness, j});
        removed.push_back(witness);
    }
    out.refuting_open = diff_z_closed(nested[0], std::move(removed));
    // exact verification of the separation facts
    for (const auto& w : out.witnesses) {
        if (!contains(nested[w.j].region(), w.point))
            throw Error("Internal", "witness lost its neighborhood");
        if (contains(out.refuting_open.region(), w.point))
            throw Error("Internal", "witness not excluded from the refuting open");
    }
    if (!contains(out.refuting_open.region(), p))
        throw Error("Internal", "refuting open lost the base point");
    return out;
}

}  // namespace zkit
