#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/families.hpp"
#include "zkit/onedimset.hpp"
#include "zkit/region.hpp"
#include "zkit/zeno.hpp"

namespace zkit {

struct PtPart {
    Point at;
};
struct SegmentPart {
    Point p, q;  // closed segment, distinct endpoints
};
struct CompletedZenoPart {
    SequenceFamily family;  // the completed image: points plus limit
};
using Part = std::variant<PtPart, SegmentPart, CompletedZenoPart>;

/// Candidate for the compactness deciders: a finite union of points, closed
/// segments, and completed sequence images. Everything in this class is
/// compact in the natural topology, so the two characterizations disagree
/// only through Zeno content.
class CompactCandidate {
public:
    CompactCandidate() = default;

    void add_point(Point at) { parts_.emplace_back(PtPart{std::move(at)}); }
    void add_segment(Point p, Point q) {
        if (p == q)
            throw InvalidArgument("zero-length segment: use a point part instead");
        parts_.emplace_back(SegmentPart{std::move(p), std::move(q)});
    }
    void add_completed_zeno(SequenceFamily family) {
        parts_.emplace_back(CompletedZenoPart{std::move(family)});
    }

    const std::vector<Part>& parts() const { return parts_; }

    CompactCandidate translated(const Vector& v) const {
        CompactCandidate out;
        for (const auto& part : parts_) {
            if (const auto* pt = std::get_if<PtPart>(&part))
                out.add_point(pt->at + v);
            else if (const auto* seg = std::get_if<SegmentPart>(&part))
                out.add_segment(seg->p + v, seg->q + v);
            else
                out.add_completed_zeno(std::get<CompletedZenoPart>(part).family.translated(v));
        }
        return out;
    }

private:
    std::vector<Part> parts_;
};

/// Symbolic trace element: { limit + scale * ratio^n : n >= 0 } together with
/// the limit itself, on the axis parameter line. Compact by construction
/// (bounded, and the single accumulation point is included).
struct GeomSeqTrace {
    Rat limit;
    Rat scale;  // nonzero
    Rat ratio;  // in (0,1)
    bool operator==(const GeomSeqTrace& o) const {
        return limit == o.limit && scale == o.scale && ratio == o.ratio;
    }
};

/// Per-axis trace: an explicit finite part plus symbolic convergent
/// sequences. The infinite sequence part cannot be folded into the finite
/// 1-d set algebra, so it stays symbolic.
struct AxisTrace {
    OneDimSet explicit_set;
    std::vector<GeomSeqTrace> seqs;

    bool is_compact() const { return explicit_set.is_compact_1d(); }
    bool operator==(const AxisTrace& o) const {
        return explicit_set == o.explicit_set && seqs == o.seqs;
    }
};

/// The witness format of the axis characterization: finitely many axes whose
/// union covers the candidate, each trace compact on its line.
struct AxisCoverCertificate {
    std::vector<Axis> axes;
    std::vector<AxisTrace> traces;                    // parallel to axes
    std::vector<std::vector<std::size_t>> coverage;   // part index -> axis indices
};

struct LightlikeSegmentWitness {
    std::size_t part_index;
};
struct ZenoPartWitness {
    std::size_t part_index;
    SequenceFamily family;
};
using Counterexample = std::variant<LightlikeSegmentWitness, ZenoPartWitness>;

struct CompactnessVerdict {
    bool compact = false;
    std::optional<AxisCoverCertificate> certificate;   // axes route, when compact
    std::optional<Counterexample> counterexample;      // when not compact
    std::string reasoning;
};

namespace detail {

inline bool same_line(const Axis& axis, const Point& base, const Vector& dir) {
    return cross2(axis.line_dir(), dir).is_zero() && axis.passes_through(base);
}

inline std::optional<Axis> carrier_axis(const SequenceFamily& f) {
    if (const auto* g = std::get_if<GeometricOnLine>(&f.impl())) {
        switch (causal_class(g->v)) {
            case CausalClass::Timelike: return Axis::timelike_line(g->p, g->v);
            case CausalClass::Spacelike: return Axis::spacelike_line(g->p, g->v);
            default: return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Restriction of one part to an axis line: explicit pieces plus symbolic
/// sequences when the axis carries a whole completed image.
inline void accumulate_part_trace(const Part& part, const Axis& axis, OneDimSet& explicit_set,
                                  std::vector<GeomSeqTrace>& seqs) {
    const Point& base = axis.base;
    const Vector& dir = axis.line_dir();
    if (const auto* pt = std::get_if<PtPart>(&part)) {
        if (auto t = param_on_line(base, dir, pt->at))
            explicit_set = set_union(explicit_set, OneDimSet::point(QuadExt(*t)));
        return;
    }
    if (const auto* seg = std::get_if<SegmentPart>(&part)) {
        explicit_set =
            set_union(explicit_set, restrict_to_line(Region::segment(seg->p, seg->q), base, dir));
        return;
    }
    const SequenceFamily& fam = std::get<CompletedZenoPart>(part).family;
    LineTrace trace = fam.line_trace(base, dir);
    if (trace.infinite) {
        // whole tail on this axis: limit at t_p, step from p_0
        Rat t_p = *param_on_line(base, dir, fam.limit());
        Rat t_0 = *param_on_line(base, dir, fam.point(0));
        const auto& g = std::get<GeometricOnLine>(fam.impl());
        seqs.push_back(GeomSeqTrace{t_p, t_0 - t_p, g.ratio});
        return;
    }
    std::vector<Piece> pieces;
    for (const auto& [idx, t] : trace.hits) pieces.push_back(Piece::point(QuadExt(t)));
    if (auto t = param_on_line(base, dir, fam.limit())) pieces.push_back(Piece::point(QuadExt(*t)));
    explicit_set = set_union(explicit_set, OneDimSet::from_pieces(std::move(pieces)));
}

inline AxisTrace trace_of(const CompactCandidate& K, const Axis& axis) {
    AxisTrace out;
    for (const auto& part : K.parts()) accumulate_part_trace(part, axis, out.explicit_set, out.seqs);
    std::sort(out.seqs.begin(), out.seqs.end(), [](const GeomSeqTrace& a, const GeomSeqTrace& b) {
        if (!(a.limit == b.limit)) return a.limit < b.limit;
        if (!(a.scale == b.scale)) return a.scale < b.scale;
        return a.ratio < b.ratio;
    });
    return out;
}

/// True when the part lies inside the union of the listed axes.
inline bool part_covered(const Part& part, const std::vector<Axis>& axes,
                         const std::vector<std::size_t>& which) {
    auto covered_point = [&](const Point& x) {
        for (std::size_t i : which)
            if (i < axes.size() && axes[i].passes_through(x)) return true;
        return false;
    };
    if (const auto* pt = std::get_if<PtPart>(&part)) return covered_point(pt->at);
    if (const auto* seg = std::get_if<SegmentPart>(&part)) {
        // a segment meets any other line in at most one point, so covering its
        // uncountably many points forces one axis to contain the carrier
        for (std::size_t i : which)
            if (i < axes.size() && detail::same_line(axes[i], seg->p, seg->q - seg->p))
                return true;
        return false;
    }
    const SequenceFamily& fam = std::get<CompletedZenoPart>(part).family;
    if (!covered_point(fam.limit())) return false;
    if (const auto* fp = std::get_if<FinitePrefix>(&fam.impl())) {
        for (const auto& q : fp->points)
            if (!covered_point(q)) return false;
        return true;
    }
    if (const auto* g = std::get_if<GeometricOnLine>(&fam.impl())) {
        // finitely many axes each meet the carrier at most once unless one of
        // them is the carrier itself
        for (std::size_t i : which)
            if (i < axes.size() && detail::same_line(axes[i], g->p, g->v)) return true;
        return false;
    }
    if (const auto* cs = std::get_if<ConeSequence>(&fam.impl())) {
        for (std::size_t i : which)
            if (i < axes.size() && detail::same_line(axes[i], cs->p, cs->dir)) return true;
        return false;
    }
    // axial families meet every line finitely often; no finite axis family
    // covers the infinite image
    return false;
}

}  // namespace detail

/// Axis-cover route: try to build the finite axis family with compact traces
/// directly, part by part. Obstructions surface as the counterexample.
inline CompactnessVerdict decide_via_axes(const CompactCandidate& K) {
    CompactnessVerdict verdict;
    std::vector<Axis> axes;
    std::vector<std::vector<std::size_t>> coverage(K.parts().size());

    auto axis_index = [&axes](const Axis& a) -> std::size_t {
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (detail::same_line(axes[i], a.base, a.line_dir())) return i;
        axes.push_back(a);
        return axes.size() - 1;
    };

    const Vector e0{Rat(1), Rat(0)};
    for (std::size_t i = 0; i < K.parts().size(); ++i) {
        const Part& part = K.parts()[i];
        if (const auto* pt = std::get_if<PtPart>(&part)) {
            coverage[i].push_back(axis_index(Axis::timelike_line(pt->at, e0)));
            continue;
        }
        if (const auto* seg = std::get_if<SegmentPart>(&part)) {
            Vector d = seg->q - seg->p;
            if (causal_class(d) == CausalClass::Lightlike) {
                verdict.compact = false;
                verdict.counterexample = LightlikeSegmentWitness{i};
                verdict.reasoning =
                    "part " + std::to_string(i) +
                    " is a lightlike segment: its carrier is no axis and it hosts "
                    "cone-type Zeno images";
                return verdict;
            }
            coverage[i].push_back(axis_index(axis_through(seg->p, seg->q)));
            continue;
        }
        const SequenceFamily& fam = std::get<CompletedZenoPart>(part).family;
        if (auto carrier = detail::carrier_axis(fam)) {
            coverage[i].push_back(axis_index(*carrier));
            continue;
        }
        if (const auto* fp = std::get_if<FinitePrefix>(&fam.impl())) {
            for (const auto& q : fp->points)
                coverage[i].push_back(axis_index(Axis::timelike_line(q, e0)));
            coverage[i].push_back(axis_index(Axis::timelike_line(fam.limit(), e0)));
            continue;
        }
        // no axis carries the tail: lightlike carrier or rotating axes
        verdict.compact = false;
        verdict.counterexample = ZenoPartWitness{i, fam};
        verdict.reasoning = "part " + std::to_string(i) +
                            " is a completed Zeno image (" + fam.kind() +
                            "): no finite axis family covers it";
        return verdict;
    }

    AxisCoverCertificate cert;
    cert.axes = std::move(axes);
    cert.coverage = std::move(coverage);
    for (const auto& a : cert.axes) cert.traces.push_back(detail::trace_of(K, a));
    for (const auto& t : cert.traces)
        if (!t.is_compact())
            throw Error("Internal", "constructed trace is not compact");
    verdict.compact = true;
    verdict.certificate = std::move(cert);
    verdict.reasoning = "covered by " + std::to_string(verdict.certificate->axes.size()) +
                        " axes with compact traces";
    return verdict;
}

/// Zeno route: inside the representable class the natural-topology
/// compactness is structural, so compactness reduces to the absence of
/// completed Zeno images. Lightlike segments host them; classified-yes
/// families are them.
inline CompactnessVerdict decide_via_zeno(const CompactCandidate& K) {
    CompactnessVerdict verdict;
    for (std::size_t i = 0; i < K.parts().size(); ++i) {
        const Part& part = K.parts()[i];
        if (const auto* seg = std::get_if<SegmentPart>(&part)) {
            if (causal_class(seg->q - seg->p) == CausalClass::Lightlike) {
                verdict.compact = false;
                verdict.counterexample = LightlikeSegmentWitness{i};
                verdict.reasoning =
                    "part " + std::to_string(i) +
                    " contains the completed image of a cone sequence along itself";
                return verdict;
            }
            continue;
        }
        if (const auto* cz = std::get_if<CompletedZenoPart>(&part)) {
            if (classify(cz->family).is_zeno == ZenoAnswer::Yes) {
                verdict.compact = false;
                verdict.counterexample = ZenoPartWitness{i, cz->family};
                verdict.reasoning = "part " + std::to_string(i) +
                                    " is the completed image of a Zeno sequence";
                return verdict;
            }
        }
    }
    verdict.compact = true;
    verdict.reasoning =
        "compact in the natural topology by construction and free of completed "
        "Zeno images";
    return verdict;
}

/// Exact recomputation of an axis-cover certificate: coverage of every part,
/// trace equality against an independent restriction pass, and per-trace
/// compactness.
inline bool verify_certificate(const CompactCandidate& K, const AxisCoverCertificate& cert) {
    if (cert.traces.size() != cert.axes.size()) return false;
    if (cert.coverage.size() != K.parts().size()) return false;
    for (std::size_t i = 0; i < K.parts().size(); ++i)
        if (!detail::part_covered(K.parts()[i], cert.axes, cert.coverage[i])) return false;
    for (std::size_t j = 0; j < cert.axes.size(); ++j) {
        AxisTrace expect = detail::trace_of(K, cert.axes[j]);
        if (!(expect == cert.traces[j])) return false;
        if (!cert.traces[j].is_compact()) return false;
    }
    return true;
}

/// The local-compactness refuter: any compact set containing this certified
/// open would contain the returned completed Zeno image.
inline SequenceFamily not_locally_compact_witness(const CertifiedOpen& c, const Point& p) {
    return zeno_inside_open(c, p);
}

}  // namespace zkit
