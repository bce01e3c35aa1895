#pragma once

// JSON wire formats. Coordinates are always canonical "num/den" strings so
// outputs are exact and byte-stable; every top-level CLI document carries
// "schema": "zkit/1".

#include <string>
#include <vector>

#include <json.hpp>

#include "zkit/compactness.hpp"
#include "zkit/errors.hpp"
#include "zkit/homotopy.hpp"
#include "zkit/minkowski.hpp"
#include "zkit/onedimset.hpp"
#include "zkit/region.hpp"
#include "zkit/zeno.hpp"
#include "zkit/zfunction.hpp"

namespace zkit {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "zkit/1";

// --- scalars ---------------------------------------------------------------

inline Json to_json(const Rat& r) { return r.str(); }

inline Rat parse_rat(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"num/den\" string");
    return Rat::parse(j.get<std::string>());
}

inline Json to_json(const QuadExt& x) {
    return Json{{"a", x.a().str()}, {"b", x.b().str()}, {"c", x.c().str()}};
}

inline QuadExt parse_quadext(const Json& j) {
    if (j.is_string()) return QuadExt(Rat::parse(j.get<std::string>()));
    return QuadExt(parse_rat(j.at("a")), parse_rat(j.at("b")), parse_rat(j.at("c")));
}

// --- one-dimensional sets ----------------------------------------------------

inline Json to_json(const OneDimSet& s) {
    Json out = Json::array();
    for (const auto& p : s.pieces()) {
        if (p.is_point()) {
            out.push_back(Json{{"kind", "point"}, {"at", to_json(p.lo.value)}});
            continue;
        }
        Json piece{{"kind", "interval"},
                   {"lo_closed", p.lo_closed},
                   {"hi_closed", p.hi_closed}};
        piece["lo"] = p.lo.finite() ? to_json(p.lo.value) : Json("-inf");
        piece["hi"] = p.hi.finite() ? to_json(p.hi.value) : Json("+inf");
        out.push_back(std::move(piece));
    }
    return out;
}

inline OneDimSet parse_onedimset(const Json& j) {
    std::vector<Piece> pieces;
    for (const auto& pj : j) {
        if (pj.at("kind") == "point") {
            pieces.push_back(Piece::point(parse_quadext(pj.at("at"))));
            continue;
        }
        auto bound = [](const Json& bj) {
            if (bj.is_string() && bj == "-inf") return Bound::neg_inf();
            if (bj.is_string() && bj == "+inf") return Bound::pos_inf();
            return Bound::at(parse_quadext(bj));
        };
        pieces.push_back(Piece::interval(bound(pj.at("lo")), bound(pj.at("hi")),
                                         pj.at("lo_closed").get<bool>(),
                                         pj.at("hi_closed").get<bool>()));
    }
    return OneDimSet::from_pieces(std::move(pieces));
}

// --- points, vectors, axes, maps --------------------------------------------

inline Json to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(c.str());
    return out;
}

inline Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& c : v.coords()) out.push_back(c.str());
    return out;
}

inline std::vector<Rat> parse_coords(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("coordinate tuple must be a nonempty array");
    std::vector<Rat> coords;
    for (const auto& c : j) coords.push_back(parse_rat(c));
    return coords;
}

inline Point parse_point(const Json& j) { return Point(parse_coords(j)); }
inline Vector parse_vector(const Json& j) { return Vector(parse_coords(j)); }

inline Json to_json(const Axis& a) {
    Json dirs = Json::array();
    for (const auto& d : a.dirs) dirs.push_back(to_json(d));
    return Json{{"base", to_json(a.base)}, {"dirs", dirs}, {"timelike", a.timelike}};
}

inline Axis parse_axis(const Json& j) {
    Point base = parse_point(j.at("base"));
    bool timelike = j.at("timelike").get<bool>();
    std::vector<Vector> dirs;
    for (const auto& dj : j.at("dirs")) dirs.push_back(parse_vector(dj));
    if (dirs.size() != 1) throw ParseError("axis must have exactly one direction when k = 1");
    return timelike ? Axis::timelike_line(std::move(base), std::move(dirs[0]))
                    : Axis::spacelike_line(std::move(base), std::move(dirs[0]));
}

inline Json to_json(const PoincareMap& m) {
    Json lin = Json::array();
    for (const auto& row : m.linear()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        lin.push_back(std::move(r));
    }
    return Json{{"linear", lin},
                {"translation", to_json(m.translation())},
                {"dilation", m.dilation().str()}};
}

inline PoincareMap parse_poincare(const Json& j) {
    std::vector<std::vector<Rat>> lin;
    for (const auto& row : j.at("linear")) {
        std::vector<Rat> r;
        for (const auto& x : row) r.push_back(parse_rat(x));
        lin.push_back(std::move(r));
    }
    return PoincareMap(std::move(lin), parse_vector(j.at("translation")),
                       parse_rat(j.at("dilation")));
}

// --- sequence families --------------------------------------------------------

inline Json to_json(const SequenceFamily& f) {
    Json out{{"kind", f.kind()}};
    if (const auto* g = std::get_if<GeometricOnLine>(&f.impl())) {
        out["p"] = to_json(g->p);
        out["v"] = to_json(g->v);
        out["ratio"] = g->ratio.str();
    } else if (const auto* r = std::get_if<RotatingAxial>(&f.impl())) {
        out["p"] = to_json(r->p);
        out["ratio"] = r->ratio.str();
    } else if (const auto* c = std::get_if<ConeSequence>(&f.impl())) {
        out["p"] = to_json(c->p);
        out["dir"] = to_json(c->dir);
        out["ratio"] = c->ratio.str();
    } else if (const auto* fp = std::get_if<FinitePrefix>(&f.impl())) {
        Json pts = Json::array();
        for (const auto& q : fp->points) pts.push_back(to_json(q));
        out["points"] = std::move(pts);
        out["limit"] = to_json(fp->limit);
    } else {
        const auto& sa = std::get<ScaledAxial>(f.impl());
        out["p"] = to_json(sa.p);
        out["ratio"] = sa.ratio.str();
        // the scale generator is derived data; emit a prefix for inspection
        Json pts = Json::array();
        for (std::size_t n = 0; n < 16; ++n) pts.push_back(to_json(f.point(n)));
        out["prefix"] = std::move(pts);
    }
    return out;
}

inline SequenceFamily parse_family(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "geometric-on-line")
        return SequenceFamily::geometric_on_line(parse_point(j.at("p")), parse_vector(j.at("v")),
                                                 parse_rat(j.at("ratio")));
    if (kind == "rotating-axial")
        return SequenceFamily::rotating_axial(parse_point(j.at("p")), parse_rat(j.at("ratio")));
    if (kind == "cone-sequence")
        return SequenceFamily::cone_sequence(parse_point(j.at("p")), parse_vector(j.at("dir")),
                                             parse_rat(j.at("ratio")));
    if (kind == "finite-prefix") {
        std::vector<Point> pts;
        for (const auto& pj : j.at("points")) pts.push_back(parse_point(pj));
        return SequenceFamily::finite_prefix(std::move(pts), parse_point(j.at("limit")));
    }
    throw ParseError("unknown or non-parseable sequence family kind: " + kind);
}

// --- regions and certificates ---------------------------------------------------

inline Json to_json(const Region& r) {
    return std::visit(
        [](const auto& n) -> Json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, leaves::OpenBall>) {
                return Json{{"kind", "ball"}, {"center", to_json(n.center)},
                            {"radius", n.radius.str()}};
            } else if constexpr (std::is_same_v<T, leaves::Cone>) {
                return Json{{"kind", "cone"}, {"vertex", to_json(n.vertex)}};
            } else if constexpr (std::is_same_v<T, leaves::LightRay>) {
                return Json{{"kind", "light-ray"}, {"base", to_json(n.base)},
                            {"dir", to_json(n.dir)}};
            } else if constexpr (std::is_same_v<T, leaves::Singleton>) {
                return Json{{"kind", "singleton"}, {"at", to_json(n.at)}};
            } else if constexpr (std::is_same_v<T, leaves::Segment>) {
                return Json{{"kind", "segment"}, {"p", to_json(n.p)}, {"q", to_json(n.q)}};
            } else if constexpr (std::is_same_v<T, leaves::FullLine>) {
                return Json{{"kind", "full-line"}, {"base", to_json(n.base)},
                            {"dir", to_json(n.dir)}};
            } else if constexpr (std::is_same_v<T, leaves::Parallelogram>) {
                return Json{{"kind", "parallelogram"}, {"o", to_json(n.o)},
                            {"t", to_json(n.t)}, {"s", to_json(n.s)}};
            } else if constexpr (std::is_same_v<T, leaves::SequenceImage>) {
                return Json{{"kind", "sequence-image"}, {"family", to_json(n.family)},
                            {"include_limit", n.include_limit}};
            } else if constexpr (std::is_same_v<T, leaves::Everything>) {
                return Json{{"kind", "everything"}};
            } else if constexpr (std::is_same_v<T, leaves::Nothing>) {
                return Json{{"kind", "nothing"}};
            } else if constexpr (std::is_same_v<T, Region::UnionNode>) {
                Json parts = Json::array();
                for (const auto& part : n.parts) parts.push_back(to_json(part));
                return Json{{"kind", "union"}, {"parts", parts}};
            } else if constexpr (std::is_same_v<T, Region::IntersectionNode>) {
                Json parts = Json::array();
                for (const auto& part : n.parts) parts.push_back(to_json(part));
                return Json{{"kind", "intersection"}, {"parts", parts}};
            } else {
                return Json{{"kind", "difference"}, {"left", to_json(n.left())},
                            {"right", to_json(n.right())}};
            }
        },
        r.node());
}

inline Region parse_region(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ball") return Region::ball(parse_point(j.at("center")), parse_rat(j.at("radius")));
    if (kind == "cone") return Region::cone(parse_point(j.at("vertex")));
    if (kind == "light-ray")
        return Region::light_ray(parse_point(j.at("base")), parse_vector(j.at("dir")));
    if (kind == "singleton") return Region::singleton(parse_point(j.at("at")));
    if (kind == "segment") return Region::segment(parse_point(j.at("p")), parse_point(j.at("q")));
    if (kind == "full-line")
        return Region::full_line(parse_point(j.at("base")), parse_vector(j.at("dir")));
    if (kind == "parallelogram")
        return Region::parallelogram(parse_point(j.at("o")), parse_vector(j.at("t")),
                                     parse_vector(j.at("s")));
    if (kind == "sequence-image")
        return Region::sequence_image(parse_family(j.at("family")),
                                      j.value("include_limit", false));
    if (kind == "everything") return Region::everything();
    if (kind == "nothing") return Region::nothing();
    if (kind == "union" || kind == "intersection") {
        std::vector<Region> parts;
        for (const auto& pj : j.at("parts")) parts.push_back(parse_region(pj));
        return kind == "union" ? Region::union_of(std::move(parts))
                               : Region::intersection_of(std::move(parts));
    }
    if (kind == "difference")
        return Region::difference(parse_region(j.at("left")), parse_region(j.at("right")));
    throw ParseError("unknown region kind: " + kind);
}

inline Json to_json(const CertifiedOpen& c);

inline Json to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& k) -> Json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, NaturallyOpenCert>) {
                return Json{{"kind", "naturally-open"}};
            } else if constexpr (std::is_same_v<T, ZeemanBallCert>) {
                return Json{{"kind", "zeeman-ball"}, {"p", to_json(k.p)},
                            {"radius", k.radius.str()}};
            } else if constexpr (std::is_same_v<T, DiffZClosedCert>) {
                Json removed;
                if (const auto* pts = std::get_if<std::vector<Point>>(&k.removed)) {
                    Json arr = Json::array();
                    for (const auto& q : *pts) arr.push_back(to_json(q));
                    removed = Json{{"kind", "points"}, {"points", arr}};
                } else {
                    removed = Json{{"kind", "family"},
                                   {"family", to_json(std::get<SequenceFamily>(k.removed))}};
                }
                return Json{{"kind", "diff-z-closed"}, {"base", to_json(*k.base)},
                            {"removed", removed}};
            } else {
                Json parts = Json::array();
                for (const auto& part : k.parts) parts.push_back(to_json(part));
                return Json{{"kind", "union-of-certified"}, {"parts", parts}};
            }
        },
        cert);
}

inline Json to_json(const CertifiedOpen& c) {
    Json out = Json{{"region", to_json(c.region())}};
    out["certificate"] = to_json(c.certificate());
    return out;
}

inline CertifiedOpen parse_certified(const Json& j) {
    if (!j.contains("certificate"))
        throw CertificateRequired("input region carries no openness certificate");
    const Json& cj = j.at("certificate");
    std::string kind = cj.at("kind").get<std::string>();
    if (kind == "naturally-open") return natural_open(parse_region(j.at("region")));
    if (kind == "zeeman-ball")
        return zeeman_ball(parse_point(cj.at("p")), parse_rat(cj.at("radius")));
    if (kind == "diff-z-closed") {
        CertifiedOpen base = parse_certified(cj.at("base"));
        const Json& rj = cj.at("removed");
        if (rj.at("kind") == "points") {
            std::vector<Point> pts;
            for (const auto& pj : rj.at("points")) pts.push_back(parse_point(pj));
            return diff_z_closed(std::move(base), std::move(pts));
        }
        return diff_z_closed(std::move(base), parse_family(rj.at("family")));
    }
    if (kind == "union-of-certified") {
        std::vector<CertifiedOpen> parts;
        for (const auto& pj : cj.at("parts")) parts.push_back(parse_certified(pj));
        return union_certified(std::move(parts));
    }
    throw ParseError("unknown certificate kind: " + kind);
}

// --- zeno verdicts ---------------------------------------------------------------

inline Json to_json(const ZenoVerdict& v) {
    Json out{{"is_zeno", to_string(v.is_zeno)}, {"reason", v.reason}};
    if (v.completed_image_z_closed.has_value())
        out["completed_image_z_closed"] = *v.completed_image_z_closed;
    else
        out["completed_image_z_closed"] = "unknown";
    if (!v.per_axis_multiplicity.empty()) {
        Json mult = Json::object();
        for (const auto& [key, count] : v.per_axis_multiplicity) mult[key] = count;
        out["per_axis_multiplicity"] = std::move(mult);
    }
    return out;
}

// --- compactness -------------------------------------------------------------------

inline Json to_json(const Part& part) {
    if (const auto* pt = std::get_if<PtPart>(&part))
        return Json{{"kind", "point"}, {"at", to_json(pt->at)}};
    if (const auto* seg = std::get_if<SegmentPart>(&part))
        return Json{{"kind", "segment"}, {"p", to_json(seg->p)}, {"q", to_json(seg->q)}};
    return Json{{"kind", "completed-zeno"},
                {"family", to_json(std::get<CompletedZenoPart>(part).family)}};
}

inline Json to_json(const CompactCandidate& K) {
    Json parts = Json::array();
    for (const auto& part : K.parts()) parts.push_back(to_json(part));
    return Json{{"parts", parts}};
}

inline CompactCandidate parse_candidate(const Json& j) {
    CompactCandidate K;
    for (const auto& pj : j.at("parts")) {
        std::string kind = pj.at("kind").get<std::string>();
        if (kind == "point")
            K.add_point(parse_point(pj.at("at")));
        else if (kind == "segment")
            K.add_segment(parse_point(pj.at("p")), parse_point(pj.at("q")));
        else if (kind == "completed-zeno")
            K.add_completed_zeno(parse_family(pj.at("family")));
        else
            throw ParseError("unknown candidate part kind: " + kind);
    }
    return K;
}

inline Json to_json(const GeomSeqTrace& t) {
    return Json{{"limit", t.limit.str()}, {"scale", t.scale.str()}, {"ratio", t.ratio.str()}};
}

inline GeomSeqTrace parse_geomseq(const Json& j) {
    return GeomSeqTrace{parse_rat(j.at("limit")), parse_rat(j.at("scale")),
                        parse_rat(j.at("ratio"))};
}

inline Json to_json(const AxisTrace& t) {
    Json seqs = Json::array();
    for (const auto& s : t.seqs) seqs.push_back(to_json(s));
    return Json{{"explicit", to_json(t.explicit_set)}, {"seqs", seqs}};
}

inline AxisTrace parse_axistrace(const Json& j) {
    AxisTrace t;
    t.explicit_set = parse_onedimset(j.at("explicit"));
    for (const auto& sj : j.at("seqs")) t.seqs.push_back(parse_geomseq(sj));
    return t;
}

inline Json to_json(const AxisCoverCertificate& c) {
    Json axes = Json::array(), traces = Json::array(), coverage = Json::array();
    for (const auto& a : c.axes) axes.push_back(to_json(a));
    for (const auto& t : c.traces) traces.push_back(to_json(t));
    for (const auto& m : c.coverage) coverage.push_back(m);
    return Json{{"axes", axes}, {"traces", traces}, {"coverage", coverage}};
}

inline AxisCoverCertificate parse_cover(const Json& j) {
    AxisCoverCertificate c;
    for (const auto& aj : j.at("axes")) c.axes.push_back(parse_axis(aj));
    for (const auto& tj : j.at("traces")) c.traces.push_back(parse_axistrace(tj));
    for (const auto& mj : j.at("coverage"))
        c.coverage.push_back(mj.get<std::vector<std::size_t>>());
    return c;
}

inline Json to_json(const CompactnessVerdict& v) {
    Json out{{"compact", v.compact}, {"reasoning", v.reasoning}};
    if (v.certificate) out["certificate"] = to_json(*v.certificate);
    if (v.counterexample) {
        if (const auto* l = std::get_if<LightlikeSegmentWitness>(&*v.counterexample))
            out["counterexample"] = Json{{"kind", "LightlikeSegment"}, {"part", l->part_index}};
        else {
            const auto& z = std::get<ZenoPartWitness>(*v.counterexample);
            out["counterexample"] = Json{{"kind", "ZenoPart"},
                                         {"part", z.part_index},
                                         {"family", to_json(z.family)}};
        }
    }
    return out;
}

// --- loops and paths ------------------------------------------------------------------

inline Json to_json(const Loop& l) {
    Json verts = Json::array(), breaks = Json::array();
    for (const auto& v : l.vertices()) verts.push_back(to_json(v));
    for (const auto& b : l.breakpoints()) breaks.push_back(b.str());
    return Json{{"vertices", verts}, {"breakpoints", breaks}};
}

inline Loop parse_loop(const Json& j) {
    std::vector<Point> verts;
    for (const auto& vj : j.at("vertices")) verts.push_back(parse_point(vj));
    if (!j.contains("breakpoints")) return Loop::polygon(std::move(verts));
    std::vector<Rat> breaks;
    for (const auto& bj : j.at("breakpoints")) breaks.push_back(parse_rat(bj));
    return Loop(std::move(verts), std::move(breaks));
}

inline Json to_json(const WindingCertificate& c) {
    return Json{{"point", to_json(c.point)}, {"w1", c.w1}, {"w2", c.w2}};
}

inline Json to_json(const ZPath& p) {
    Json waypoints = Json::array(), axes = Json::array();
    for (const auto& w : p.waypoints) waypoints.push_back(to_json(w));
    for (const auto& a : p.axes) axes.push_back(to_json(a));
    return Json{{"waypoints", waypoints}, {"axes", axes}};
}

}  // namespace zkit
