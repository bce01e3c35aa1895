#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "zkit/compactness.hpp"

using namespace zkit;
using namespace zkit::testing;

namespace {
const Point O{Rat(0), Rat(0)};

CompactCandidate random_candidate(SplitMix64& rng) {
    CompactCandidate K;
    std::size_t n = rng.below(4);
    for (std::size_t i = 0; i < n; ++i) {
        switch (rng.below(6)) {
            case 0: K.add_point(random_point(rng)); break;
            case 1: {
                Point p = random_point(rng);
                K.add_segment(p, p + random_vector_of_class(rng, CausalClass::Timelike));
                break;
            }
            case 2: {
                Point p = random_point(rng);
                K.add_segment(p, p + random_vector_of_class(rng, CausalClass::Spacelike));
                break;
            }
            case 3: {
                Point p = random_point(rng);
                K.add_segment(p, p + random_vector_of_class(rng, CausalClass::Lightlike));
                break;
            }
            case 4: {
                CausalClass cls = rng.below(3) == 0   ? CausalClass::Timelike
                                  : rng.below(2) == 0 ? CausalClass::Spacelike
                                                      : CausalClass::Lightlike;
                K.add_completed_zeno(SequenceFamily::geometric_on_line(
                    random_point(rng), random_vector_of_class(rng, cls), rng.unit_rat()));
                break;
            }
            default:
                K.add_completed_zeno(
                    SequenceFamily::rotating_axial(random_point(rng), rng.unit_rat()));
                break;
        }
    }
    return K;
}
}  // namespace

TEST_CASE("single timelike segment is compact with a one-axis certificate") {
    CompactCandidate K;
    K.add_segment(O, Point{Rat(2), Rat(1)});
    CompactnessVerdict v = decide_via_axes(K);
    REQUIRE(v.compact);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->axes.size() == 1);
    CHECK(verify_certificate(K, *v.certificate));
    CHECK(decide_via_zeno(K).compact);
}

TEST_CASE("lightlike segment is never compact") {
    CompactCandidate K;
    K.add_point(Point{Rat(5), Rat(5)});
    K.add_segment(O, Point{Rat(1), Rat(1)});
    for (auto* decide : {&decide_via_axes, &decide_via_zeno}) {
        CompactnessVerdict v = (*decide)(K);
        CHECK(!v.compact);
        REQUIRE(v.counterexample.has_value());
        const auto* w = std::get_if<LightlikeSegmentWitness>(&*v.counterexample);
        REQUIRE(w != nullptr);
        CHECK(w->part_index == 1);
    }
}

TEST_CASE("empty candidate is compact with an empty certificate") {
    CompactCandidate K;
    CompactnessVerdict v = decide_via_axes(K);
    CHECK(v.compact);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->axes.empty());
    CHECK(verify_certificate(K, *v.certificate));
    CHECK(decide_via_zeno(K).compact);
}

TEST_CASE("completed Zeno images decide the verdict") {
    CompactCandidate bad;
    bad.add_completed_zeno(SequenceFamily::rotating_axial(O, Rat(Int(1), Int(2))));
    for (auto* decide : {&decide_via_axes, &decide_via_zeno}) {
        CompactnessVerdict v = (*decide)(bad);
        CHECK(!v.compact);
        REQUIRE(v.counterexample.has_value());
        CHECK(std::holds_alternative<ZenoPartWitness>(*v.counterexample));
    }

    CompactCandidate good;
    good.add_completed_zeno(SequenceFamily::geometric_on_line(O, Vector{Rat(1), Rat(0)},
                                                              Rat(Int(1), Int(2))));
    CompactnessVerdict v = decide_via_axes(good);
    REQUIRE(v.compact);
    REQUIRE(v.certificate.has_value());
    REQUIRE(v.certificate->traces.size() == 1);
    REQUIRE(v.certificate->traces[0].seqs.size() == 1);
    const GeomSeqTrace& seq = v.certificate->traces[0].seqs[0];
    CHECK(seq.limit == Rat(0));
    CHECK(seq.scale == Rat(1));
    CHECK(seq.ratio == Rat(Int(1), Int(2)));
    CHECK(verify_certificate(good, *v.certificate));
    CHECK(decide_via_zeno(good).compact);
}

TEST_CASE("finite prefixes are compact as finite point sets") {
    CompactCandidate K;
    K.add_completed_zeno(SequenceFamily::finite_prefix(
        {O + Vector{Rat(1), Rat(0)}, O + Vector{Rat(0), Rat(1)}}, O));
    CompactnessVerdict v = decide_via_axes(K);
    REQUIRE(v.compact);
    CHECK(verify_certificate(K, *v.certificate));
    CHECK(decide_via_zeno(K).compact);
}

TEST_CASE("tampered certificates fail verification") {
    CompactCandidate K;
    K.add_segment(O, Point{Rat(2), Rat(1)});
    K.add_point(Point{Rat(7), Rat(0)});
    AxisCoverCertificate cert = *decide_via_axes(K).certificate;
    REQUIRE(verify_certificate(K, cert));

    AxisCoverCertificate missing = cert;
    missing.axes.pop_back();
    missing.traces.pop_back();
    CHECK(!verify_certificate(K, missing));

    AxisCoverCertificate widened = cert;
    widened.traces[0].explicit_set =
        set_union(widened.traces[0].explicit_set,
                  OneDimSet::open_interval(QuadExt(Rat(5)), QuadExt(Rat(6))));
    CHECK(!verify_certificate(K, widened));

    // non-compact trace: replace with an open interval
    AxisCoverCertificate open_trace = cert;
    open_trace.traces[0].explicit_set = OneDimSet::open_interval(QuadExt(Rat(0)), QuadExt(Rat(1)));
    CHECK(!verify_certificate(K, open_trace));
}

TEST_CASE("shared axes merge traces") {
    // two overlapping collinear segments and a crossing one
    CompactCandidate K;
    K.add_segment(O, Point{Rat(2), Rat(0)});
    K.add_segment(Point{Rat(1), Rat(0)}, Point{Rat(3), Rat(0)});
    K.add_segment(Point{Rat(1), Rat(-1)}, Point{Rat(1), Rat(1)});
    CompactnessVerdict v = decide_via_axes(K);
    REQUIRE(v.compact);
    CHECK(v.certificate->axes.size() == 2);  // collinear segments share an axis
    CHECK(verify_certificate(K, *v.certificate));

    // the time-axis trace is one merged interval reaching coordinate 3, which
    // is t = 3/2 in the axis parametrization base (0,0), dir (2,0)
    const AxisTrace& t0 = v.certificate->traces[0];
    REQUIRE(t0.explicit_set.pieces().size() == 1);
    CHECK(t0.explicit_set.pieces()[0].hi.value == QuadExt(Rat(Int(3), Int(2))));
}

TEST_CASE("deciders agree on random candidates") {
    SplitMix64 rng(20250809ULL);
    for (int i = 0; i < 200; ++i) {
        CompactCandidate K = random_candidate(rng);
        CompactnessVerdict a = decide_via_axes(K);
        CompactnessVerdict z = decide_via_zeno(K);
        CHECK(a.compact == z.compact);
        if (a.compact) CHECK(verify_certificate(K, *a.certificate));

        // translation invariance
        Vector v{rng.rat(), rng.rat()};
        CHECK(decide_via_axes(K.translated(v)).compact == a.compact);

        // monotonicity: a lightlike segment forces non-compactness
        CompactCandidate worse = K;
        Point p = random_point(rng);
        worse.add_segment(p, p + Vector{Rat(3), Rat(3)});
        CHECK(!decide_via_axes(worse).compact);
        CHECK(!decide_via_zeno(worse).compact);

        // subset closure: single-part candidates of a compact candidate
        if (a.compact) {
            for (const auto& part : K.parts()) {
                CompactCandidate single;
                if (const auto* pt = std::get_if<PtPart>(&part))
                    single.add_point(pt->at);
                else if (const auto* seg = std::get_if<SegmentPart>(&part))
                    single.add_segment(seg->p, seg->q);
                else
                    single.add_completed_zeno(std::get<CompletedZenoPart>(part).family);
                CHECK(decide_via_axes(single).compact);
            }
        }
    }
}

TEST_CASE("zero-length segments are rejected") {
    CompactCandidate K;
    CHECK_THROWS_AS(K.add_segment(O, O), InvalidArgument);
}

TEST_CASE("not_locally_compact_witness produces a Zeno family inside") {
    for (CertifiedOpen c : {zeeman_ball(O, Rat(1)), natural_open(Region::ball(O, Rat(1)))}) {
        SequenceFamily fam = not_locally_compact_witness(c, O);
        CHECK(classify(fam).is_zeno == ZenoAnswer::Yes);
        for (std::size_t n = 0; n < 50; ++n) CHECK(contains(c.region(), fam.point(n)));
        // and indeed no candidate containing its completed image is compact
        CompactCandidate K;
        K.add_completed_zeno(fam);
        CHECK(!decide_via_axes(K).compact);
    }
    CHECK_THROWS_AS(not_locally_compact_witness(zeeman_ball(O, Rat(1)), Point{Rat(9), Rat(9)}),
                    MembershipFailure);
}
