#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "zkit/zkit.hpp"

using namespace zkit;
using namespace zkit::testing;

namespace {
const Point O{Rat(0), Rat(0)};
}

TEST_CASE("scalar round trips") {
    SplitMix64 rng(1);
    for (int i = 0; i < 300; ++i) {
        Rat r = rng.rat();
        CHECK(parse_rat(to_json(r)) == r);
        QuadExt x = random_quadext(rng);
        CHECK(parse_quadext(to_json(x)) == x);
    }
    CHECK_THROWS_AS(parse_rat(Json(3)), ParseError);
}

TEST_CASE("one-dimensional set round trips") {
    SplitMix64 rng(2);
    for (int i = 0; i < 300; ++i) {
        OneDimSet s = random_set(rng);
        CHECK(parse_onedimset(to_json(s)) == s);
    }
}

TEST_CASE("points, axes, and maps round trip") {
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Point p = random_point(rng);
        CHECK(parse_point(to_json(p)) == p);
        Axis a = random_axis(rng);
        Axis back = parse_axis(to_json(a));
        CHECK(back.base == a.base);
        CHECK(back.line_dir() == a.line_dir());
        CHECK(back.timelike == a.timelike);
        PoincareMap m = boost_from_slope(rng.slope());
        Json mj = to_json(m);
        PoincareMap back_m = parse_poincare(mj);
        CHECK(to_json(back_m) == mj);
    }
}

TEST_CASE("families round trip") {
    SplitMix64 rng(4);
    auto g = SequenceFamily::geometric_on_line(random_point(rng), Vector{Rat(1), Rat(1)},
                                               Rat(Int(1), Int(3)));
    CHECK(to_json(parse_family(to_json(g))) == to_json(g));
    auto r = SequenceFamily::rotating_axial(random_point(rng), Rat(Int(2), Int(5)));
    CHECK(to_json(parse_family(to_json(r))) == to_json(r));
    auto fp = SequenceFamily::finite_prefix({O + Vector{Rat(1), Rat(0)}}, O);
    CHECK(to_json(parse_family(to_json(fp))) == to_json(fp));
    CHECK_THROWS_AS(parse_family(Json{{"kind", "scaled-axial"}}), ParseError);
}

TEST_CASE("regions round trip structurally") {
    // a tree exercising every parseable leaf and node
    Region r = Region::union_of(
        {Region::difference(Region::ball(O, Rat(2)), Region::cone(O)),
         Region::intersection_of({Region::everything(),
                                  Region::parallelogram(O, Vector{Rat(1), Rat(0)},
                                                        Vector{Rat(0), Rat(1)})}),
         Region::segment(O, Point{Rat(1), Rat(0)}),
         Region::light_ray(O, Vector{Rat(1), Rat(1)}),
         Region::full_line(O, Vector{Rat(1), Rat(0)}), Region::singleton(O),
         Region::sequence_image(SequenceFamily::rotating_axial(O, Rat(Int(1), Int(2)))),
         Region::nothing()});
    Json j = to_json(r);
    CHECK(to_json(parse_region(j)) == j);
}

TEST_CASE("zeeman ball translation is structural") {
    Point p{Rat(1), Rat(-2)};
    Vector v{Rat(3), Rat(Int(1), Int(2))};
    CertifiedOpen moved = translate_certified(zeeman_ball(p, Rat(1)), v);
    CertifiedOpen direct = zeeman_ball(p + v, Rat(1));
    CHECK(to_json(moved) == to_json(direct));
}

TEST_CASE("certified opens round trip") {
    CertifiedOpen zb = zeeman_ball(Point{Rat(1), Rat(1)}, Rat(Int(3), Int(2)));
    CHECK(to_json(parse_certified(to_json(zb))) == to_json(zb));

    CertifiedOpen diff = diff_z_closed(zb, std::vector<Point>{Point{Rat(1), Rat(Int(3), Int(2))}});
    CHECK(to_json(parse_certified(to_json(diff))) == to_json(diff));

    CertifiedOpen uni = union_certified({zb, natural_open(Region::ball(O, Rat(1)))});
    CHECK(to_json(parse_certified(to_json(uni))) == to_json(uni));

    Json no_cert{{"region", to_json(Region::ball(O, Rat(1)))}};
    CHECK_THROWS_AS(parse_certified(no_cert), CertificateRequired);
}

TEST_CASE("candidates, verdicts, and certificates round trip") {
    CompactCandidate K;
    K.add_point(Point{Rat(5), Rat(0)});
    K.add_segment(O, Point{Rat(2), Rat(1)});
    K.add_completed_zeno(SequenceFamily::geometric_on_line(O, Vector{Rat(1), Rat(0)},
                                                           Rat(Int(1), Int(2))));
    Json kj = to_json(K);
    CHECK(to_json(parse_candidate(kj)) == kj);

    CompactnessVerdict v = decide_via_axes(K);
    REQUIRE(v.compact);
    Json cj = to_json(*v.certificate);
    AxisCoverCertificate back = parse_cover(cj);
    CHECK(to_json(back) == cj);
    CHECK(verify_certificate(K, back));

    Json vj = to_json(v);
    CHECK(vj.at("compact").get<bool>());

    // a non-compact verdict serializes its counterexample
    CompactCandidate bad;
    bad.add_segment(O, Point{Rat(1), Rat(1)});
    Json bj = to_json(decide_via_zeno(bad));
    CHECK(bj.at("counterexample").at("kind") == "LightlikeSegment");
}

TEST_CASE("loops and paths round trip") {
    ParallelogramLoop P(O, Vector{Rat(1), Rat(0)}, Vector{Rat(0), Rat(1)});
    Loop l = P.loop();
    Json lj = to_json(l);
    CHECK(to_json(parse_loop(lj)) == lj);

    ZPath path = z_path(O, Point{Rat(2), Rat(2)});
    Json pj = to_json(path);
    CHECK(pj.at("axes").size() == 2);

    ZenoVerdict zv = classify(SequenceFamily::rotating_axial(O, Rat(Int(1), Int(2))));
    Json zj = to_json(zv);
    CHECK(zj.at("is_zeno") == "yes");
}
