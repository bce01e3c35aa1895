#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"
#include "zkit/zfunction.hpp"

using namespace zkit;
using namespace zkit::testing;
using Catch::Approx;

namespace {
const Point P{Rat(Int(1), Int(2)), Rat(-1)};
ZFParams default_params() { return ZFParams(P, Vector{Rat(1), Rat(0)}); }
}  // namespace

TEST_CASE("exact case analysis") {
    ZFParams params = default_params();
    CHECK(eval_f(params, P) == 0.0);
    FValue cone = eval_f_detail(params, P + Vector{Rat(3), Rat(-3)});
    CHECK(cone.value == 1.0);
    CHECK(cone.case_name == "cone");
    FValue vertex = eval_f_detail(params, P);
    CHECK(vertex.case_name == "vertex");

    // orthogonal direction: numerator vanishes, h(0) = 0
    CHECK(eval_f(params, P + Vector{Rat(0), Rat(5)}) == 0.0);

    CHECK_THROWS_AS(ZFParams(P, Vector{Rat(1), Rat(1)}), InvalidArgument);
    CHECK_THROWS_AS(ZFParams(P, Vector{Rat(1), Rat(0)}, -1.0), InvalidArgument);
}

TEST_CASE("field values stay in [0,1] for the default profile") {
    SplitMix64 rng(5150);
    ZFParams params = default_params();
    for (int i = 0; i < 500; ++i) {
        Point x = random_point(rng);
        double f = eval_f(params, x);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
    }
}

TEST_CASE("axis bound constants") {
    ZFParams params = default_params();
    Axis along_e = Axis::timelike_line(P, Vector{Rat(1), Rat(0)});
    CHECK(axis_bound_constant(params, along_e) == Approx(1.0));  // sqrt(|g(e,e)|)

    Axis orth = Axis::spacelike_line(P, Vector{Rat(0), Rat(1)});
    CHECK(axis_bound_constant(params, orth) == 0.0);

    Axis skew = Axis::timelike_line(P, Vector{Rat(2), Rat(1)});
    CHECK(axis_bound_constant(params, skew) == Approx(2.0 / std::sqrt(3.0)));

    Axis elsewhere = Axis::timelike_line(Point{Rat(9), Rat(9)}, Vector{Rat(1), Rat(0)});
    CHECK_THROWS_AS(axis_bound_constant(params, elsewhere), InvalidArgument);
}

TEST_CASE("continuity audit along axes through p") {
    ZFParams params = default_params();
    SplitMix64 rng(31337);
    for (int i = 0; i < 30; ++i) {
        Axis axis = random_axis(rng, P);
        AxisAuditReport rep = audit_axis_continuity(params, axis, 40, Rat(Int(1), Int(2)));
        CHECK(rep.bound_ok);
        CHECK(rep.decreasing);
        CHECK(rep.tail_max < 1e-6);
        REQUIRE(rep.samples.size() == 40);
        for (const auto& s : rep.samples) CHECK(s.margin >= -1e-12);
    }

    // orthogonal spacelike axis: the field vanishes identically
    Axis orth = Axis::spacelike_line(P, Vector{Rat(0), Rat(1)});
    AxisAuditReport rep = audit_axis_continuity(params, orth, 20, Rat(Int(1), Int(2)));
    for (const auto& s : rep.samples) CHECK(s.f == 0.0);

    AxisAuditReport empty = audit_axis_continuity(params, orth, 0, Rat(Int(1), Int(2)));
    CHECK(empty.bound_ok);
    CHECK(empty.samples.empty());
    CHECK(empty.tail_max == 0.0);
}

TEST_CASE("bound audit is analytically tight on the axis along e") {
    // along u = e with alpha = beta = 1 the ratio argument is exactly
    // |t g(e,e)|^3 / |t^2 g(e,e)| = |t| |g(e,e)|, so f equals its bound
    ZFParams params = default_params();
    Axis axis = Axis::timelike_line(P, params.e);
    AxisAuditReport rep = audit_axis_continuity(params, axis, 30, Rat(Int(1), Int(2)));
    for (const auto& s : rep.samples) {
        double expected = params.h.fn(s.t.to_double());
        CHECK(s.f == Approx(expected).margin(1e-15));
        CHECK(std::abs(s.margin) <= 1e-12);
    }
}

TEST_CASE("natural-topology discontinuity witness") {
    ZFParams params = default_params();
    DiscontinuityReport rep = audit_n_discontinuity(params, 10);
    CHECK(rep.witness_exact);
    CHECK(rep.f_at_vertex == 0.0);
    REQUIRE(rep.values.size() == 2);  // both lightlike directions
    for (const auto& dir_values : rep.values) {
        REQUIRE(dir_values.size() == 10);
        for (double v : dir_values) CHECK(v == 1.0);
    }
}

TEST_CASE("reflection symmetry through p") {
    ZFParams params = default_params();
    SplitMix64 rng(616);
    for (int i = 0; i < 300; ++i) {
        Point x = random_point(rng);
        Point mirrored = P + (P - x);
        CHECK(eval_f(params, x) == eval_f(params, mirrored));
    }
}

TEST_CASE("default profile is monotone on a grid") {
    Profile h = Profile::rational();
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        double v = h.fn(i * 0.1);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(h.fn(0.0) == 0.0);
    CHECK(h.fn(std::numeric_limits<double>::infinity()) == 1.0);
}

TEST_CASE("irrational exponents are accepted") {
    ZFParams params(P, Vector{Rat(1), Rat(0)}, std::sqrt(2.0), 0.5);
    Axis axis = Axis::timelike_line(P, Vector{Rat(3), Rat(1)});
    AxisAuditReport rep = audit_axis_continuity(params, axis, 25, Rat(Int(1), Int(2)));
    CHECK(rep.bound_ok);
    CHECK(rep.decreasing);
}
