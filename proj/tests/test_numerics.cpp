#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "zkit/onedimset.hpp"
#include "zkit/quadext.hpp"
#include "zkit/rat.hpp"

using namespace zkit;
using zkit::testing::bracket_cmp;
using zkit::testing::random_quadext;
using zkit::testing::random_set;

TEST_CASE("Rat canonical form and parsing") {
    Rat r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rat::parse("-3/2") == r);
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat::parse("x/2"), ParseError);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DivisionByZero);

    CHECK(Rat(Int(-7), Int(2)).floor() == -4);
    CHECK(Rat(Int(-7), Int(2)).ceil() == -3);
    CHECK(Rat(Int(7), Int(2)).floor() == 3);
    CHECK(Rat(Int(1), Int(2)).pow(10) == Rat(Int(1), Int(1024)));
}

TEST_CASE("QuadExt canonicalization") {
    QuadExt x(Rat(0), Rat(1), Rat(8));  // sqrt(8) = 2 sqrt(2)
    CHECK(x.b() == Rat(2));
    CHECK(x.c() == Rat(2));

    QuadExt sq(Rat(0), Rat(1), Rat(Int(9), Int(4)));  // sqrt(9/4) = 3/2
    CHECK(sq.is_rational());
    CHECK(sq.as_rat() == Rat(Int(3), Int(2)));

    QuadExt frac(Rat(0), Rat(1), Rat(Int(1), Int(2)));  // sqrt(1/2) = (1/2) sqrt(2)
    CHECK(frac.b() == Rat(Int(1), Int(2)));
    CHECK(frac.c() == Rat(2));

    CHECK(QuadExt(Rat(3), Rat(0), Rat(5)).is_rational());
    CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), Rat(-1)), NegativeRadicand);
}

TEST_CASE("qe_cmp on hand-checked instances") {
    QuadExt one_plus_rt2(Rat(1), Rat(1), Rat(2));
    CHECK(qe_cmp(one_plus_rt2, QuadExt(Rat(2))) == Ordering::Greater);
    CHECK(qe_cmp(QuadExt(Rat(3)), QuadExt(Rat(3))) == Ordering::Equal);
    CHECK(qe_cmp(QuadExt::sqrt_of(Rat(2)), QuadExt::sqrt_of(Rat(3))) == Ordering::Less);

    // agreement with the bracket oracle on exactly those values
    CHECK(bracket_cmp(one_plus_rt2, QuadExt(Rat(2))) == Ordering::Greater);
    CHECK(bracket_cmp(QuadExt::sqrt_of(Rat(2)), QuadExt::sqrt_of(Rat(3))) == Ordering::Less);
}

TEST_CASE("qe_cmp is a total order agreeing with the bracket oracle") {
    SplitMix64 rng(20260809ULL);
    for (int i = 0; i < 2000; ++i) {
        QuadExt x = random_quadext(rng);
        QuadExt y = random_quadext(rng);
        int c = x.cmp(y);
        CHECK(y.cmp(x) == -c);
        Ordering o = bracket_cmp(x, y);
        CHECK(qe_cmp(x, y) == o);
        if (c == 0) CHECK(x == y);  // equality is structural in canonical form
    }
    // transitivity on random triples
    for (int i = 0; i < 500; ++i) {
        QuadExt a = random_quadext(rng), b = random_quadext(rng), d = random_quadext(rng);
        if (a.cmp(b) <= 0 && b.cmp(d) <= 0) CHECK(a.cmp(d) <= 0);
    }
}

TEST_CASE("QuadExt arithmetic within one radicand") {
    QuadExt x(Rat(1), Rat(1), Rat(2));   // 1 + sqrt(2)
    QuadExt y(Rat(1), Rat(-1), Rat(2));  // 1 - sqrt(2)
    CHECK((x * y) == QuadExt(Rat(-1)));
    CHECK((x + y) == QuadExt(Rat(2)));
    CHECK((x / x) == QuadExt(Rat(1)));
    CHECK((QuadExt(Rat(1)) / x) == y / (x * y));

    QuadExt z = QuadExt::sqrt_of(Rat(3));
    CHECK_THROWS_AS(x + z, MixedRadicand);
    CHECK_THROWS_AS(x * z, MixedRadicand);
    CHECK((QuadExt(Rat(2)) * z).c() == Rat(3));  // rational times radical stays representable
    CHECK_THROWS_AS(x / QuadExt(Rat(0)), DivisionByZero);
}

TEST_CASE("OneDimSet spec instances") {
    OneDimSet a = OneDimSet::open_interval(QuadExt(Rat(0)), QuadExt(Rat(1)));
    OneDimSet b = OneDimSet::open_interval(QuadExt(Rat(1)), QuadExt(Rat(2)));
    OneDimSet u = set_union(a, b);
    REQUIRE(u.pieces().size() == 2);  // 1 stays excluded
    CHECK(!u.contains(QuadExt(Rat(1))));

    OneDimSet c = set_complement(OneDimSet::point(QuadExt(Rat(0))));
    REQUIRE(c.pieces().size() == 2);
    CHECK(c.pieces()[0].lo.kind == Bound::NegInf);
    CHECK(!c.contains(QuadExt(Rat(0))));
    CHECK(c.contains(QuadExt(Rat(5))));

    OneDimSet i = set_intersect(OneDimSet::closed_interval(QuadExt(Rat(0)), QuadExt(Rat(2))),
                                OneDimSet::open_interval(QuadExt(Rat(1)), QuadExt(Rat(3))));
    REQUIRE(i.pieces().size() == 1);
    CHECK(i.pieces()[0].lo.value == QuadExt(Rat(1)));
    CHECK(!i.pieces()[0].lo_closed);
    CHECK(i.pieces()[0].hi.value == QuadExt(Rat(2)));
    CHECK(i.pieces()[0].hi_closed);
}

TEST_CASE("normal form merges touching pieces") {
    OneDimSet left = OneDimSet::interval(Bound::at(QuadExt(Rat(0))), Bound::at(QuadExt(Rat(1))),
                                         false, true);
    OneDimSet right = OneDimSet::open_interval(QuadExt(Rat(1)), QuadExt(Rat(2)));
    OneDimSet u = set_union(left, right);
    REQUIRE(u.pieces().size() == 1);
    CHECK(!u.pieces()[0].lo_closed);
    CHECK(!u.pieces()[0].hi_closed);
    CHECK(u.pieces()[0].hi.value == QuadExt(Rat(2)));

    // point at an open endpoint is absorbed
    OneDimSet v = set_union(OneDimSet::open_interval(QuadExt(Rat(0)), QuadExt(Rat(2))),
                            OneDimSet::point(QuadExt(Rat(2))));
    REQUIRE(v.pieces().size() == 1);
    CHECK(v.pieces()[0].hi_closed);
}

TEST_CASE("openness, closedness, compactness, finiteness") {
    OneDimSet open = OneDimSet::open_interval(QuadExt(Rat(0)), QuadExt(Rat(1)));
    CHECK(open.is_open());
    CHECK(!open.is_closed());
    CHECK(!open.is_compact_1d());

    OneDimSet half = OneDimSet::interval(Bound::at(QuadExt(Rat(0))), Bound::at(QuadExt(Rat(1))),
                                         false, true);
    CHECK(!half.is_open());
    CHECK(!half.is_closed());

    OneDimSet k = set_union(OneDimSet::closed_interval(QuadExt(Rat(0)), QuadExt(Rat(1))),
                            OneDimSet::point(QuadExt(Rat(2))));
    CHECK(k.is_closed());
    CHECK(k.is_compact_1d());
    CHECK(!k.is_finite());

    CHECK(OneDimSet::point(QuadExt(Rat(2))).is_finite());
    CHECK(OneDimSet::empty().is_open());
    CHECK(OneDimSet::empty().is_closed());
    CHECK(OneDimSet::empty().is_compact_1d());
    CHECK(OneDimSet::all().is_open());
    CHECK(OneDimSet::all().is_closed());
    CHECK(!OneDimSet::all().is_compact_1d());
}

TEST_CASE("set algebra laws on random inputs") {
    SplitMix64 rng(0xab5e11ULL);
    for (int i = 0; i < 1500; ++i) {
        OneDimSet a = random_set(rng);
        OneDimSet b = random_set(rng);
        CHECK(set_complement(set_union(a, b)) ==
              set_intersect(set_complement(a), set_complement(b)));
        CHECK(set_complement(set_complement(a)) == a);
        CHECK(a.is_open() == set_complement(a).is_closed());
        // membership is consistent with the boolean structure
        QuadExt probe = random_quadext(rng);
        CHECK(set_union(a, b).contains(probe) == (a.contains(probe) || b.contains(probe)));
        CHECK(set_intersect(a, b).contains(probe) == (a.contains(probe) && b.contains(probe)));
        CHECK(set_complement(a).contains(probe) == !a.contains(probe));
    }
}
