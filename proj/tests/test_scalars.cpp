#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/scalars.hpp"
#include "testutil.hpp"

using namespace riesz;
using riesz::test::Rng;

namespace {

// Independent oracle: rational bisection of [1,2] against x^2 - 2.
QInterval sqrt2_interval(int steps) {
    Rat lo(1), hi(2);
    for (int i = 0; i < steps; ++i) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid < 2)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

} // namespace

TEST_CASE("field arithmetic in Q(sqrt2)") {
    Field f = test::sqrt2_field();
    FieldElement alpha = f.gen();

    CHECK(f.mul(alpha, alpha) == f.from_rat(2));
    CHECK(f.inv(alpha) == FieldElement{{Rat(0), Rat(1, 2)}});
    FieldElement one_plus = f.add(f.one(), alpha);
    FieldElement one_minus = f.sub(f.one(), alpha);
    CHECK(f.mul(one_plus, one_minus) == f.from_rat(-1));
}

TEST_CASE("certified sign decisions") {
    Field f = test::sqrt2_field();
    FieldElement alpha = f.gen();

    CHECK(f.sign(f.zero()) == 0);

    // oracle: sqrt2 > 7/5 because the bisection interval clears 7/5
    QInterval oracle = sqrt2_interval(20);
    REQUIRE(oracle.lo > Rat(7, 5));
    CHECK(f.sign(f.sub(alpha, f.from_rat(Rat(7, 5)))) == 1);

    REQUIRE(oracle.lo > 1);
    CHECK(f.sign(f.sub(f.one(), alpha)) == -1);
}

TEST_CASE("enclosures") {
    Field f = test::sqrt2_field();
    FieldElement alpha = f.gen();

    QInterval e = f.enclose(f.from_rat(Rat(3, 2)), Rat(1, 10));
    CHECK(e.contains(Rat(3, 2)));
    CHECK(e.width() <= Rat(1, 10));

    // oracle: sqrt2 in [1.41, 1.42]
    QInterval oracle = sqrt2_interval(30);
    REQUIRE(oracle.lo > Rat(141, 100));
    REQUIRE(oracle.hi < Rat(142, 100));
    QInterval ea = f.enclose(alpha, Rat(1, 100));
    CHECK(ea.lo >= Rat(141, 100));
    CHECK(ea.hi <= Rat(142, 100));
    CHECK(ea.width() <= Rat(1, 100));

    QInterval ez = f.enclose(f.sub(alpha, alpha), Rat(1));
    CHECK(ez.contains_zero());
    CHECK(ez.width() <= 1);
}

TEST_CASE("error paths") {
    Field f = test::sqrt2_field();
    CHECK_THROWS_AS(f.inv(f.zero()), Error);

    // x^2 - 1 is reducible; the interval [1/2, 3/2] still isolates the root 1
    Field red(FieldSpec{{Rat(-1), Rat(0), Rat(1)}, Rat(1, 2), Rat(3, 2)});
    FieldElement gm1 = red.sub(red.gen(), red.one());
    try {
        red.inv(gm1);
        FAIL("expected ReducibleField");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ReducibleField);
    }

    Field capped(FieldSpec{{Rat(-2), Rat(0), Rat(1)}, Rat(1), Rat(2)}, 0);
    try {
        capped.sign(capped.sub(capped.gen(), capped.from_rat(Rat(3, 2))));
        FAIL("expected PrecisionCap");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PrecisionCap);
    }
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(Field(FieldSpec{{Rat(-2), Rat(0), Rat(2)}, Rat(1), Rat(2)}), Error);
    // equal signs at both endpoints
    CHECK_THROWS_AS(Field(FieldSpec{{Rat(-2), Rat(0), Rat(1)}, Rat(-2), Rat(2)}), Error);
    // x^3 - 2x has three roots in (-2, 2]
    CHECK_THROWS_AS(Field(FieldSpec{{Rat(0), Rat(-2), Rat(0), Rat(1)}, Rat(-2), Rat(2)}), Error);
    // golden ratio field x^2 - x - 1 on [1, 2] is fine
    Field golden(FieldSpec{{Rat(-1), Rat(-1), Rat(1)}, Rat(1), Rat(2)});
    CHECK(golden.sign(golden.sub(golden.gen(), golden.one())) == 1);
}

TEST_CASE("algebraic properties on random elements") {
    Field f = test::sqrt2_field();
    Rng rng(20240811);
    for (int iter = 0; iter < 300; ++iter) {
        FieldElement x = rng.element(f);
        CHECK(f.sign(f.mul(x, x)) >= 0);
        CHECK(f.sign(x) == -f.sign(f.sub(f.zero(), x)));
        if (!x.is_zero()) CHECK(f.mul(x, f.inv(x)) == f.one());

        QInterval outer = f.enclose(x, Rat(1, 10));
        QInterval inner = f.enclose(x, Rat(1, 1000));
        CHECK(inner.inside(outer));

        if (!x.is_zero()) {
            Rat eps(1, 2);
            QInterval e = f.enclose(x, eps);
            while (e.contains_zero()) {
                eps /= 4;
                e = f.enclose(x, eps);
            }
            CHECK(sgn(e.mid()) == f.sign(x));
        }
    }
}
