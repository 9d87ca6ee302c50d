#include "doctest.h"
#include "hilb/rational_function.hpp"

using namespace hilb;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(rational_from_string("3/6") == Rational(1, 2));
    CHECK(rational_from_string("-4/2") == Rational(-2));
    CHECK_THROWS_AS(rational_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rational_from_string("abc"), input_error);
}

TEST_CASE("rational functions stay coprime with monic denominator") {
    RationalFunction l = RationalFunction::lambda();
    RationalFunction one(Rational(1));

    // (l^2 - 1)/(l - 1) reduces to l + 1
    RationalFunction f = (l * l - one) / (l - one);
    CHECK(f == l + one);

    // denominator is normalized to be monic
    RationalFunction g = one / (l + l);
    CHECK(g.den() == Poly::variable());
    CHECK(g.num() == Poly(Rational(1, 2)));

    CHECK((l / l) == one);
    CHECK((l - l).is_zero());
    CHECK_THROWS_AS(one / (l - l), input_error);
}

TEST_CASE("limits at the degeneration point") {
    RationalFunction l = RationalFunction::lambda();
    RationalFunction f = (RationalFunction(Rational(3)) + l * l) / (RationalFunction(Rational(2)) - l);
    CHECK(f.limit_at_zero() == Rational(3, 2));
    CHECK(f.eval(Rational(1)) == Rational(4));
    CHECK_THROWS_AS((RationalFunction(Rational(1)) / l).limit_at_zero(), internal_error);
    CHECK_THROWS_AS(f.eval(Rational(2)), input_error);
}
