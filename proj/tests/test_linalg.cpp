#include "doctest.h"
#include "hilb/linalg.hpp"

using namespace hilb;

namespace {
Matrix<Rational> mat2(Rational a, Rational b, Rational c, Rational d) {
    Matrix<Rational> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}
}  // namespace

TEST_CASE("rank and inverse") {
    Matrix<Rational> m = mat2(1, 2, 3, 4);
    CHECK(rank(m) == 2);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == Matrix<Rational>::identity(2));

    Matrix<Rational> s = mat2(1, 2, 2, 4);
    CHECK(rank(s) == 1);
    CHECK_FALSE(inverse(s).has_value());
}

TEST_CASE("exact linear solve") {
    Matrix<Rational> m = mat2(2, 0, 0, Rational(1, 3));
    SolveResult<Rational> r = solve(m, {Rational(1), Rational(1)});
    REQUIRE(r.solvable);
    REQUIRE(r.unique);
    CHECK(r.x == std::vector<Rational>{Rational(1, 2), Rational(3)});

    // inconsistent system
    Matrix<Rational> s = mat2(1, 2, 2, 4);
    CHECK_FALSE(solve(s, {Rational(1), Rational(3)}).solvable);
    // underdetermined system
    SolveResult<Rational> u = solve(s, {Rational(1), Rational(2)});
    CHECK(u.solvable);
    CHECK_FALSE(u.unique);
}
