#include "doctest.h"
#include "hilb/algebra_io.hpp"

using namespace hilb;

TEST_CASE("builtin algebras validate and expose the expected data") {
    FrobeniusAlgebra p = plane_algebra();
    CHECK(p.dim == 3);
    CHECK(p.canonical == std::vector<Rational>{0, -3, 0});
    CHECK(p.euler() == std::vector<Rational>{0, 0, 3});
    REQUIRE(p.socle_degree.has_value());
    CHECK(*p.socle_degree == 4);

    FrobeniusAlgebra t = torus_algebra();
    CHECK(t.dim == 4);
    CHECK(t.degrees == std::vector<int>{0, 1, 1, 2});
    CHECK(t.parity(1) == 1);
    CHECK(t.parity(3) == 0);
    for (const auto& q : t.euler()) CHECK(is_zero(q));
    for (const auto& q : t.canonical) CHECK(is_zero(q));

    CHECK(point_algebra(Rational(2)).euler() == std::vector<Rational>{2});
    CHECK(tpoint_algebra(Rational(3)).mul_coeff(1, 1, 1) == Rational(3));
}

TEST_CASE("json round trip preserves the content hash") {
    for (const char* spec : {"point:2", "plane", "torus", "tpoint:5/3"}) {
        FrobeniusAlgebra h = resolve_algebra(spec);
        FrobeniusAlgebra back = load_algebra(algebra_to_json(h));
        CHECK(back.content_hash() == h.content_hash());
        CHECK(back.dim == h.dim);
        CHECK(back.canonical == h.canonical);
    }
    CHECK(resolve_algebra("plane").content_hash() != resolve_algebra("torus").content_hash());
}

TEST_CASE("malformed algebra input is rejected") {
    CHECK_THROWS_AS(load_algebra("not json"), input_error);
    CHECK_THROWS_AS(load_algebra("{\"name\":\"x\"}"), input_error);
    CHECK_THROWS_AS(resolve_algebra("no-such-file.json"), input_error);
    // coproduct incompatible with the multiplication must fail validation
    std::string bad = R"({"name":"bad","dim":2,"labels":["1","v"],"degrees":[0,0],
        "unit":0,
        "mul":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"],[1,1,1,"1"]],
        "coproduct":[[0,0,"1"]],"K":["0","0"]})";
    CHECK_THROWS_AS(load_algebra(bad), input_error);
}
