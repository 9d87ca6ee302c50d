#include "doctest.h"
#include "hilb/algebra_io.hpp"
#include "hilb/ring.hpp"

using namespace hilb;

namespace {
MatrixSpan<Rational> chern_span(const FrobeniusAlgebra& h, int n) {
    AlgElement<Rational> kc = lift_element<Rational>(h.canonical);
    return algebra_span(chern_route_ops<Rational>(h, kc, 2, n), FockBasis::build(h, n).size());
}
}  // namespace

TEST_CASE("grading weights depend on the socle degree") {
    FockMonomial m{{{2, 0}}};  // P(1 x^2)
    CHECK(ring_degree(plane_algebra(), m) == 2);
    CHECK(ring_degree(torus_algebra(), m) == 1);
    CHECK(ring_degree(point_algebra(Rational(1)), m) == 0);
}

TEST_CASE("weight-2 point table is the frozen oracle") {
    FrobeniusAlgebra h = point_algebra(Rational(1));
    RingTable<Rational> t = structure_constants(h, chern_span(h, 2), 2);
    check_ring_table(t);
    // basis order: P(x)^2, P(x^2); unit = (1/2) P(x)^2
    CHECK(t.unit == std::vector<Rational>{Rational(1, 2), 0});
    CHECK(t.c[0][0] == std::vector<Rational>{Rational(2), 0});
    CHECK(t.c[0][1] == std::vector<Rational>{0, Rational(2)});
    CHECK(t.c[1][0] == std::vector<Rational>{0, Rational(2)});
    CHECK(t.c[1][1] == std::vector<Rational>{Rational(2), 0});
}

TEST_CASE("weight-1 table reproduces the coefficient algebra") {
    for (const char* spec : {"point", "plane", "torus"}) {
        FrobeniusAlgebra h = resolve_algebra(spec);
        RingTable<Rational> t = structure_constants(h, chern_span(h, 1), 1);
        check_ring_table(t);
        check_weight_one_table(h, t);
    }
}

TEST_CASE("the cs-operator is multiplication by its unit image") {
    FrobeniusAlgebra h = plane_algebra();
    MatrixSpan<Rational> span = chern_span(h, 2);
    RingTable<Rational> t = structure_constants(h, span, 2);
    check_ring_table(t);
    check_lehn_is_multiplication(h, span, t);
}
