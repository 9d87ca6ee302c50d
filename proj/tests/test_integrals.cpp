#include "doctest.h"
#include "hilb/algebra_io.hpp"
#include "hilb/integrals.hpp"

using namespace hilb;

TEST_CASE("spherical transport lands on the cs-operator") {
    FrobeniusAlgebra p = point_algebra(Rational(1));
    cts_cross_check<Rational>(p, unit_element<Rational>(p), 2, 3);
    AlgElement<Rational> two = unit_element<Rational>(p);
    two[0] = Rational(2);
    cts_cross_check<Rational>(p, two, 2, 3);

    FrobeniusAlgebra pl = plane_algebra();
    cts_cross_check<Rational>(pl, unit_element<Rational>(pl), 2, 3);
}

TEST_CASE("twisting requires an invertible class") {
    FrobeniusAlgebra p = plane_algebra();
    FockBasis basis = FockBasis::build(p, 1);
    Matrix<Rational> id = Matrix<Rational>::identity(basis.size());
    AlgElement<Rational> hclass = zero_element<Rational>(p);
    hclass[1] = Rational(1);  // degree-2 class, not invertible
    CHECK_THROWS_AS(twist_conjugate(p, hclass, id, basis), input_error);
    // 1 + h is invertible and conjugation fixes the identity
    AlgElement<Rational> u = unit_element<Rational>(p);
    u[1] = Rational(1);
    CHECK(twist_conjugate(p, u, id, basis) == id);
}

TEST_CASE("degree-1 characteristic class on the first weight space") {
    // multiplication by the canonical-class part of the tautological class:
    // P(1 x) -> -3 P(h x) -> -3 P(h^2 x) -> 0 for the polynomial-plane algebra
    FrobeniusAlgebra p = plane_algebra();
    AlgElement<Rational> kc = lift_element<Rational>(p.canonical);
    BlockOp<Rational> d = chern_block<Rational>(p, kc, 1, unit_element<Rational>(p), 1);
    CHECK(d.blocks[0].is_zero_matrix());
    Matrix<Rational> expect(3, 3);
    expect(1, 0) = Rational(-3);
    expect(2, 1) = Rational(-3);
    CHECK(d.blocks[1] == expect);
}

TEST_CASE("block calculus bookkeeping") {
    FrobeniusAlgebra p = point_algebra(Rational(1));
    BlockOp<Rational> l = block_of(p, lehn_op<Rational>(p), 3);
    CHECK(block_bracket(l, l).vanishes());
    BlockOp<Rational> b =
        block_bracket(l, block_of(p, mul_op<Rational>(p, unit_element<Rational>(p), 1), 3));
    CHECK(b.shift == 1);
    CHECK_THROWS_AS(block_add(l, b), internal_error);
}

TEST_CASE("matrix spans close under products") {
    Matrix<Rational> n(2, 2);
    n(0, 1) = Rational(1);  // nilpotent generator
    MatrixSpan<Rational> span = algebra_span<Rational>({n}, 2);
    CHECK(span.dimension() == 2);
    CHECK(span.contains(n));
    CHECK(span.contains(Matrix<Rational>::identity(2)));
    CHECK_FALSE(span.insert(n + Matrix<Rational>::identity(2)));

    Matrix<Rational> m(2, 2);
    m(1, 0) = Rational(1);
    CHECK_FALSE(span.contains(m));
    MatrixSpan<Rational> other = algebra_span<Rational>({m}, 2);
    CHECK_FALSE(spans_equal(span, other));
}

TEST_CASE("degeneration limits agree with the direct operator") {
    // with vanishing euler class the degeneration limit of the transported
    // quadratic spherical operator is the K = 0 cs-operator itself
    FrobeniusAlgebra t = torus_algebra();
    DegenerationDirection dir = default_degeneration(t);
    check_degeneration(t, dir);
    FockDescent desc(t, 2, 3);
    Matrix<Rational> lim = im_spherical(t, desc, dir, {{dir.u_of_lambda, 2}});
    AlgElement<Rational> zero = zero_element<Rational>(t);
    CHECK(lim == matrix_of<Rational>(t, lehn_op<Rational>(t, zero), 2));
}
