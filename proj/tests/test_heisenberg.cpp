#include "doctest.h"
#include "hilb/algebra_io.hpp"
#include "hilb/heisenberg.hpp"
#include "hilb/linalg.hpp"

using namespace hilb;

namespace {
Matrix<Rational> from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}
}  // namespace

TEST_CASE("cs-operator on small point weight spaces") {
    FrobeniusAlgebra h = point_algebra(Rational(1));
    // basis order: P(x)^2, P(x^2)
    CHECK(matrix_of<Rational>(h, lehn_op<Rational>(h), 2) == from_rows({{0, 2}, {2, 0}}));
    // basis order: P(x)^3, P(x^2)P(x), P(x^3)
    CHECK(matrix_of<Rational>(h, lehn_op<Rational>(h), 3) ==
          from_rows({{0, 2, 0}, {6, 0, 6}, {0, 4, 0}}));
}

TEST_CASE("cs-operator vanishes on weight 1") {
    // the merge/split terms need two parts, and the canonical class is zero
    FrobeniusAlgebra t = torus_algebra();
    CHECK(matrix_of<Rational>(t, lehn_op<Rational>(t), 1).is_zero_matrix());
    CHECK_FALSE(matrix_of<Rational>(t, lehn_op<Rational>(t), 2).is_zero_matrix());
}

TEST_CASE("creation operators need a parity-homogeneous class") {
    FrobeniusAlgebra t = torus_algebra();
    AlgElement<Rational> mixed = unit_element<Rational>(t);
    mixed[1] = Rational(1);  // 1 + a mixes parities
    CHECK_THROWS_AS(mul_op<Rational>(t, mixed, 1), input_error);
}

TEST_CASE("operator bookkeeping: shifts and parities") {
    FrobeniusAlgebra t = torus_algebra();
    AlgElement<Rational> ea = zero_element<Rational>(t);
    ea[1] = Rational(1);
    GradedOperator<Rational> pa = mul_op<Rational>(t, ea, 1);
    CHECK(pa.shift == 1);
    CHECK(pa.parity == 1);
    GradedOperator<Rational> sq = op_compose(pa, pa);
    CHECK(sq.shift == 2);
    CHECK(sq.parity == 0);
    // odd creation squares to zero
    CHECK(matrix_of(sq, FockBasis::build(t, 0), FockBasis::build(t, 2)).is_zero_matrix());
    CHECK_THROWS_AS(op_add(pa, mul_op<Rational>(t, ea, 2)), internal_error);
}
