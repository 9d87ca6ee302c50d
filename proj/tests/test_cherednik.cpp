#include "doctest.h"
#include "hilb/algebra_io.hpp"
#include "hilb/cherednik.hpp"

using namespace hilb;

TEST_CASE("deformed derivations commute and satisfy the hecke relation") {
    for (const char* spec : {"point", "plane"}) {
        FrobeniusAlgebra h = resolve_algebra(spec);
        DunklContext<Rational> ctx(h, 2, unit_element<Rational>(h));
        dunkl_commutator_check(ctx, 3);
        hecke_relation_check(ctx, 3);
        energy_sum_check(ctx, 3);
    }
}

TEST_CASE("second-order identity on symmetrized states") {
    FrobeniusAlgebra h = plane_algebra();
    DunklContext<Rational> ctx(h, 2, unit_element<Rational>(h));
    for (const auto& mono : enumerate_window(h, 2, 2)) {
        TensorState<Rational> sym = symmetrize(h, 2, TensorState<Rational>{{mono, Rational(1)}});
        if (is_symmetric(h, sym)) cascomp_square_check(ctx, sym);
    }
}

TEST_CASE("spherical operators only act on symmetric states") {
    FrobeniusAlgebra h = plane_algebra();
    DunklContext<Rational> ctx(h, 2, unit_element<Rational>(h));
    TensorMonomial mono;
    mono.colors = {0, 0};
    mono.exps = {1, 0};
    TensorState<Rational> v{{mono, Rational(1)}};
    REQUIRE_FALSE(is_symmetric(h, v));
    CHECK_THROWS_AS(spherical_apply(ctx, {{unit_element<Rational>(h), 2}}, v), input_error);
    CHECK(is_symmetric(h, symmetrize(h, 2, v)));
}

TEST_CASE("delta-type multiplication reproduces the stirling expansion") {
    // x*x on two sites: coefficient of a monomial with the nilpotent-free
    // class v in a slots is a! * c_a with c_2 = 1, c_1 = t
    FrobeniusAlgebra h = tpoint_algebra(Rational(3));
    AlgElement<Rational> ev = zero_element<Rational>(h);
    ev[1] = Rational(1);
    TensorState<Rational> st = vacuum_state<Rational>(2);
    st = sym_mult(h, ev, 0, st);
    st = sym_mult(h, ev, 0, st);
    for (const auto& [mono, c] : st) {
        int a = 0;
        for (int col : mono.colors)
            if (col == 1) ++a;
        CHECK(c == (a == 2 ? Rational(2) : Rational(3)));
    }
}

TEST_CASE("descent to the weight space round-trips the embedding") {
    FrobeniusAlgebra h = plane_algebra();
    FockDescent desc(h, 2, 3);
    const FockBasis& basis = desc.basis();
    for (int j = 0; j < basis.size(); ++j) {
        TensorState<Rational> v = embed_fock<Rational>(h, basis.monomials[j], 3);
        std::vector<Rational> col = fock_coords(basis, desc.project(v));
        for (int i = 0; i < basis.size(); ++i) CHECK(col[i] == Rational(i == j ? 1 : 0));
    }
}
