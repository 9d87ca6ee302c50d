#include "doctest.h"
#include "hilb/algebra_io.hpp"
#include "hilb/fock.hpp"

using namespace hilb;

TEST_CASE("weight-space dimensions match the frozen sequences") {
    struct Case {
        const char* spec;
        std::vector<long> dims;
    };
    // colored-partition counts for n = 0..7
    const Case cases[] = {
        {"point", {1, 1, 2, 3, 5, 7, 11, 15}},
        {"plane", {1, 3, 9, 22, 51, 108, 221, 429}},
        {"torus", {1, 4, 12, 32, 76, 168, 352, 704}},
    };
    for (const auto& c : cases) {
        FrobeniusAlgebra h = resolve_algebra(c.spec);
        for (size_t n = 0; n < c.dims.size(); ++n) {
            CHECK(enumerate_basis(h, static_cast<int>(n)).size() == static_cast<size_t>(c.dims[n]));
            CHECK(fock_dimension(h, static_cast<int>(n)) == c.dims[n]);
        }
    }
}

TEST_CASE("cohomological degree of monomials") {
    FrobeniusAlgebra p = plane_algebra();
    FockMonomial m{{{2, 1}, {1, 2}}};  // P(h x^2) P(h^2 x)
    CHECK(cohomological_degree(p, m) == (2 + 2) + (4 + 0));
}

TEST_CASE("koszul signs in the monomial product") {
    FrobeniusAlgebra t = torus_algebra();
    FockMonomial a{{{1, 1}}}, b{{{1, 2}}};  // P(a x), P(b x)
    FockMonomial ab, ba;
    int sab = 1, sba = 1;
    REQUIRE(fock_merge(t, a, b, ab, sab));
    REQUIRE(fock_merge(t, b, a, ba, sba));
    CHECK(ab == ba);
    CHECK(sab == -sba);
    // an odd part may not repeat
    FockMonomial sq;
    int s = 1;
    CHECK_FALSE(fock_merge(t, a, a, sq, s));
}

TEST_CASE("coordinates reject vectors outside the weight space") {
    FrobeniusAlgebra p = plane_algebra();
    FockBasis basis = FockBasis::build(p, 2);
    FockVector<Rational> v{{FockMonomial{{{3, 0}}}, Rational(1)}};
    CHECK_THROWS_AS(fock_coords(basis, v), internal_error);
}
