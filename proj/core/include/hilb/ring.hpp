#pragma once

#include "hilb/heisenberg.hpp"
#include "hilb/integrals.hpp"

namespace hilb {

// Parity of a basis monomial: sum of its color parities.
inline int monomial_parity(const FrobeniusAlgebra& h, const FockMonomial& mono) {
    int p = 0;
    for (const auto& part : mono.parts) p ^= h.parity(part.color);
    return p;
}

// Grading compatible with the cup product: a part (m, c) sits in degree
// deg(c) + (m-1) * socle/2. The weight s = socle/2 is forced by requiring the
// merge, coproduct, and canonical-class terms of the weight-preserving
// operator to shift degree by the same amount; for socle degree 4 this is
// the usual surface formula deg(c) + 2(m-1).
inline int ring_degree(const FrobeniusAlgebra& h, const FockMonomial& mono) {
    int socle = h.socle_degree ? *h.socle_degree
                               : *std::max_element(h.degrees.begin(), h.degrees.end());
    if (socle % 2 != 0) throw input_error("ring grading needs an even socle degree");
    int d = 0;
    for (const auto& part : mono.parts)
        d += h.degrees[part.color] + (part.m - 1) * (socle / 2);
    return d;
}

// The ring unit on the weight-n space: (1/n!) P(1 x)^n applied to the vacuum.
template <class K>
std::vector<K> unit_coords(const FrobeniusAlgebra& h, int n) {
    FockVector<K> v{{FockMonomial{}, K(1)}};
    GradedOperator<K> p1 = mul_op<K>(h, unit_element<K>(h), 1);
    Rational f(1);
    for (int q = 1; q <= n; ++q) {
        v = p1.apply(v);
        f /= q;
    }
    v = fock_scale(scalar_traits<K>::from_rational(f), v);
    return fock_coords(FockBasis::build(h, n), v);
}

// The unique operator M in the span with M(unit) = a; existence and
// uniqueness are what "the span is cyclic on the unit" means.
template <class K>
Matrix<K> mult_matrix(const MatrixSpan<K>& span, const std::vector<K>& unit,
                      const std::vector<K>& a) {
    const auto& basis = span.basis();
    const int dim = span.ambient();
    Matrix<K> sys(dim, static_cast<int>(basis.size()));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        std::vector<K> col = basis[j].apply(unit);
        for (int i = 0; i < dim; ++i) sys(i, j) = col[i];
    }
    SolveResult<K> res = solve(sys, a);
    if (!res.solvable)
        throw verification_error("multiplication algebra is not cyclic on the unit");
    if (!res.unique)
        throw verification_error("multiplication operator is not unique in the span");
    Matrix<K> m(dim, dim);
    for (size_t q = 0; q < basis.size(); ++q)
        if (!is_zero(res.x[q])) m = m + res.x[q] * basis[q];
    return m;
}

// Cup-product structure constants of one weight space in the monomial basis,
// together with the data needed to state the ring axioms.
template <class K>
struct RingTable {
    int n = 0;
    FockBasis basis;
    std::vector<int> degrees;
    std::vector<int> parities;
    std::vector<K> unit;
    // c[i][j] = coordinates of v_i * v_j
    std::vector<std::vector<std::vector<K>>> c;
};

// Extract the table from the multiplication-operator algebra: v_i * v_j =
// M_{v_i}(v_j) where M_{v_i} is the span element sending the unit to v_i.
template <class K>
RingTable<K> structure_constants(const FrobeniusAlgebra& h, const MatrixSpan<K>& span, int n) {
    RingTable<K> t;
    t.n = n;
    t.basis = FockBasis::build(h, n);
    const int dim = t.basis.size();
    if (span.ambient() != dim) throw internal_error("span lives on the wrong weight space");
    if (span.dimension() != dim)
        throw verification_error("multiplication algebra has wrong dimension");
    for (const auto& mono : t.basis.monomials) {
        t.degrees.push_back(ring_degree(h, mono));
        t.parities.push_back(monomial_parity(h, mono));
    }
    t.unit = unit_coords<K>(h, n);
    t.c.assign(dim, std::vector<std::vector<K>>(dim));
    for (int i = 0; i < dim; ++i) {
        std::vector<K> ei(dim, K(0));
        ei[i] = K(1);
        Matrix<K> mi = mult_matrix(span, t.unit, ei);
        for (int j = 0; j < dim; ++j) {
            std::vector<K> ej(dim, K(0));
            ej[j] = K(1);
            t.c[i][j] = mi.apply(ej);
        }
    }
    return t;
}

// The ring axioms, checked exactly; any failure is a verification error.
template <class K>
void check_ring_table(const RingTable<K>& t) {
    const int dim = static_cast<int>(t.c.size());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // supercommutativity
            for (int k = 0; k < dim; ++k) {
                K rhs = t.c[j][i][k];
                if (t.parities[i] && t.parities[j]) rhs = -rhs;
                if (!(t.c[i][j][k] == rhs))
                    throw verification_error("ring table is not supercommutative");
            }
            // degree homogeneity
            for (int k = 0; k < dim; ++k)
                if (!is_zero(t.c[i][j][k]) && t.degrees[k] != t.degrees[i] + t.degrees[j])
                    throw verification_error("ring table is not degree-homogeneous");
        }
    // associativity: (v_i v_j) v_k = v_i (v_j v_k)
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int m = 0; m < dim; ++m) {
                    K lhs(0), rhs(0);
                    for (int l = 0; l < dim; ++l) {
                        lhs += t.c[i][j][l] * t.c[l][k][m];
                        rhs += t.c[j][k][l] * t.c[i][l][m];
                    }
                    if (!(lhs == rhs)) throw verification_error("ring table is not associative");
                }
    // connectivity: when the grading is nontrivial, the degree-0 piece is
    // spanned by the unit alone
    int deg0 = 0, degpos = 0;
    for (int k = 0; k < dim; ++k)
        (t.degrees[k] == 0 ? deg0 : degpos) += 1;
    if (degpos > 0 && deg0 != 1)
        throw verification_error("degree-0 piece is not one-dimensional");
    // the unit vector acts as the identity
    for (int i = 0; i < dim; ++i) {
        std::vector<K> prod(dim, K(0));
        for (int l = 0; l < dim; ++l)
            if (!is_zero(t.unit[l]))
                for (int m = 0; m < dim; ++m) prod[m] += t.unit[l] * t.c[l][i][m];
        for (int m = 0; m < dim; ++m)
            if (!(prod[m] == (m == i ? K(1) : K(0))))
                throw verification_error("ring unit is not the identity");
    }
}

// The weight-1 ring must reproduce the coefficient algebra itself.
template <class K>
void check_weight_one_table(const FrobeniusAlgebra& h, const RingTable<K>& t) {
    if (t.n != 1 || t.basis.size() != h.dim)
        throw internal_error("weight-one check needs the weight-1 table");
    std::vector<int> color(h.dim);
    for (int i = 0; i < h.dim; ++i) {
        const auto& parts = t.basis.monomials[i].parts;
        if (parts.size() != 1 || parts[0].m != 1)
            throw internal_error("unexpected weight-1 basis monomial");
        color[i] = parts[0].color;
    }
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j)
            for (int k = 0; k < h.dim; ++k) {
                K expect = scalar_traits<K>::from_rational(h.mul_coeff(color[i], color[j], color[k]));
                if (!(t.c[i][j][k] == expect))
                    throw verification_error("weight-1 ring differs from the coefficient algebra");
            }
}

// The Calogero-Sutherland operator is itself a multiplication operator: it
// equals M_{L(unit)} inside the span (cup product with a first Chern class).
template <class K>
void check_lehn_is_multiplication(const FrobeniusAlgebra& h, const MatrixSpan<K>& span,
                                  const RingTable<K>& t) {
    Matrix<K> lehn = matrix_of<K>(h, lehn_op<K>(h), t.n);
    if (!span.contains(lehn))
        throw verification_error("cs-operator does not lie in the multiplication algebra");
    Matrix<K> m = mult_matrix(span, t.unit, lehn.apply(t.unit));
    if (!(m == lehn))
        throw verification_error("cs-operator is not multiplication by its unit image");
}

} // namespace hilb
