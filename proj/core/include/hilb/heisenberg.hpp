#pragma once

#include <functional>

#include "hilb/fock.hpp"

namespace hilb {

// Linear operator on the Fock space, homogeneous of a fixed weight shift and
// cohomological parity. Acts monomial-by-monomial through a closure.
template <class K>
struct GradedOperator {
    int shift = 0;
    int parity = 0;
    std::function<FockVector<K>(const FockMonomial&)> act;

    FockVector<K> apply(const FockVector<K>& v) const {
        FockVector<K> out;
        for (const auto& [mono, c] : v)
            for (const auto& [m2, c2] : act(mono)) fock_add_term(out, m2, c * c2);
        return out;
    }
};

template <class K>
GradedOperator<K> op_zero() {
    return {0, 0, [](const FockMonomial&) { return FockVector<K>{}; }};
}

template <class K>
GradedOperator<K> op_compose(const GradedOperator<K>& a, const GradedOperator<K>& b) {
    return {a.shift + b.shift, (a.parity + b.parity) & 1,
            [a, b](const FockMonomial& mono) { return a.apply(b.act(mono)); }};
}

template <class K>
GradedOperator<K> op_add(const GradedOperator<K>& a, const GradedOperator<K>& b) {
    if (a.shift != b.shift) throw internal_error("adding operators of different weight shifts");
    if (a.parity != b.parity) throw internal_error("adding operators of different parities");
    return {a.shift, a.parity,
            [a, b](const FockMonomial& mono) { return fock_add(a.act(mono), b.act(mono)); }};
}

template <class K>
GradedOperator<K> op_scale(const K& s, const GradedOperator<K>& a) {
    return {a.shift, a.parity,
            [s, a](const FockMonomial& mono) { return fock_scale(s, a.act(mono)); }};
}

// Super-commutator [a, b] = ab - (-1)^{|a||b|} ba.
template <class K>
GradedOperator<K> op_bracket(const GradedOperator<K>& a, const GradedOperator<K>& b) {
    int sign = (a.parity && b.parity) ? -1 : 1;
    return {a.shift + b.shift, (a.parity + b.parity) & 1, [a, b, sign](const FockMonomial& mono) {
                FockVector<K> out = a.apply(b.act(mono));
                for (const auto& [m2, c2] : b.apply(a.act(mono)))
                    fock_add_term(out, m2, sign < 0 ? c2 : -c2);
                return out;
            }};
}

// The Fock element with one part (m, c) per color, weighted by elem.
template <class K>
FockVector<K> creation_vector(const FrobeniusAlgebra& h, const AlgElement<K>& elem, int m) {
    FockVector<K> out;
    for (int c = 0; c < h.dim; ++c)
        if (!is_zero(elem[c])) out.emplace(FockMonomial{{{m, c}}}, elem[c]);
    return out;
}

// Creation operator: left multiplication by a single part of size m colored
// by elem. Requires elem homogeneous so the operator has a parity.
template <class K>
GradedOperator<K> mul_op(const FrobeniusAlgebra& h, const AlgElement<K>& elem, int m) {
    auto p = element_parity(h, elem);
    if (!p) throw input_error("creation operator needs a homogeneous class");
    FockVector<K> gen = creation_vector(h, elem, m);
    return {m, *p, [&h, gen](const FockMonomial& mono) {
                FockVector<K> w{{mono, K(1)}};
                return fock_multiply(h, gen, w);
            }};
}

// Left multiplication by a fixed Fock vector of pure weight and parity.
template <class K>
GradedOperator<K> mul_by(const FrobeniusAlgebra& h, const FockVector<K>& gen, int shift,
                         int parity) {
    return {shift, parity, [&h, gen](const FockMonomial& mono) {
                FockVector<K> w{{mono, K(1)}};
                return fock_multiply(h, gen, w);
            }};
}

namespace detail {

// D_{c,a} with D(vac) = 0 and
// D(P(c' x^m) w) = m P((e_c e_c') x^{a+m}) w + (-1)^{|c||c'|} P(c' x^m) D(w).
template <class K>
FockVector<K> deriv_apply(const FrobeniusAlgebra& h, int c, int a, const FockMonomial& mono) {
    if (mono.parts.empty()) return {};
    FockPart head = mono.parts.front();
    FockMonomial rest{std::vector<FockPart>(mono.parts.begin() + 1, mono.parts.end())};
    FockVector<K> out;
    // product class e_c * e_{head.color}
    AlgElement<K> prod = zero_element<K>(h);
    for (int k = 0; k < h.dim; ++k) {
        const Rational& q = h.mul_coeff(c, head.color, k);
        if (!is_zero(q)) prod[k] = scalar_traits<K>::from_rational(q);
    }
    if (!element_is_zero(prod)) {
        FockVector<K> restv{{rest, K(head.m)}};
        out = fock_multiply(h, creation_vector(h, prod, a + head.m), restv);
    }
    FockVector<K> tail = deriv_apply<K>(h, c, a, rest);
    if (!tail.empty()) {
        int sign = (h.parity(c) && h.parity(head.color)) ? -1 : 1;
        FockVector<K> headv{{FockMonomial{{head}}, K(sign)}};
        out = fock_add(out, fock_multiply(h, headv, tail));
    }
    return out;
}

} // namespace detail

// Weight-raising derivation attached to basis color c and shift a.
template <class K>
GradedOperator<K> deriv_color_op(const FrobeniusAlgebra& h, int c, int a) {
    return {a, h.parity(c),
            [&h, c, a](const FockMonomial& mono) { return detail::deriv_apply<K>(h, c, a, mono); }};
}

// sum_t kappa_t (-1)^{|b_t||c|} sum_{r=1}^{n-1} P((a_t e_c) x^r) P(b_t x^{n-r}),
// the weight-n correction element built from the coproduct of e_c; the Koszul
// sign comes from commuting e_c past b_t in Delta(e_c) = Delta(1) (e_c ox 1).
template <class K>
FockVector<K> delta_star(const FrobeniusAlgebra& h, int c, int n) {
    FockVector<K> out;
    for (const auto& pair : h.coproduct) {
        AlgElement<K> left = zero_element<K>(h);
        for (int k = 0; k < h.dim; ++k) {
            const Rational& q = h.mul_coeff(pair.left, c, k);
            if (!is_zero(q)) left[k] = scalar_traits<K>::from_rational(q);
        }
        if (element_is_zero(left)) continue;
        AlgElement<K> right = zero_element<K>(h);
        right[pair.right] = K(1);
        K kappa = scalar_traits<K>::from_rational(pair.coeff);
        if (h.parity(pair.right) && h.parity(c)) kappa = -kappa;
        for (int r = 1; r <= n - 1; ++r) {
            FockVector<K> term = fock_multiply(h, creation_vector(h, left, r),
                                               creation_vector(h, right, n - r));
            for (const auto& [m2, c2] : term) fock_add_term(out, m2, kappa * c2);
        }
    }
    return out;
}

namespace detail {

// L(vac) = 0 and, peeling the leading part P(c x^m),
// L(P(c x^m) w) = [2m D_{c,m} + m^2 P((k e_c) x^m) + m (delta_*)_{c,m}](w)
//                 + P(c x^m) L(w).
template <class K>
FockVector<K> lehn_apply(const FrobeniusAlgebra& h, const AlgElement<K>& kclass,
                         const FockMonomial& mono) {
    if (mono.parts.empty()) return {};
    FockPart head = mono.parts.front();
    FockMonomial rest{std::vector<FockPart>(mono.parts.begin() + 1, mono.parts.end())};
    const int m = head.m;
    const int c = head.color;

    FockVector<K> out = fock_scale(K(2 * m), deriv_apply<K>(h, c, m, rest));

    AlgElement<K> ec = zero_element<K>(h);
    ec[c] = K(1);
    AlgElement<K> kc = alg_mul(h, kclass, ec);
    if (!element_is_zero(kc)) {
        FockVector<K> restv{{rest, K(m * m)}};
        out = fock_add(out, fock_multiply(h, creation_vector(h, kc, m), restv));
    }

    FockVector<K> ds = delta_star<K>(h, c, m);
    if (!ds.empty()) {
        FockVector<K> restv{{rest, K(m)}};
        out = fock_add(out, fock_multiply(h, ds, restv));
    }

    FockVector<K> tail = lehn_apply<K>(h, kclass, rest);
    if (!tail.empty()) {
        FockVector<K> headv{{FockMonomial{{head}}, K(1)}};
        out = fock_add(out, fock_multiply(h, headv, tail));
    }
    return out;
}

} // namespace detail

// Weight-preserving Calogero-Sutherland-type operator attached to the
// algebra and a choice of first-order correction class (defaults to K).
template <class K>
GradedOperator<K> lehn_op(const FrobeniusAlgebra& h, const AlgElement<K>& kclass) {
    return {0, 0, [&h, kclass](const FockMonomial& mono) {
                return detail::lehn_apply<K>(h, kclass, mono);
            }};
}

template <class K>
GradedOperator<K> lehn_op(const FrobeniusAlgebra& h) {
    return lehn_op<K>(h, lift_element<K>(h.canonical));
}

// Matrix of op restricted to the weight-n space (columns) mapping into the
// weight-(n + shift) space (rows).
template <class K>
Matrix<K> matrix_of(const GradedOperator<K>& op, const FockBasis& in, const FockBasis& out) {
    Matrix<K> m(out.size(), in.size());
    for (int j = 0; j < in.size(); ++j) {
        std::vector<K> col = fock_coords(out, op.act(in.monomials[j]));
        for (int i = 0; i < out.size(); ++i) m(i, j) = col[i];
    }
    return m;
}

template <class K>
Matrix<K> matrix_of(const FrobeniusAlgebra& h, const GradedOperator<K>& op, int n) {
    FockBasis in = FockBasis::build(h, n);
    FockBasis out = FockBasis::build(h, n + op.shift);
    return matrix_of(op, in, out);
}

} // namespace hilb
