#pragma once

#include "hilb/cherednik.hpp"
#include "hilb/heisenberg.hpp"

namespace hilb {

// --- twisting ---------------------------------------------------------------

// Matrix of the algebra endomorphism sending each creation generator
// P(c x^m) to P((u c) x^m), restricted to one weight space. Block diagonal in
// the partition shape; invertible iff u is.
template <class K>
Matrix<K> twist_matrix(const FrobeniusAlgebra& h, const AlgElement<K>& u,
                       const FockBasis& basis) {
    Matrix<K> m(basis.size(), basis.size());
    for (int j = 0; j < basis.size(); ++j) {
        FockVector<K> v{{FockMonomial{}, K(1)}};
        const auto& parts = basis.monomials[j].parts;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            AlgElement<K> elem = zero_element<K>(h);
            elem[it->color] = K(1);
            v = fock_multiply(h, creation_vector(h, alg_mul(h, u, elem), it->m), v);
        }
        auto col = fock_coords(basis, v);
        for (int i = 0; i < basis.size(); ++i) m(i, j) = col[i];
    }
    return m;
}

// Conjugation by the twist: Phi_u M Phi_u^{-1}.
template <class K>
Matrix<K> twist_conjugate(const FrobeniusAlgebra& h, const AlgElement<K>& u,
                          const Matrix<K>& m, const FockBasis& basis) {
    Matrix<K> phi = twist_matrix(h, u, basis);
    auto inv = inverse(phi);
    if (!inv) throw input_error("twist: u is not invertible");
    return phi * m * (*inv);
}

// --- spherical route --------------------------------------------------------

// One generator of the spherical family: the class multiplying y^power.
template <class K>
struct SphericalTerm {
    AlgElement<K> coeff;
    int power = 1;
};

// Matrix on the weight space of desc of the transported operator
//   Phi_u ( sum_i P(h y(u^2)^k) - correction ) Phi_u^{-1},
// where the correction removes, for each quadratic term, the square of the
// constant part of the Dunkl operators (the vacuum energy); with it the
// quadratic generator lands exactly on the Calogero-Sutherland operator.
template <class K>
Matrix<K> transported_spherical(const FrobeniusAlgebra& h, const FockDescent& desc,
                                const AlgElement<K>& u,
                                const std::vector<SphericalTerm<K>>& poly,
                                bool vacuum_normalize = true) {
    DunklContext<K> ctx(h, desc.particles(), alg_mul(h, u, u));
    const FockBasis& basis = desc.basis();
    std::vector<std::pair<AlgElement<K>, int>> terms;
    for (const auto& t : poly) terms.emplace_back(t.coeff, t.power);
    Matrix<K> m(basis.size(), basis.size());
    for (int j = 0; j < basis.size(); ++j) {
        TensorState<K> v = embed_fock<K>(h, basis.monomials[j], desc.particles());
        TensorState<K> img = spherical_apply(ctx, terms, v);
        if (vacuum_normalize)
            for (const auto& t : poly) {
                if (t.power < 2) continue;
                for (const auto& [mono, c] : dunkl_constant_power(ctx, t.coeff, t.power, v))
                    tensor_add_term(img, mono, -c);
            }
        auto col = fock_coords(basis, desc.project(img));
        for (int i = 0; i < basis.size(); ++i) m(i, j) = col[i];
    }
    return twist_conjugate(h, u, m, basis);
}

// The cross-check tying every sign convention together: the transported
// quadratic spherical operator at twist u must equal the Fock-side operator
// with first-order class u - e u^{-1}, exactly.
template <class K>
void cts_cross_check(const FrobeniusAlgebra& h, const AlgElement<K>& u, int n, int N) {
    AlgElement<K> kclass = u;
    AlgElement<K> corr = alg_mul(h, lift_element<K>(h.euler()), invert_even(h, u));
    for (int c = 0; c < h.dim; ++c) kclass[c] -= corr[c];
    Matrix<K> lhs = matrix_of<K>(h, lehn_op<K>(h, kclass), n);
    FockDescent desc(h, n, N);
    Matrix<K> rhs = transported_spherical<K>(h, desc, u, {{u, 2}});
    if (!(lhs == rhs))
        throw verification_error("spherical transport mismatch at weight " + std::to_string(n) +
                                 ", " + std::to_string(N) + " particles");
}

// Entrywise limit of a RationalFunction matrix; a pole is an internal error
// (the degeneration limit is a theorem for the operators passed here).
inline Matrix<Rational> limit_matrix(const Matrix<RationalFunction>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).limit_at_zero();
    return out;
}

// Integrals-of-motion generator on one weight space via the degeneration
// route: transported spherical operator over RationalFunction, then the
// exact limit at lambda = 0.
inline Matrix<Rational> im_spherical(const FrobeniusAlgebra& h, const FockDescent& desc,
                                     const DegenerationDirection& dir,
                                     const std::vector<SphericalTerm<RationalFunction>>& poly,
                                     bool vacuum_normalize = true) {
    return limit_matrix(transported_spherical<RationalFunction>(h, desc, dir.u_of_lambda, poly,
                                                                vacuum_normalize));
}

// The spherical generating family on one weight space: P(u^{k-1} b_c y^k) for
// every basis class and 1 <= k <= kmax, computed along a degeneration
// direction. The u^{k-1} weight is what makes each generator's limit finite;
// k <= 2 already generates the full multiplication algebra on the tested
// weight spaces.
inline std::vector<Matrix<Rational>> spherical_route_ops(const FrobeniusAlgebra& h,
                                                         const FockDescent& desc,
                                                         const DegenerationDirection& dir,
                                                         int kmax = 2) {
    std::vector<Matrix<Rational>> ops;
    for (int c = 0; c < h.dim; ++c)
        for (int k = 1; k <= kmax; ++k) {
            AlgElement<RationalFunction> elem = zero_element<RationalFunction>(h);
            elem[c] = RationalFunction(Rational(1));
            for (int q = 1; q < k; ++q) elem = alg_mul(h, elem, dir.u_of_lambda);
            ops.push_back(im_spherical(h, desc, dir, {{elem, k}}));
        }
    return ops;
}

// --- weight-block operator calculus ----------------------------------------

// An operator stored as explicit matrices on the weight spaces 0..nmax;
// blocks[n] maps weight n to weight n + shift.
template <class K>
struct BlockOp {
    int shift = 0;
    int parity = 0;
    std::vector<Matrix<K>> blocks;

    int nmax() const { return static_cast<int>(blocks.size()) - 1; }
    bool vanishes() const {
        for (const auto& b : blocks)
            if (!b.is_zero_matrix()) return false;
        return true;
    }
};

template <class K>
BlockOp<K> block_of(const FrobeniusAlgebra& h, const GradedOperator<K>& op, int nmax) {
    BlockOp<K> b{op.shift, op.parity, {}};
    for (int n = 0; n <= nmax; ++n) b.blocks.push_back(matrix_of<K>(h, op, n));
    return b;
}

template <class K>
BlockOp<K> block_compose(const BlockOp<K>& a, const BlockOp<K>& b) {
    BlockOp<K> c{a.shift + b.shift, (a.parity + b.parity) & 1, {}};
    int top = std::min(b.nmax(), a.nmax() - b.shift);
    for (int n = 0; n <= top; ++n) c.blocks.push_back(a.blocks[n + b.shift] * b.blocks[n]);
    return c;
}

template <class K>
BlockOp<K> block_add(const BlockOp<K>& a, const BlockOp<K>& b) {
    if (a.shift != b.shift || a.parity != b.parity)
        throw internal_error("block sum of incompatible operators");
    BlockOp<K> c{a.shift, a.parity, {}};
    int top = std::min(a.nmax(), b.nmax());
    for (int n = 0; n <= top; ++n) c.blocks.push_back(a.blocks[n] + b.blocks[n]);
    return c;
}

template <class K>
BlockOp<K> block_scale(const K& s, const BlockOp<K>& a) {
    BlockOp<K> c = a;
    for (auto& b : c.blocks) b = s * b;
    return c;
}

// Super-commutator [a, b] = ab - (-1)^{|a||b|} ba.
template <class K>
BlockOp<K> block_bracket(const BlockOp<K>& a, const BlockOp<K>& b) {
    BlockOp<K> ab = block_compose(a, b);
    BlockOp<K> ba = block_compose(b, a);
    K sign = (a.parity && b.parity) ? K(1) : K(-1);
    return block_add(ab, block_scale(sign, ba));
}

// --- Chern-character operators ----------------------------------------------

namespace detail {

template <class K>
BlockOp<K> iterated_ad(const BlockOp<K>& l, BlockOp<K> x, int times) {
    for (int s = 0; s < times; ++s) x = block_bracket(l, x);
    return x;
}

} // namespace detail

// The operator of cup product with the degree-i tautological characteristic
// class of h, built on weight spaces 0..nmax by the commutator recursion:
//   D(vac) = 0,   C_1(h') = (ad L)^i P((h h') x),
//   C_{m+1}(h') = (1/2m) ( [[D,B], P(h' x^m)] + [B, C_m(h')] ),
// with B = [L, P(x)] and [D,B] = (ad L)^{i+1} P(h x), and
//   D(P(h' x^m) w) = C_m(h') w + (-1)^{|h||h'|} P(h' x^m) D(w).
// Well-definedness across decompositions is asserted by re-deriving every
// column from a second peeling.
template <class K>
BlockOp<K> chern_block(const FrobeniusAlgebra& h, const AlgElement<K>& kclass, int i,
                       const AlgElement<K>& helem, int nmax) {
    auto hp = element_parity(h, helem);
    if (!hp) throw input_error("chern operator needs a homogeneous class");
    // block truncation: ad L consumes one level of margin in total and each
    // recursion step one more, so C_m stays valid up to source nmax - m
    const int margin = nmax;
    BlockOp<K> L = block_of(h, lehn_op<K>(h, kclass), margin);
    BlockOp<K> B = block_bracket(L, block_of(h, mul_op<K>(h, unit_element<K>(h), 1), margin));
    BlockOp<K> DB =
        detail::iterated_ad(L, block_of(h, mul_op<K>(h, helem, 1), margin), i + 1);

    // C_m per basis color, m = 1..nmax
    std::vector<std::vector<BlockOp<K>>> cm(h.dim);
    for (int c = 0; c < h.dim; ++c) {
        AlgElement<K> ec = zero_element<K>(h);
        ec[c] = K(1);
        BlockOp<K> c1 = detail::iterated_ad(
            L, block_of(h, mul_op<K>(h, alg_mul(h, helem, ec), 1), margin), i);
        // a vanishing product still carries the parity of the bracket it seeds
        c1.parity = (*hp + h.parity(c)) & 1;
        cm[c].push_back(std::move(c1));
        for (int m = 1; m < nmax; ++m) {
            BlockOp<K> pm = block_of(h, mul_op<K>(h, ec, m), margin);
            BlockOp<K> next = block_add(block_bracket(DB, pm), block_bracket(B, cm[c].back()));
            cm[c].push_back(block_scale(K(Rational(1, 2 * m)), next));
        }
    }

    std::vector<FockBasis> bases;
    for (int n = 0; n <= nmax; ++n) bases.push_back(FockBasis::build(h, n));
    BlockOp<K> d{0, *hp, {}};
    d.blocks.push_back(Matrix<K>(1, 1));
    for (int n = 1; n <= nmax; ++n) {
        const FockBasis& basis = bases[n];
        Matrix<K> blk(basis.size(), basis.size());
        auto column = [&](const FockMonomial& mono, size_t peel) -> std::vector<K> {
            FockPart p = mono.parts[peel];
            FockMonomial rest;
            for (size_t q = 0; q < mono.parts.size(); ++q)
                if (q != peel) rest.parts.push_back(mono.parts[q]);
            FockMonomial merged;
            int sign = 1;
            if (!fock_merge(h, FockMonomial{{p}}, rest, merged, sign) || !(merged == mono))
                throw internal_error("chern recursion: inconsistent peeling");
            const FockBasis& sub = bases[n - p.m];
            std::vector<K> w(sub.size(), K(0));
            w[sub.index.at(rest)] = K(sign);
            std::vector<K> col = cm[p.color][p.m - 1].blocks[n - p.m].apply(w);
            std::vector<K> dv = d.blocks[n - p.m].apply(w);
            bool flip = false;
            for (const auto& q : dv)
                if (!is_zero(q)) { flip = true; break; }
            if (flip) {
                AlgElement<K> ec = zero_element<K>(h);
                ec[p.color] = K(1);
                Matrix<K> pm = matrix_of(mul_op<K>(h, ec, p.m), sub, basis);
                std::vector<K> tail = pm.apply(dv);
                K s = (*hp && h.parity(p.color)) ? K(-1) : K(1);
                for (int r = 0; r < basis.size(); ++r) col[r] += s * tail[r];
            }
            return col;
        };
        for (int j = 0; j < basis.size(); ++j) {
            const FockMonomial& mono = basis.monomials[j];
            std::vector<K> col = column(mono, 0);
            if (mono.parts.size() > 1 && !(column(mono, mono.parts.size() - 1) == col))
                throw internal_error("chern recursion: peeling-dependent result at weight " +
                                     std::to_string(n));
            for (int r = 0; r < basis.size(); ++r) blk(r, j) = col[r];
        }
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

// --- Chern-operator property checks ------------------------------------------

namespace detail {

template <class K>
void require_vanishes(const BlockOp<K>& d, int upto, const char* what) {
    if (d.nmax() < upto) throw internal_error("block margin too small for check");
    for (int n = 0; n <= upto; ++n)
        if (!d.blocks[n].is_zero_matrix())
            throw verification_error(std::string(what) + " fails at weight " + std::to_string(n));
}

} // namespace detail

// [D, L] = 0 on weights 0..nmax.
template <class K>
void chern_lehn_commute_check(const FrobeniusAlgebra& h, const AlgElement<K>& kclass, int i,
                              const AlgElement<K>& helem, int nmax) {
    BlockOp<K> d = chern_block<K>(h, kclass, i, helem, nmax);
    BlockOp<K> l = block_of(h, lehn_op<K>(h, kclass), nmax);
    detail::require_vanishes(block_bracket(d, l), nmax, "[chern, cs-operator] = 0");
}

// [D, P(h'x)] = (ad L)^i P((h h') x) on weights 0..nmax, for every basis h'.
template <class K>
void chern_defining_check(const FrobeniusAlgebra& h, const AlgElement<K>& kclass, int i,
                          const AlgElement<K>& helem, int nmax) {
    const int margin = nmax + 1;
    BlockOp<K> d = chern_block<K>(h, kclass, i, helem, margin);
    BlockOp<K> l = block_of(h, lehn_op<K>(h, kclass), margin);
    for (int c = 0; c < h.dim; ++c) {
        AlgElement<K> ec = zero_element<K>(h);
        ec[c] = K(1);
        BlockOp<K> lhs = block_bracket(d, block_of(h, mul_op<K>(h, ec, 1), margin));
        BlockOp<K> rhs = detail::iterated_ad(
            l, block_of(h, mul_op<K>(h, alg_mul(h, helem, ec), 1), margin), i);
        rhs.parity = lhs.parity;
        detail::require_vanishes(block_add(lhs, block_scale(K(-1), rhs)), nmax,
                                 "chern defining bracket");
    }
}

// [chern_i(h1), chern_j(h2)] = 0 on weights 0..nmax.
template <class K>
void chern_pairwise_check(const FrobeniusAlgebra& h, const AlgElement<K>& kclass, int i,
                          const AlgElement<K>& h1, int j, const AlgElement<K>& h2, int nmax) {
    BlockOp<K> a = chern_block<K>(h, kclass, i, h1, nmax);
    BlockOp<K> b = chern_block<K>(h, kclass, j, h2, nmax);
    detail::require_vanishes(block_bracket(a, b), nmax, "chern pairwise commutativity");
}

// Differential-order bound: the (i+2)-fold iterated bracket with creation
// operators P(a_q x^{m_q}) vanishes.
template <class K>
void chern_order_check(const FrobeniusAlgebra& h, const AlgElement<K>& kclass, int i,
                       const AlgElement<K>& helem,
                       const std::vector<std::pair<AlgElement<K>, int>>& muls, int nmax) {
    if (static_cast<int>(muls.size()) != i + 2)
        throw internal_error("order check needs i+2 creation operators");
    int total = 0;
    for (const auto& [a, m] : muls) total += m;
    const int margin = nmax + total;
    BlockOp<K> d = chern_block<K>(h, kclass, i, helem, margin);
    for (const auto& [a, m] : muls) d = block_bracket(d, block_of(h, mul_op<K>(h, a, m), margin));
    detail::require_vanishes(d, nmax, "chern differential-order bound");
}

// Top symbol: the (i+1)-fold iterated bracket with P(a_q x^{m_q}) is the
// creation operator (2^i/(i+1)) (i+1)! (prod m_q) P((h prod a_q) x^{sum m_q}).
template <class K>
void chern_symbol_check(const FrobeniusAlgebra& h, const AlgElement<K>& kclass, int i,
                        const AlgElement<K>& helem,
                        const std::vector<std::pair<AlgElement<K>, int>>& muls, int nmax) {
    if (static_cast<int>(muls.size()) != i + 1)
        throw internal_error("symbol check needs i+1 creation operators");
    int total = 0;
    AlgElement<K> prod = helem;
    Rational coeff = Rational(1 << i) / Rational(i + 1);
    for (int q = 2; q <= i + 1; ++q) coeff *= q;
    for (const auto& [a, m] : muls) {
        total += m;
        prod = alg_mul(h, prod, a);
        coeff *= m;
    }
    const int margin = nmax + total;
    BlockOp<K> d = chern_block<K>(h, kclass, i, helem, margin);
    for (const auto& [a, m] : muls) d = block_bracket(d, block_of(h, mul_op<K>(h, a, m), margin));
    if (element_is_zero(prod)) {
        detail::require_vanishes(d, nmax, "chern top symbol");
        return;
    }
    BlockOp<K> expect = block_scale(scalar_traits<K>::from_rational(coeff),
                                    block_of(h, mul_op<K>(h, prod, total), margin));
    detail::require_vanishes(block_add(d, block_scale(K(-1), expect)), nmax, "chern top symbol");
}

// --- route generators ---------------------------------------------------------

// Cup-product operators on one weight space coming from the commutator
// recursion: degree-i characteristic classes of every basis color, i <= imax.
template <class K>
std::vector<Matrix<K>> chern_route_ops(const FrobeniusAlgebra& h, const AlgElement<K>& kclass,
                                       int imax, int n) {
    std::vector<Matrix<K>> ops;
    for (int i = 0; i <= imax; ++i)
        for (int c = 0; c < h.dim; ++c) {
            AlgElement<K> ec = zero_element<K>(h);
            ec[c] = K(1);
            ops.push_back(chern_block<K>(h, kclass, i, ec, n).blocks[n]);
        }
    return ops;
}

// --- generated-algebra span calculus ----------------------------------------

// Exact span of a set of matrices inside End of one weight space, closed
// under products (i.e. the unital algebra they generate). Matrices are
// vectorized and reduced incrementally.
template <class K>
class MatrixSpan {
public:
    explicit MatrixSpan(int dim) : dim_(dim) {}

    // returns true if the matrix enlarged the span
    bool insert(const Matrix<K>& m) {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw internal_error("span insert: wrong ambient dimension");
        std::vector<K> v = m.data();
        for (const auto& [piv, row] : rows_) {
            if (is_zero(v[piv])) continue;
            K f = v[piv];
            for (size_t q = 0; q < v.size(); ++q) v[q] -= f * row[q];
        }
        int piv = -1;
        for (size_t q = 0; q < v.size(); ++q)
            if (!is_zero(v[q])) { piv = static_cast<int>(q); break; }
        if (piv < 0) return false;
        K inv = K(1) / v[piv];
        for (auto& q : v) q *= inv;
        rows_.emplace_back(piv, std::move(v));
        basis_.push_back(m);
        return true;
    }

    bool contains(const Matrix<K>& m) const {
        std::vector<K> v = m.data();
        for (const auto& [piv, row] : rows_) {
            if (is_zero(v[piv])) continue;
            K f = v[piv];
            for (size_t q = 0; q < v.size(); ++q) v[q] -= f * row[q];
        }
        for (const auto& q : v)
            if (!is_zero(q)) return false;
        return true;
    }

    int dimension() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return dim_; }
    const std::vector<Matrix<K>>& basis() const { return basis_; }

private:
    int dim_;
    std::vector<std::pair<int, std::vector<K>>> rows_;
    std::vector<Matrix<K>> basis_;
};

// Unital algebra generated by ops: close the span under products until it
// stabilizes.
template <class K>
MatrixSpan<K> algebra_span(const std::vector<Matrix<K>>& ops, int dim) {
    MatrixSpan<K> span(dim);
    span.insert(Matrix<K>::identity(dim));
    for (const auto& m : ops) span.insert(m);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Matrix<K>> current = span.basis();
        for (const auto& a : current)
            for (const auto& g : ops)
                if (span.insert(a * g)) grew = true;
    }
    return span;
}

template <class K>
bool spans_equal(const MatrixSpan<K>& a, const MatrixSpan<K>& b) {
    if (a.dimension() != b.dimension() || a.ambient() != b.ambient()) return false;
    for (const auto& m : b.basis())
        if (!a.contains(m)) return false;
    return true;
}

} // namespace hilb
