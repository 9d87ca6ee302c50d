#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/linalg.hpp"
#include "hilb/rational_function.hpp"

namespace hilb {

struct CoproductPair {
    int left = 0;
    int right = 0;
    Rational coeff;
};

// Finite-dimensional graded supercommutative algebra with a distinguished
// coproduct element Delta(1), Euler class e = m(Delta(1)), and canonical
// class K. Immutable after load; validate() checks every structural
// invariant and names the offender.
class FrobeniusAlgebra {
public:
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<int> degrees;          // cohomological degree per basis element
    int unit = 0;
    std::vector<Rational> mul_table;   // dense dim^3: [ (i*dim + j)*dim + k ]
    std::vector<CoproductPair> coproduct;
    std::vector<Rational> canonical;   // coordinates of K
    std::optional<int> socle_degree;

    int parity(int c) const { return degrees[c] & 1; }

    const Rational& mul_coeff(int i, int j, int k) const {
        return mul_table[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    Rational& mul_coeff(int i, int j, int k) {
        return mul_table[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    // Throws input_error naming the violated invariant and the offending
    // basis indices.
    void validate() const;

    // e = m(Delta(1)), cached on first use.
    const std::vector<Rational>& euler() const;

    std::string content_hash() const;

private:
    mutable std::vector<Rational> euler_cache_;
    mutable bool euler_computed_ = false;
};

// Element of H (or of H extended by the degeneration parameter) in basis
// coordinates.
template <class K>
using AlgElement = std::vector<K>;

template <class K>
AlgElement<K> lift_element(const std::vector<Rational>& v) {
    AlgElement<K> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(scalar_traits<K>::from_rational(q));
    return out;
}

template <class K>
AlgElement<K> zero_element(const FrobeniusAlgebra& h) {
    return AlgElement<K>(h.dim, K(0));
}

template <class K>
AlgElement<K> unit_element(const FrobeniusAlgebra& h) {
    AlgElement<K> out(h.dim, K(0));
    out[h.unit] = K(1);
    return out;
}

template <class K>
bool element_is_zero(const AlgElement<K>& a) {
    for (const auto& v : a)
        if (!is_zero(v)) return false;
    return true;
}

template <class K>
AlgElement<K> alg_mul(const FrobeniusAlgebra& h, const AlgElement<K>& a, const AlgElement<K>& b) {
    AlgElement<K> out(h.dim, K(0));
    for (int i = 0; i < h.dim; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < h.dim; ++j) {
            if (is_zero(b[j])) continue;
            K ab = a[i] * b[j];
            for (int k = 0; k < h.dim; ++k) {
                const Rational& c = h.mul_coeff(i, j, k);
                if (!is_zero(c)) out[k] += scalar_traits<K>::from_rational(c) * ab;
            }
        }
    }
    return out;
}

template <class K>
AlgElement<K> alg_add(const AlgElement<K>& a, const AlgElement<K>& b) {
    AlgElement<K> out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

template <class K>
AlgElement<K> alg_scale(const K& s, const AlgElement<K>& a) {
    AlgElement<K> out = a;
    for (auto& v : out) v *= s;
    return out;
}

// Parity of a homogeneous element: 0 even, 1 odd; nullopt if mixed.
// The zero element counts as even.
template <class K>
std::optional<int> element_parity(const FrobeniusAlgebra& h, const AlgElement<K>& a) {
    std::optional<int> p;
    for (int i = 0; i < h.dim; ++i) {
        if (is_zero(a[i])) continue;
        if (!p) p = h.parity(i);
        else if (*p != h.parity(i)) return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
}

// Invert an even element by inverting its multiplication matrix.
template <class K>
AlgElement<K> invert_even(const FrobeniusAlgebra& h, const AlgElement<K>& u) {
    auto p = element_parity(h, u);
    if (!p || *p != 0) throw input_error("invert_even: element is not even");
    Matrix<K> m(h.dim, h.dim);
    for (int j = 0; j < h.dim; ++j) {
        AlgElement<K> bj = zero_element<K>(h);
        bj[j] = K(1);
        AlgElement<K> col = alg_mul(h, u, bj);
        for (int k = 0; k < h.dim; ++k) m(k, j) = col[k];
    }
    auto inv = inverse(m);
    if (!inv) throw input_error("invert_even: element is not invertible");
    std::vector<K> e(h.dim, K(0));
    e[h.unit] = K(1);
    return inv->apply(e);
}

// A curve (K_lambda, u_lambda) with u_lambda - e * u_lambda^{-1} = K_lambda,
// u_lambda invertible away from lambda = 0.
struct DegenerationDirection {
    AlgElement<RationalFunction> k_of_lambda;
    AlgElement<RationalFunction> u_of_lambda;
};

// Default direction: (lambda + K, lambda + K + e/lambda) when e^2 = 0 and
// e*K = 0; for dim-1 algebras a constant direction solving u^2 - Ku - e = 0
// when the discriminant has a rational square root.
DegenerationDirection default_degeneration(const FrobeniusAlgebra& h);

// Second direction for independence tests: lambda replaced by lambda^2.
DegenerationDirection squared_degeneration(const FrobeniusAlgebra& h);

// Checks u - e u^{-1} = K as an identity of RationalFunction elements.
void check_degeneration(const FrobeniusAlgebra& h, const DegenerationDirection& dir);

} // namespace hilb
