#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "hilb/frobenius.hpp"

namespace hilb {

// One creation part: size m >= 1 and a basis color of the coefficient
// algebra.
struct FockPart {
    int m = 1;
    int color = 0;

    friend bool operator==(const FockPart& a, const FockPart& b) {
        return a.m == b.m && a.color == b.color;
    }
    friend auto operator<=>(const FockPart& a, const FockPart& b) = default;
};

// Canonical part order: larger m first, then smaller color.
inline bool part_before(const FockPart& a, const FockPart& b) {
    if (a.m != b.m) return a.m > b.m;
    return a.color < b.color;
}

// Product of creation operators applied to the vacuum, in canonical order
// (m descending, color ascending within equal m). An odd part may not
// repeat; such a monomial is zero and never stored.
struct FockMonomial {
    std::vector<FockPart> parts;

    int total_weight() const {
        int n = 0;
        for (const auto& p : parts) n += p.m;
        return n;
    }

    friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const FockMonomial& a, const FockMonomial& b) {
        return a.parts < b.parts;
    }
};

inline int part_degree(const FrobeniusAlgebra& h, const FockPart& p) {
    return h.degrees[p.color] + 2 * (p.m - 1);
}

inline int cohomological_degree(const FrobeniusAlgebra& h, const FockMonomial& mono) {
    int d = 0;
    for (const auto& p : mono.parts) d += part_degree(h, p);
    return d;
}

// Sparse vector in the Fock space over scalar K.
template <class K>
using FockVector = std::map<FockMonomial, K>;

template <class K, class C>
void fock_add_term(FockVector<K>& v, const FockMonomial& mono, const C& coeff) {
    K cv(coeff);
    if (is_zero(cv)) return;
    auto it = v.find(mono);
    if (it == v.end()) {
        v.emplace(mono, std::move(cv));
    } else {
        it->second += cv;
        if (is_zero(it->second)) v.erase(it);
    }
}

template <class K, class C>
FockVector<K> fock_scale(const C& s, const FockVector<K>& v) {
    FockVector<K> out;
    K sv(s);
    if (is_zero(sv)) return out;
    for (const auto& [mono, c] : v) out.emplace(mono, K(sv * c));
    return out;
}

template <class K>
FockVector<K> fock_add(const FockVector<K>& a, const FockVector<K>& b) {
    FockVector<K> out = a;
    for (const auto& [mono, c] : b) fock_add_term(out, mono, c);
    return out;
}

// Merge two canonical monomials, tracking the Koszul sign from moving odd
// parts past each other. Returns false (zero product) when an odd part
// repeats.
bool fock_merge(const FrobeniusAlgebra& h, const FockMonomial& a, const FockMonomial& b,
                FockMonomial& out, int& sign);

template <class K>
FockVector<K> fock_multiply(const FrobeniusAlgebra& h, const FockVector<K>& a,
                            const FockVector<K>& b) {
    FockVector<K> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            FockMonomial merged;
            int sign = 1;
            if (!fock_merge(h, ma, mb, merged, sign)) continue;
            K c = ca * cb;
            if (sign < 0) c = -c;
            fock_add_term(out, merged, c);
        }
    return out;
}

// Basis of the weight-n subspace, ordered by shape (ascending lex on the
// descending part sizes) and then by ascending color words.
std::vector<FockMonomial> enumerate_basis(const FrobeniusAlgebra& h, int n);

// Indexed basis of one weight space, with monomial -> index lookup.
struct FockBasis {
    std::vector<FockMonomial> monomials;
    std::map<FockMonomial, int> index;

    static FockBasis build(const FrobeniusAlgebra& h, int n) {
        FockBasis b;
        b.monomials = enumerate_basis(h, n);
        for (int i = 0; i < static_cast<int>(b.monomials.size()); ++i)
            b.index.emplace(b.monomials[i], i);
        return b;
    }

    int size() const { return static_cast<int>(b_size()); }

private:
    size_t b_size() const { return monomials.size(); }
};

template <class K>
std::vector<K> fock_coords(const FockBasis& basis, const FockVector<K>& v) {
    std::vector<K> out(basis.monomials.size(), K(0));
    for (const auto& [mono, c] : v) {
        auto it = basis.index.find(mono);
        if (it == basis.index.end())
            throw internal_error("vector leaves the expected weight space");
        out[it->second] = c;
    }
    return out;
}

// Weight-space dimension from the generating series
// prod_m (1+q^m)^{odd} / (1-q^m)^{even}.
mpz_class fock_dimension(const FrobeniusAlgebra& h, int n);

} // namespace hilb
