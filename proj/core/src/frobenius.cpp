#include "hilb/frobenius.hpp"

#include <sstream>

namespace hilb {

namespace {

std::string idx2(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

void FrobeniusAlgebra::validate() const {
    if (dim <= 0) throw input_error("algebra dimension must be positive");
    if (static_cast<int>(labels.size()) != dim) throw input_error("labels size != dim");
    if (static_cast<int>(degrees.size()) != dim) throw input_error("degrees size != dim");
    if (static_cast<int>(canonical.size()) != dim) throw input_error("K size != dim");
    if (mul_table.size() != static_cast<size_t>(dim) * dim * dim)
        throw input_error("multiplication table size != dim^3");
    if (unit < 0 || unit >= dim) throw input_error("unit index out of range");
    for (int d : degrees)
        if (d < 0) throw input_error("negative cohomological degree");

    // unit: 1 * a = a
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            if (mul_coeff(unit, j, k) != Rational(j == k ? 1 : 0))
                throw input_error("unit axiom fails at basis index " + std::to_string(j));

    // supercommutativity: ab = (-1)^{|a||b|} ba
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j) {
            int sign = (parity(i) && parity(j)) ? -1 : 1;
            for (int k = 0; k < dim; ++k)
                if (mul_coeff(i, j, k) != Rational(sign) * mul_coeff(j, i, k))
                    throw input_error("supercommutativity fails at pair " + idx2(i, j));
        }

    // associativity on all basis triples
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    Rational lhs(0), rhs(0);
                    for (int m = 0; m < dim; ++m) {
                        lhs += mul_coeff(i, j, m) * mul_coeff(m, k, l);
                        rhs += mul_coeff(j, k, m) * mul_coeff(i, m, l);
                    }
                    if (lhs != rhs)
                        throw input_error("associativity fails at triple (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }

    // degree additivity
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!is_zero(mul_coeff(i, j, k)) && degrees[k] != degrees[i] + degrees[j])
                    throw input_error("degree additivity fails at pair " + idx2(i, j));

    // Delta(1) must be even, and land in the socle degree when declared
    for (const auto& p : coproduct) {
        if (p.left < 0 || p.left >= dim || p.right < 0 || p.right >= dim)
            throw input_error("coproduct pair index out of range");
        if ((parity(p.left) + parity(p.right)) % 2 != 0)
            throw input_error("coproduct element has an odd pair " + idx2(p.left, p.right));
        if (socle_degree && degrees[p.left] + degrees[p.right] != *socle_degree)
            throw input_error("coproduct pair " + idx2(p.left, p.right) +
                              " violates the declared socle degree");
    }

    // bimodule compatibility: (a ox 1) Delta(1) = Delta(1) (1 ox a) in H ox H
    for (int a = 0; a < dim; ++a) {
        std::vector<Rational> lhs(static_cast<size_t>(dim) * dim, Rational(0));
        std::vector<Rational> rhs(static_cast<size_t>(dim) * dim, Rational(0));
        for (const auto& p : coproduct) {
            for (int k = 0; k < dim; ++k) {
                lhs[static_cast<size_t>(k) * dim + p.right] += p.coeff * mul_coeff(a, p.left, k);
                rhs[static_cast<size_t>(p.left) * dim + k] += p.coeff * mul_coeff(p.right, a, k);
            }
        }
        if (lhs != rhs)
            throw input_error("bimodule compatibility fails for basis element " + std::to_string(a));
    }
}

const std::vector<Rational>& FrobeniusAlgebra::euler() const {
    if (!euler_computed_) {
        std::vector<Rational> e(dim, Rational(0));
        for (const auto& p : coproduct)
            for (int k = 0; k < dim; ++k) e[k] += p.coeff * mul_coeff(p.left, p.right, k);
        euler_cache_ = std::move(e);
        euler_computed_ = true;
    }
    return euler_cache_;
}

std::string FrobeniusAlgebra::content_hash() const {
    std::ostringstream os;
    os << dim << '|' << unit << '|';
    for (int d : degrees) os << d << ',';
    os << '|';
    for (const auto& q : mul_table) os << to_string(q) << ',';
    os << '|';
    for (const auto& p : coproduct) os << p.left << ':' << p.right << ':' << to_string(p.coeff) << ',';
    os << '|';
    for (const auto& q : canonical) os << to_string(q) << ',';
    std::string s = os.str();
    unsigned long long hash = 1469598103934665603ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", hash);
    return buf;
}

namespace {

// Rational square root, or nullopt.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(rn, rd);
    }
    return std::nullopt;
}

DegenerationDirection build_direction(const FrobeniusAlgebra& h, const RationalFunction& t) {
    const auto& e = h.euler();
    std::vector<Rational> e2 = {};
    // require e^2 = 0 and e*K = 0
    auto er = lift_element<Rational>(e);
    auto kr = lift_element<Rational>(h.canonical);
    if (!element_is_zero(alg_mul(h, er, er)) || !element_is_zero(alg_mul(h, er, kr))) {
        // constant direction for a 1-dimensional algebra: solve u^2 - Ku - e = 0
        if (h.dim == 1) {
            Rational k0 = h.canonical[0], e0 = e[0];
            auto root = rational_sqrt(k0 * k0 + Rational(4) * e0);
            if (root) {
                Rational u0 = (k0 + *root) / 2;
                if (!is_zero(u0)) {
                    DegenerationDirection dir;
                    dir.k_of_lambda = {RationalFunction(k0)};
                    dir.u_of_lambda = {RationalFunction(u0)};
                    check_degeneration(h, dir);
                    return dir;
                }
            }
        }
        throw input_error("unsupported degeneration: need e^2 = 0 and e*K = 0 "
                          "(supply a custom direction)");
    }
    // (t + K, t + K + e/t)
    DegenerationDirection dir;
    dir.k_of_lambda.assign(h.dim, RationalFunction());
    dir.u_of_lambda.assign(h.dim, RationalFunction());
    for (int c = 0; c < h.dim; ++c) {
        RationalFunction kc(h.canonical[c]);
        if (c == h.unit) kc += t;
        dir.k_of_lambda[c] = kc;
        dir.u_of_lambda[c] = kc + RationalFunction(e[c]) / t;
    }
    check_degeneration(h, dir);
    return dir;
}

} // namespace

DegenerationDirection default_degeneration(const FrobeniusAlgebra& h) {
    return build_direction(h, RationalFunction::lambda());
}

DegenerationDirection squared_degeneration(const FrobeniusAlgebra& h) {
    RationalFunction l = RationalFunction::lambda();
    return build_direction(h, l * l);
}

void check_degeneration(const FrobeniusAlgebra& h, const DegenerationDirection& dir) {
    auto p = element_parity(h, dir.u_of_lambda);
    if (!p || *p != 0) throw input_error("degeneration direction: u is not even");
    auto u_inv = invert_even(h, dir.u_of_lambda);
    auto e = lift_element<RationalFunction>(h.euler());
    auto lhs = alg_mul(h, e, u_inv);
    for (int c = 0; c < h.dim; ++c)
        if (!(dir.u_of_lambda[c] - lhs[c] == dir.k_of_lambda[c]))
            throw internal_error("degeneration direction: u - e u^{-1} != K_lambda at coordinate " +
                                 std::to_string(c));
    // the curve must land on the algebra's K at lambda = 0
    for (int c = 0; c < h.dim; ++c)
        if (dir.k_of_lambda[c].limit_at_zero() != h.canonical[c])
            throw internal_error("degeneration direction: K_lambda(0) != K at coordinate " +
                                 std::to_string(c));
}

} // namespace hilb
