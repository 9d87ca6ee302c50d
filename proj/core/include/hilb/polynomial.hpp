#pragma once

#include <utility>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

// Dense univariate polynomial in the degeneration parameter, with exact
// rational coefficients. Trailing zeros are always stripped, so the zero
// polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) { coeff_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Rational> coeffs) : coeff_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    const Rational& leading() const { return coeff_.back(); }

    Rational at_zero() const { return coeff_.empty() ? Rational(0) : coeff_.front(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i) c[i] += a.coeff_[i];
        for (size_t i = 0; i < b.coeff_.size(); ++i) c[i] += b.coeff_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i) c[i] += a.coeff_[i];
        for (size_t i = 0; i < b.coeff_.size(); ++i) c[i] -= b.coeff_[i];
        return Poly(std::move(c));
    }
    Poly operator-() const {
        std::vector<Rational> c(coeff_);
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                c[i + j] += a.coeff_[i] * b.coeff_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        std::vector<Rational> c(a.coeff_);
        for (auto& x : c) x *= s;
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeff_ == b.coeff_; }

    // Exact Euclidean division; requires b nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw input_error("polynomial division by zero");
        std::vector<Rational> rem(a.coeff_);
        const int db = b.degree();
        std::vector<Rational> quot;
        if (static_cast<int>(rem.size()) - 1 >= db)
            quot.assign(rem.size() - db, Rational(0));
        for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
            if (hilb::is_zero(rem[d])) continue;
            Rational q = rem[d] / b.coeff_[db];
            quot[d - db] = q;
            for (int i = 0; i <= db; ++i) rem[d - db + i] -= q * b.coeff_[i];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / leading()) * *this;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void trim() {
        while (!coeff_.empty() && hilb::is_zero(coeff_.back())) coeff_.pop_back();
    }

    std::vector<Rational> coeff_;
};

std::string to_string(const Poly& p);

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(c[i])) continue;
        if (!out.empty()) out += " + ";
        out += to_string(c[i]);
        if (i > 0) out += "*L^" + std::to_string(i);
    }
    return out;
}

} // namespace hilb
