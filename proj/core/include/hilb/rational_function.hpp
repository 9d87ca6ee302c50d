#pragma once

#include "hilb/polynomial.hpp"

namespace hilb {

// Exact univariate rational function in the degeneration parameter.
// Canonical form: numerator and denominator coprime, denominator monic and
// nonzero. Equality of values is then equality of representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(int n) : num_(Rational(n)), den_(Rational(1)) {}
    RationalFunction(Rational q) : num_(std::move(q)), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction lambda() { return RationalFunction(Poly::variable(), Poly(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Value at the degeneration point. A pole here means an upstream
    // degeneration-limit failure; the caller treats it as fatal.
    Rational limit_at_zero() const {
        Rational d = den_.at_zero();
        if (hilb::is_zero(d))
            throw internal_error("pole at lambda=0 in " + to_string(num_) + " / " + to_string(den_));
        return num_.at_zero() / d;
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (hilb::is_zero(d)) throw input_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw input_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw input_error("zero denominator in rational function");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_, den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

inline std::string to_string(const RationalFunction& f) {
    if (f.den() == Poly(Rational(1))) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

// Scalar abstraction: every higher module is generic over the coefficient
// field. Rational is the base level; RationalFunction is the degeneration
// level with an exact limit at lambda -> 0.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct scalar_traits<RationalFunction> {
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Rational(1)); }
    static RationalFunction from_rational(const Rational& q) { return RationalFunction(q); }
};

} // namespace hilb
