#pragma once

/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions num/den over Q.
 *
 * Normal form: den is monic and gcd(num, den) = 1; zero is 0/1. With this
 * form two rational functions are equal iff their stored data are equal.
 */

#include <string>
#include <utility>

#include "cbi/core/polynomial.hpp"

namespace cbi {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// True iff this is a constant (degree-0 numerator and denominator).
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const { return num_.coeff(0); }

    /// Evaluation; a pole at t is an error, never a silent value.
    Rational operator()(const Rational& t) const {
        Rational d = den_(t);
        if (d.is_zero()) throw DomainError("rational function evaluated at a pole x = " + t.str());
        return num_(t) / d;
    }
    bool has_pole_at(const Rational& t) const { return den_(t).is_zero(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    /// r(a*x + b).
    RatFunc substitute(const Rational& a, const Rational& b) const {
        return RatFunc(affine_substitute(num_, a, b), affine_substitute(den_, a, b));
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return num_.str() + " / " + den_.str();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.degree() > 0) {
            Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).quotient;
                den_ = divmod(den_, g).quotient;
            }
        }
        Rational lead = den_.leading();
        if (lead != Rational(1)) {
            num_ /= lead;
            den_ /= lead;
        }
    }

    Poly num_;
    Poly den_;
};

/// r * p as a polynomial; throws NonPolynomialResult if den(r) does not divide num(r)*p.
inline Poly ratfunc_apply(const RatFunc& r, const Poly& p) {
    Poly prod = r.num() * p;
    if (r.is_polynomial()) return prod / r.den().leading();
    auto [q, rem] = divmod(prod, r.den());
    if (!rem.is_zero()) throw NonPolynomialResult("rational function times polynomial is not a polynomial", rem.str());
    return q;
}

}  // namespace cbi
