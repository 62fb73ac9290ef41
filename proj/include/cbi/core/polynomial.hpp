#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored in ascending degree order with trailing zeros
 * trimmed, so the zero polynomial is the empty vector and equality is
 * coefficient-wise.
 */

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbi/core/rational.hpp"

namespace cbi {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
    explicit Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// The polynomial x.
    static Poly x() { return Poly{Rational(0), Rational(1)}; }
    /// c * x^k.
    static Poly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    /// a*x + b.
    static Poly linear(const Rational& a, const Rational& b) { return Poly{b, a}; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }
    bool is_constant() const { return degree() <= 0; }

    Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= t;
            acc += *it;
        }
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    Poly& operator/=(const Rational& c) {
        if (c.is_zero()) throw DivisionByZero();
        for (auto& v : coeffs_) v /= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    Poly monic() const {
        if (is_zero()) return {};
        return *this / leading();
    }

    /// Coefficients as rational strings, ascending.
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.str());
        return out;
    }
    /// Compact human form "[c0, c1, ...]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += coeffs_[i].str();
        }
        return s + "]";
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over Q.
inline PolyDivision divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    const long dd = den.degree();
    if (num.degree() < dd) return {Poly{}, num};
    std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
    std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd + 1));
    const Rational lead_inv = Rational(1) / den.leading();
    auto dcoef = den.coefficients();
    for (long k = num.degree() - dd; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * dcoef[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// Monic gcd (zero if both inputs are zero). Content-normalized Euclid over Q.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// q(x) = p(a*x + b). Degree is preserved.
inline Poly affine_substitute(const Poly& p, const Rational& a, const Rational& b) {
    if (a.is_zero()) throw InvalidSubstitution("affine substitution with zero slope");
    // Horner in the substituted variable.
    Poly acc;
    const Poly lin = Poly::linear(a, b);
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

/// p(x^2).
inline Poly substitute_square(const Poly& p) {
    std::vector<Rational> out(p.is_zero() ? 0 : 2 * p.coefficients().size() - 1);
    auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) out[2 * i] = c[i];
    return Poly(std::move(out));
}

}  // namespace cbi
