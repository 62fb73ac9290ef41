#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers.
 *
 * Thin value type over GMP's mpq_class. Every value is kept canonical:
 * gcd(|num|, den) = 1, den > 0, and zero is 0/1. Text form is "p/q",
 * with "/q" omitted when q = 1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>

#include "cbi/core/error.hpp"

namespace cbi {

class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    static Rational from_integers(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        return Rational(mpq_class(num, den));
    }

    /// Parses "p" or "p/q" (optional sign on p, q > 0).
    static Rational parse(std::string_view text) {
        static const std::regex pattern(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
        std::string s(text);
        std::smatch m;
        if (!std::regex_match(s, m, pattern)) {
            throw ParseError("invalid rational literal \"" + s + "\" (expected p or p/q)");
        }
        mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
        mpz_class den(1);
        if (m[2].matched) den = mpz_class(m[2].str(), 10);
        if (den == 0) throw ParseError("invalid rational literal \"" + s + "\" (zero denominator)");
        return from_integers(num, den);
    }

    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for a nonnegative integer exponent.
inline Rational pow(Rational base, unsigned e) {
    Rational acc(1);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

/// (-1)^n as a small integer.
constexpr int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace cbi
