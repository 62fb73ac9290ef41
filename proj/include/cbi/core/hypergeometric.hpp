#pragma once

/**
 * @file hypergeometric.hpp
 * @brief Rising factorials and terminating generalized hypergeometric sums.
 *
 * The series core is templated on the numerator ring so that the same code
 * sums scalar series and series whose numerator parameters are polynomials
 * in x (needed to expand closed forms such as 4F3(..., rho2+x, rho2-x; ...; 1)
 * symbolically).
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cbi/core/polynomial.hpp"

namespace cbi {

/// (a)_n = a(a+1)...(a+n-1); 1 for n = 0. T is any ring that accepts Rational addition.
template <class T>
T pochhammer(const T& a, unsigned n) {
    T acc(1);
    for (unsigned i = 0; i < n; ++i) acc = acc * (a + T(Rational(static_cast<long>(i))));
    return acc;
}

namespace detail {

/// Sum_{k=0}^{n} prod_i (num_i)_k / prod_j (den_j)_k * arg^k / k!, built term by term.
template <class T>
T terminating_series(unsigned n, std::span<const T> numerators, std::span<const Rational> denominators,
                     const T& argument) {
    for (const auto& d : denominators) {
        // (d)_k vanishes for some k <= n iff d is an integer in [-(n-1), 0].
        if (d.is_integer() && d.sign() <= 0 && -d < Rational(static_cast<long>(n))) {
            throw SingularParameter("hypergeometric denominator parameter " + d.str() +
                                    " is a nonpositive integer inside the summation range n = " +
                                    std::to_string(n));
        }
    }
    T term(1);
    T sum(1);
    for (unsigned k = 0; k < n; ++k) {
        const Rational kk(static_cast<long>(k));
        Rational scalar = Rational(1) / (kk + Rational(1));
        for (const auto& d : denominators) scalar /= d + kk;
        T next = term * T(scalar) * argument;
        for (const auto& a : numerators) next = next * (a + T(kk));
        term = next;
        sum = sum + term;
    }
    return sum;
}

inline std::optional<unsigned> terminating_index(const Rational& a) {
    if (a.is_integer() && a.sign() <= 0) return static_cast<unsigned>((-a).numerator().get_ui());
    return std::nullopt;
}

}  // namespace detail

/**
 * Exact terminating pFq. Exactly one numerator must be a nonpositive integer -n;
 * the sum runs over k = 0..n.
 */
inline Rational pfq_terminating(std::span<const Rational> numerators, std::span<const Rational> denominators,
                                const Rational& argument) {
    std::optional<unsigned> n;
    std::vector<Rational> rest;
    for (const auto& a : numerators) {
        auto idx = detail::terminating_index(a);
        if (idx && !n) {
            n = idx;
            continue;
        }
        rest.push_back(a);
    }
    if (!n) throw DomainError("pfq_terminating: no numerator parameter is a nonpositive integer");
    // The -n parameter contributes (-n)_k; put it back as an ordinary numerator.
    rest.push_back(Rational(-static_cast<long>(*n)));
    return detail::terminating_series<Rational>(*n, rest, denominators, argument);
}

/**
 * Terminating series with leading numerator -n and polynomial-valued remaining
 * numerators; returns the sum as a polynomial in x.
 */
inline Poly pfq_polynomial(unsigned n, std::span<const Poly> numerators, std::span<const Rational> denominators,
                           const Rational& argument) {
    std::vector<Poly> nums(numerators.begin(), numerators.end());
    nums.emplace_back(Rational(-static_cast<long>(n)));
    return detail::terminating_series<Poly>(n, nums, denominators, Poly(argument));
}

/// lim_{t->inf} num(t)/den(t) for deg num <= deg den.
inline Rational limit_at_infinity(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.degree() > den.degree()) {
        throw DivergentLimit("limit at infinity diverges: numerator degree " + std::to_string(num.degree()) +
                             " exceeds denominator degree " + std::to_string(den.degree()));
    }
    if (num.degree() < den.degree()) return Rational(0);
    return num.leading() / den.leading();
}

}  // namespace cbi
