#pragma once

#include <string>

#include "cbi/core/ratfunc.hpp"

namespace cbi {

/// Largest degree the CLI and suites build by default; bounds big-integer growth.
inline constexpr unsigned default_degree_cap = 30;

/**
 * The parameter tuple (rho1, rho2, r1, r2). F is the coefficient field: Rational
 * for concrete parameter sets, RatFunc when one parameter is kept symbolic
 * (for example rho1 in the rho1 -> infinity limit).
 */
template <class F>
struct ParamsT {
    F rho1;
    F rho2;
    F r1;
    F r2;

    /// g = rho1 + rho2 - r1 - r2; always recomputed.
    F g() const { return rho1 + rho2 - r1 - r2; }
};

using ParamSet = ParamsT<Rational>;

inline std::string to_string(const ParamSet& p) {
    return "rho1=" + p.rho1.str() + " rho2=" + p.rho2.str() + " r1=" + p.r1.str() + " r2=" + p.r2.str();
}

namespace detail {

template <class F>
F constant(long num, long den = 1) {
    return F(Rational(num, den));
}

template <class F>
F integer(long n) {
    return F(Rational(n));
}

/// a / b, raising SingularParameter when b vanishes.
template <class F>
F checked_div(const F& a, const F& b, const std::string& what) {
    if (b.is_zero()) throw SingularParameter(what);
    return a / b;
}

}  // namespace detail

}  // namespace cbi
