#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded draws of small rationals and generic parameter sets.
 *
 * Draws use raw mt19937_64 output (no std distributions) so a seed yields the
 * same values on every standard library.
 */

#include <cstdint>
#include <random>

#include "cbi/family/complementary.hpp"

namespace cbi {

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long max_abs_num = 12, long max_den = 12)
        : engine_(seed), max_num_(max_abs_num), max_den_(max_den) {}

    /// p/q with |p| <= max_abs_num, 1 <= q <= max_den.
    Rational next() {
        long p = static_cast<long>(engine_() % static_cast<std::uint64_t>(2 * max_num_ + 1)) - max_num_;
        long q = static_cast<long>(engine_() % static_cast<std::uint64_t>(max_den_)) + 1;
        return Rational(p, q);
    }
    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (!r.is_zero()) return r;
        }
    }
    ParamSet next_params() { return {next(), next(), next(), next()}; }

private:
    std::mt19937_64 engine_;
    long max_num_;
    long max_den_;
};

struct GenericityOptions {
    unsigned degree_cap = default_degree_cap;
    /// Reject parameters whose h = rho2 and h = r1 grids meet the half-integer poles of D_0.
    bool avoid_grid_poles = false;
};

/// True when no recurrence, kernel, or closed-form denominator vanishes up to the cap.
inline bool is_generic(const ParamSet& p, const GenericityOptions& opt = {}) {
    auto twice_is_integer = [](const Rational& r) { return (r * 2).is_integer(); };
    auto nonpositive_integer = [](const Rational& r) { return r.is_integer() && r.sign() <= 0; };
    try {
        for (unsigned n = 0; n <= opt.degree_cap + 1; ++n) {
            auto [A, C] = bi_coefficients(p, n);
            if (A.is_zero()) return false;
            if (n >= 1 && cbi_tau(p, n).is_zero()) return false;
            (void)C;
        }
    } catch (const SingularParameter&) {
        return false;
    }
    for (int o = 0; o <= 1; ++o) {
        if (nonpositive_integer(p.rho1 + p.rho2 + 1 + o) || nonpositive_integer(p.rho2 - p.r1 + Rational(1, 2) + o) ||
            nonpositive_integer(p.rho2 - p.r2 + Rational(1, 2) + o)) {
            return false;
        }
    }
    if (p.rho2.is_zero()) return false;
    if (opt.avoid_grid_poles && (twice_is_integer(p.rho2) || twice_is_integer(p.r1))) return false;
    return true;
}

/// Rejection-samples a generic parameter set.
inline ParamSet draw_generic_params(RationalSampler& rng, const GenericityOptions& opt = {}) {
    for (;;) {
        ParamSet p = rng.next_params();
        if (is_generic(p, opt)) return p;
    }
}

}  // namespace cbi
