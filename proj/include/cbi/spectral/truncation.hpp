#pragma once

/**
 * @file truncation.hpp
 * @brief Truncation conditions tau_{N+1} = 0, spectral grids and positive parametrizations.
 */

#include <string>
#include <vector>

#include "cbi/family/complementary.hpp"
#include "cbi/operators/grid.hpp"

namespace cbi {

enum class TruncationTag { EvenCase1, EvenCase2, EvenCase3, OddCase_i, OddCase_ii, OddCase_iii };

struct TruncationCase {
    TruncationTag tag;
    unsigned N;

    bool even() const {
        return tag == TruncationTag::EvenCase1 || tag == TruncationTag::EvenCase2 || tag == TruncationTag::EvenCase3;
    }
    friend bool operator==(const TruncationCase&, const TruncationCase&) = default;
};

inline std::string to_string(TruncationTag t) {
    switch (t) {
        case TruncationTag::EvenCase1: return "even-1";
        case TruncationTag::EvenCase2: return "even-2";
        case TruncationTag::EvenCase3: return "even-3";
        case TruncationTag::OddCase_i: return "odd-i";
        case TruncationTag::OddCase_ii: return "odd-ii";
        case TruncationTag::OddCase_iii: return "odd-iii";
    }
    return "?";
}

/**
 * N even: 1) rho2 - r1 = -(N+1)/2, 2) rho2 - r2 = -(N+1)/2, 3) rho1 + rho2 = -(N+2)/2;
 *         g = -(N+2)/2 is inadmissible.
 * N odd:  i) r1 - rho1 = (N+2)/2, ii) r1 + r2 = (N+1)/2, iii) r2 - rho1 = (N+2)/2.
 */
inline TruncationCase classify_truncation(const ParamSet& p, unsigned N) {
    const Rational n1 = Rational(static_cast<long>(N) + 1, 2);
    const Rational n2 = Rational(static_cast<long>(N) + 2, 2);
    if (N % 2 == 0 && p.g() == -n2) {
        throw InadmissibleTruncation("g = -(N+2)/2 makes tau_n singular (N=" + std::to_string(N) + ")");
    }
    Rational tau;
    try {
        tau = cbi_tau(p, static_cast<long>(N) + 1);
    } catch (const SingularParameter& e) {
        throw InadmissibleTruncation(std::string("tau_{N+1} undefined: ") + e.what());
    }
    if (!tau.is_zero()) {
        throw NotTruncated("tau_" + std::to_string(N + 1) + " = " + tau.str() + " is nonzero for " + to_string(p));
    }
    if (N % 2 == 0) {
        if (p.rho2 - p.r1 == -n1) return {TruncationTag::EvenCase1, N};
        if (p.rho2 - p.r2 == -n1) return {TruncationTag::EvenCase2, N};
        if (p.rho1 + p.rho2 == -n2) return {TruncationTag::EvenCase3, N};
    } else {
        if (p.r1 - p.rho1 == n2) return {TruncationTag::OddCase_i, N};
        if (p.r1 + p.r2 == n1) return {TruncationTag::OddCase_ii, N};
        if (p.r2 - p.rho1 == n2) return {TruncationTag::OddCase_iii, N};
    }
    throw InternalInconsistency("tau_{N+1} vanishes but no truncation condition matches");
}

/// x_0..x_N of the truncated CBI system.
inline std::vector<Rational> spectral_grid(const TruncationCase& c, const ParamSet& p) {
    std::vector<Rational> out;
    for (long k = 0; k <= static_cast<long>(c.N); ++k) {
        switch (c.tag) {
            case TruncationTag::EvenCase1:
            case TruncationTag::EvenCase2:
            case TruncationTag::EvenCase3: out.push_back(bi_grid(p.rho2, k)); break;
            case TruncationTag::OddCase_i:
            case TruncationTag::OddCase_ii: out.push_back(alternate_grid(p.r1, k)); break;
            case TruncationTag::OddCase_iii: out.push_back(alternate_grid(p.r2, k)); break;
        }
    }
    return out;
}

inline void require_positive(const Rational& v, const char* name) {
    if (v.sign() <= 0) throw DomainError(std::string(name) + " must be positive, got " + v.str());
}

/// Positive-definite even-N parametrization (truncation case 1).
inline ParamSet positive_even_params(const Rational& a, const Rational& b, const Rational& c, unsigned N) {
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(c, "c");
    if (N == 0 || N % 2 != 0) throw DomainError("N must be a positive even integer, got " + std::to_string(N));
    const Rational s = (a + b) / 2;
    const Rational NN(static_cast<long>(N));
    return {(s + c + NN) / 2, (s - 1) / 2, (s + NN) / 2, (a - b) / 4};
}

/// Positive-definite odd-N parametrization (truncation case ii).
inline ParamSet positive_odd_params(const Rational& zeta, const Rational& xi, const Rational& chi, unsigned N) {
    require_positive(zeta, "zeta");
    require_positive(xi, "xi");
    require_positive(chi, "chi");
    if (N < 3 || N % 2 != 1) throw DomainError("N must be an odd integer > 1, got " + std::to_string(N));
    const Rational s = (zeta + xi) / 2;
    const Rational NN(static_cast<long>(N));
    return {(s + chi + NN) / 2, (zeta - xi) / 4, (s + NN + 1) / 2, -(zeta + xi) / 4};
}

}  // namespace cbi
