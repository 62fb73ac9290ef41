#pragma once

/**
 * @file grid.hpp
 * @brief Bannai-Ito grids and the five-term difference equation on them.
 */

#include <optional>
#include <string>
#include <vector>

#include "cbi/family/complementary.hpp"
#include "cbi/operators/dunkl.hpp"

namespace cbi {

/// x_k = (-1)^k (k/2 + h + 1/4) - 1/4.
inline Rational bi_grid(const Rational& h, long k) {
    return parity_sign(k) * (Rational(k, 2) + h + Rational(1, 4)) - Rational(1, 4);
}

/// x~_k = (-1)^k (h - k/2 - 1/4) - 1/4; equal to x_{-k} with h - 1/2.
inline Rational alternate_grid(const Rational& h, long k) {
    return parity_sign(k) * (h - Rational(k, 2) - Rational(1, 4)) - Rational(1, 4);
}

enum class GridKind { Standard, Alternate };

inline Rational grid_point(GridKind kind, const Rational& h, long k) {
    return kind == GridKind::Standard ? bi_grid(h, k) : alternate_grid(h, k);
}

/// Index offset j - k with x_j = image of x_k under T^shift R^reflect, for shift in {0, +-1}.
inline long grid_action_offset(GridKind kind, bool k_even, const Rational& shift, bool reflect) {
    long off;
    if (!reflect) {
        off = shift == Rational(1) ? 2 : -2;  // T^+ : x_{k+2} on even k
    } else {
        off = shift.is_zero() ? -1 : 1;  // R : x_{k-1}, T^+R : x_{k+1} on even k
    }
    if (!k_even) off = -off;
    return kind == GridKind::Standard ? off : -off;
}

struct EigenFailure {
    long n = 0;
    std::optional<long> k;
    std::string residual;
};

struct EigenReport {
    std::string check;
    ParamSet params;
    Rational alpha;
    long max_n = 0;
    std::vector<EigenFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// u, v, m, t, r at x_k: coefficients of I(x_{k+2}), I(x_{k+1}), I(x_k), I(x_{k-1}), I(x_{k-2}).
struct FiveTermCoefficients {
    Rational u, v, m, t, r;
};

/**
 * Dispatch of the D_a coefficients at grid point k. On the standard grid and even k:
 * u = A, v = D, t = C, r = B; odd k swaps A <-> B and C <-> D. The alternate grid
 * runs the index the other way, so u <-> r and v <-> t. The a U part adds
 * a(x - rho2)/(2x) to the diagonal and subtracts it at the R image.
 */
inline FiveTermCoefficients five_term_coefficients(const D0Coefficients<RatFunc>& c, const Rational& rho2,
                                                   const Rational& alpha, GridKind kind, const Rational& h, long k) {
    const Rational x = grid_point(kind, h, k);
    auto at = [&](const RatFunc& f, const char* name) {
        if (f.has_pole_at(x)) {
            throw GridPole(std::string("coefficient ") + name + " has a pole at grid point x_" + std::to_string(k) +
                               " = " + x.str(),
                           k);
        }
        return f(x);
    };
    const bool even = k % 2 == 0;
    Rational A = at(c.A, "A"), B = at(c.B, "B"), C = at(c.C, "C"), D = at(c.D, "D");
    FiveTermCoefficients f;
    f.u = even ? A : B;
    f.v = even ? D : C;
    f.t = even ? C : D;
    f.r = even ? B : A;
    Rational hidden(0);
    if (!alpha.is_zero()) hidden = alpha * at(u_coefficient(rho2), "U");
    if (even) {
        f.t -= hidden;
    } else {
        f.v -= hidden;
    }
    if (kind == GridKind::Alternate) {
        std::swap(f.u, f.r);
        std::swap(f.v, f.t);
    }
    f.m = -(f.u + f.v + f.t + f.r);
    return f;
}

/**
 * Checks u I_n(x_{k+2}) + v I_n(x_{k+1}) + m I_n(x_k) + t I_n(x_{k-1}) + r I_n(x_{k-2})
 * = Lambda_n^(a) I_n(x_k) for every polynomial of the table and every k in [k_min, k_max].
 */
inline EigenReport five_term_apply(const ParamSet& p, const Rational& alpha, const PolyTable& table, const Rational& h,
                                   long k_min, long k_max, GridKind kind = GridKind::Standard) {
    EigenReport rep{kind == GridKind::Standard ? "five-term" : "five-term-alternate", p, alpha,
                    static_cast<long>(table.polys.size()) - 1, {}};
    const auto c = d0_coefficients(p);
    for (long k = k_min; k <= k_max; ++k) {
        FiveTermCoefficients f = five_term_coefficients(c, p.rho2, alpha, kind, h, k);
        Rational xs[5];
        for (int j = 0; j < 5; ++j) xs[j] = grid_point(kind, h, k + 2 - j);
        for (std::size_t n = 0; n < table.polys.size(); ++n) {
            const Poly& I = table.polys[n];
            Rational lhs = f.u * I(xs[0]) + f.v * I(xs[1]) + f.m * I(xs[2]) + f.t * I(xs[3]) + f.r * I(xs[4]);
            Rational rhs = eigenvalue_lambda(p, alpha, static_cast<long>(n)) * I(xs[2]);
            if (lhs != rhs) rep.failures.push_back({static_cast<long>(n), k, (lhs - rhs).str()});
        }
    }
    return rep;
}

/// Default grid parameter: rho2 on the standard grid, r1 on the alternate grid.
inline Rational default_grid_parameter(const ParamSet& p, GridKind kind) {
    return kind == GridKind::Standard ? p.rho2 : p.r1;
}

}  // namespace cbi
