#pragma once

/**
 * @file askey_wilson.hpp
 * @brief Askey-Wilson recurrence coefficients and their numeric q -> -1 limit to the CBI recurrence.
 */

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cbi/family/complementary.hpp"

namespace cbi {

using Complex = std::complex<double>;

struct AWParams {
    Complex a, b, c, d, q;
};

inline constexpr double aw_conditioning_threshold = 1e-12;

struct AWCoefficients {
    Complex alpha;
    Complex gamma;
};

namespace detail {

inline Complex checked_den(const Complex& v, const char* what, long n) {
    if (std::abs(v) < aw_conditioning_threshold) {
        throw ConditioningError(std::string(what) + " denominator near zero at n=" + std::to_string(n));
    }
    return v;
}

/// (a; q)_k
template <class C>
C qpoch(const C& a, const C& q, long k) {
    C r(1.0);
    C qj(1.0);
    for (long j = 0; j < k; ++j) {
        r *= C(1.0) - a * qj;
        qj *= q;
    }
    return r;
}

}  // namespace detail

inline AWCoefficients aw_recurrence_coeffs(const AWParams& p, long n) {
    const auto& [a, b, c, d, q] = p;
    const Complex abcd = a * b * c * d;
    auto qp = [&](long k) { return std::pow(q, static_cast<double>(k)); };
    const Complex al_num = (1.0 - a * b * qp(n)) * (1.0 - a * c * qp(n)) * (1.0 - a * d * qp(n)) * (1.0 - abcd * qp(n - 1));
    const Complex al_den = detail::checked_den(a * (1.0 - abcd * qp(2 * n - 1)) * (1.0 - abcd * qp(2 * n)), "alpha", n);
    const Complex ga_num =
        a * (1.0 - qp(n)) * (1.0 - b * c * qp(n - 1)) * (1.0 - b * d * qp(n - 1)) * (1.0 - c * d * qp(n - 1));
    const Complex ga_den =
        detail::checked_den((1.0 - abcd * qp(2 * n - 2)) * (1.0 - abcd * qp(2 * n - 1)), "gamma", n);
    return {al_num / al_den, ga_num / ga_den};
}

/// The terminating 4phi3(q^-n, abcd q^{n-1}, az, a/z; ab, ac, ad; q, q), summed in extended precision.
inline Complex aw_phi(const AWParams& p, const Complex& z, long n) {
    using CL = std::complex<long double>;
    const CL a(p.a), b(p.b), c(p.c), d(p.d), q(p.q), zz(z);
    CL sum(0.0L);
    CL qk(1.0L);
    const CL qn = std::pow(q, -static_cast<long double>(n));
    const CL top = a * b * c * d * std::pow(q, static_cast<long double>(n - 1));
    for (long k = 0; k <= n; ++k) {
        const CL den = detail::qpoch(a * b, q, k) * detail::qpoch(a * c, q, k) * detail::qpoch(a * d, q, k) *
                       detail::qpoch(q, q, k);
        detail::checked_den(Complex(den), "4phi3 term", n);
        sum += detail::qpoch(qn, q, k) * detail::qpoch(top, q, k) * detail::qpoch(a * zz, q, k) *
               detail::qpoch(a / zz, q, k) / den * qk;
        qk *= q;
    }
    return Complex(sum);
}

/// p_n = a^{-n} (ab, ac, ad; q)_n 4phi3(...).
inline Complex aw_polynomial(const AWParams& p, const Complex& z, long n) {
    const Complex pre = std::pow(p.a, -static_cast<double>(n)) * detail::qpoch(p.a * p.b, p.q, n) *
                        detail::qpoch(p.a * p.c, p.q, n) * detail::qpoch(p.a * p.d, p.q, n);
    return pre * aw_phi(p, z, n);
}

struct LimitCoefficients {
    Rational alpha_star;
    Rational gamma_star;
};

/**
 * a*_{2m} = -(m+rho1+rho2+1)(m+g+1)/(2m+g+1),  a*_{2m+1} = -(m+rho1-r1+3/2)(m+rho1-r2+3/2)/(2m+g+2),
 * g*_{2m} = m(m-r1-r2)/(2m+g+1),               g*_{2m+1} = (m+rho2-r1+1/2)(m+rho2-r2+1/2)/(2m+g+2).
 */
inline LimitCoefficients aw_limit_coeffs(const ParamSet& p, long n) {
    const Rational g = p.g();
    const Rational m(n / 2);
    const Rational h(1, 2);
    if (n % 2 == 0) {
        const Rational den = 2 * m + g + 1;
        if (den.is_zero()) throw SingularParameter("2m+g+1 vanishes at n=" + std::to_string(n));
        return {-(m + p.rho1 + p.rho2 + 1) * (m + g + 1) / den, m * (m - p.r1 - p.r2) / den};
    }
    const Rational den = 2 * m + g + 2;
    if (den.is_zero()) throw SingularParameter("2m+g+2 vanishes at n=" + std::to_string(n));
    return {-(m + p.rho1 - p.r1 + 3 * h) * (m + p.rho1 - p.r2 + 3 * h) / den,
            (m + p.rho2 - p.r1 + h) * (m + p.rho2 - p.r2 + h) / den};
}

/// a = i e^{e(2rho1+3/2)}, b = -i e^{e(2rho2+1/2)}, c = i e^{e(-2r2+1/2)}, d = i e^{e(-2r1+1/2)}, q = -e^e.
inline AWParams aw_limit_params(const ParamSet& p, double eps) {
    const Complex I(0.0, 1.0);
    auto e = [&](const Rational& s) { return std::exp(eps * s.to_double()); };
    const Rational h(1, 2);
    return {I * e(2 * p.rho1 + 3 * h), -I * e(2 * p.rho2 + h), I * e(-2 * p.r2 + h), I * e(-2 * p.r1 + h),
            Complex(-std::exp(eps), 0.0)};
}

/// z = i e^{-2 e y}.
inline Complex aw_limit_z(double eps, double y) { return Complex(0.0, 1.0) * std::exp(-2.0 * eps * y); }

struct AWLimitRow {
    long n = 0;
    double eps = 0;
    Complex alpha_scaled;  // alpha_n / (4i(1+q))
    Complex gamma_scaled;  // gamma_n / (4i(1+q))
    double alpha_error = 0;
    double gamma_error = 0;
    double alpha_ratio = std::numeric_limits<double>::quiet_NaN();  // previous error / this error
    double gamma_ratio = std::numeric_limits<double>::quiet_NaN();
};

struct AWLimitReport {
    ParamSet params;
    unsigned n_max = 0;
    std::vector<double> eps;
    std::vector<LimitCoefficients> targets;
    std::vector<AWLimitRow> rows;  // n-major, eps-minor
    double ratio_low = 5.0;
    double ratio_high = 20.0;
    double final_factor = 50.0;
    double error_floor = 1e-12;  // errors below this count as exact (e.g. gamma_0)
    std::optional<std::string> witness;

    bool passed() const { return !witness.has_value(); }
};

/**
 * For each n and eps, compares alpha_n/(4i(1+q)) and gamma_n/(4i(1+q)) against a*_n and g*_n.
 * Errors must shrink by a factor in [ratio_low, ratio_high] per eps step, the last error must be
 * below final_factor * eps, and the imaginary parts must stay below final_factor * eps.
 */
inline AWLimitReport verify_aw_limit(const ParamSet& p, unsigned n_max = 6,
                                     std::vector<double> eps = {1e-3, 1e-4, 1e-5}) {
    if (eps.empty()) throw DomainError("eps list is empty");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(eps[i] > 0) || (i > 0 && !(eps[i] < eps[i - 1]))) {
            throw DomainError("eps list must be strictly decreasing positive values");
        }
    }
    AWLimitReport rep;
    rep.params = p;
    rep.n_max = n_max;
    rep.eps = eps;
    const Complex four_i(0.0, 4.0);
    auto fail = [&](const std::string& s) {
        if (!rep.witness) rep.witness = s;
    };
    for (long n = 0; n <= static_cast<long>(n_max); ++n) {
        const LimitCoefficients t = aw_limit_coeffs(p, n);
        rep.targets.push_back(t);
        const double at = t.alpha_star.to_double();
        const double gt = t.gamma_star.to_double();
        std::optional<AWLimitRow> prev;
        for (double e : eps) {
            const AWParams aw = aw_limit_params(p, e);
            const AWCoefficients c = aw_recurrence_coeffs(aw, n);
            AWLimitRow row;
            row.n = n;
            row.eps = e;
            row.alpha_scaled = c.alpha / (four_i * (1.0 + aw.q));
            row.gamma_scaled = c.gamma / (four_i * (1.0 + aw.q));
            row.alpha_error = std::abs(row.alpha_scaled - at);
            row.gamma_error = std::abs(row.gamma_scaled - gt);
            const std::string where = "n=" + std::to_string(n) + " eps=" + std::to_string(e);
            if (std::abs(row.alpha_scaled.imag()) > rep.final_factor * e ||
                std::abs(row.gamma_scaled.imag()) > rep.final_factor * e) {
                fail("imaginary part not O(eps) at " + where);
            }
            if (prev) {
                auto check = [&](double before, double now, double& ratio, const char* name) {
                    if (before < rep.error_floor && now < rep.error_floor) return;
                    ratio = now > 0 ? before / now : std::numeric_limits<double>::infinity();
                    if (ratio < rep.ratio_low || ratio > rep.ratio_high) {
                        fail(std::string(name) + " error ratio " + std::to_string(ratio) + " outside [" +
                             std::to_string(rep.ratio_low) + ", " + std::to_string(rep.ratio_high) + "] at " + where);
                    }
                };
                check(prev->alpha_error, row.alpha_error, row.alpha_ratio, "alpha");
                check(prev->gamma_error, row.gamma_error, row.gamma_ratio, "gamma");
            }
            rep.rows.push_back(row);
            prev = row;
        }
        const AWLimitRow& last = rep.rows.back();
        if (last.alpha_error >= rep.final_factor * eps.back() || last.gamma_error >= rep.final_factor * eps.back()) {
            fail("final error not below " + std::to_string(rep.final_factor) + "*eps at n=" + std::to_string(n));
        }
    }
    return rep;
}

}  // namespace cbi
