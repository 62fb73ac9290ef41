#pragma once

/**
 * @file dunkl.hpp
 * @brief Dunkl shift operators diagonalized by the complementary Bannai-Ito polynomials.
 *
 *   D_0 = A T^+ + B T^- + C R + D T^+R - (A+B+C+D) 1,   T^{+-} = T^{+-1}
 *   U   = ((x - rho2) / 2x) (1 - R)
 *   D_a = D_0 + a U,   D_a I_n = Lambda_n^(a) I_n,   U I_n = (n mod 2) I_n
 *
 * H acts in the variable y = x + 1/4 with half-integer shifts and has
 * eigenfunctions I_n(y - 1/4) with eigenvalues kappa_n.
 */

#include "cbi/family/params.hpp"
#include "cbi/operators/shift_reflect.hpp"

namespace cbi {

template <class F>
struct D0Coefficients {
    F A;
    F B;
    F C;
    F D;
    F omega;
};

/// omega = 4 rho1 - 4 (r1 + r2) rho1 + 4 r1 r2 - 6 (r1 + r2) + 5.
template <class F>
F d0_omega(const ParamsT<F>& p) {
    using detail::integer;
    const F s = p.r1 + p.r2;
    return integer<F>(4) * p.rho1 - integer<F>(4) * s * p.rho1 + integer<F>(4) * p.r1 * p.r2 - integer<F>(6) * s +
           integer<F>(5);
}

/**
 * Coefficients of D_0 at a point x of the field F. With F = RatFunc and
 * x = RatFunc::x() this gives the operator coefficients; with the parameters
 * symbolic in another variable it gives their dependence on that variable.
 */
template <class F>
D0Coefficients<F> d0_coefficients(const ParamsT<F>& p, const F& x) {
    using detail::integer;
    const F one = integer<F>(1);
    const F two = integer<F>(2);
    const F eight = integer<F>(8);
    const F om = d0_omega(p);
    const F a_r1 = two * x - two * p.r1 + one;  // 2x - 2r1 + 1
    const F a_r2 = two * x - two * p.r2 + one;
    const F up = (x + p.rho1 + one) * a_r1 * a_r2;
    F A = (x + p.rho1 + one) * (x + p.rho2 + one) * a_r1 * a_r2 / (eight * (x + one) * (two * x + one));
    F B = (x - p.rho2) * (x - p.rho1 - one) * (two * x + two * p.r1 - one) * (two * x + two * p.r2 - one) /
          (eight * x * (two * x - one));
    F C = (x - p.rho2) * (integer<F>(4) * x * x + om) / (eight * x) -
          (x - p.rho2) * up / (eight * x * (two * x + one)) - B;
    F D = p.rho2 * up / (eight * x * (x + one) * (two * x + one));
    return {A, B, C, D, om};
}

inline D0Coefficients<RatFunc> d0_coefficients(const ParamSet& p) {
    ParamsT<RatFunc> q{RatFunc(p.rho1), RatFunc(p.rho2), RatFunc(p.r1), RatFunc(p.r2)};
    return d0_coefficients(q, RatFunc::x());
}

/// Assembles A T^+ + B T^- + C R + D T^+R - (A+B+C+D) 1.
inline ShiftReflectOp assemble_five_term(const RatFunc& A, const RatFunc& B, const RatFunc& C, const RatFunc& D) {
    ShiftReflectOp op;
    op.add_term({Rational(1), false}, A);
    op.add_term({Rational(-1), false}, B);
    op.add_term({Rational(0), true}, C);
    op.add_term({Rational(1), true}, D);
    op.add_term({Rational(0), false}, -(A + B + C + D));
    return op;
}

inline ShiftReflectOp build_D0(const ParamSet& p) {
    auto c = d0_coefficients(p);
    return assemble_five_term(c.A, c.B, c.C, c.D);
}

/// (x - rho2)/(2x).
inline RatFunc u_coefficient(const Rational& rho2) { return RatFunc(Poly::linear(1, -rho2), Poly::linear(2, 0)); }

inline ShiftReflectOp build_U(const ParamSet& p) {
    RatFunc c = u_coefficient(p.rho2);
    ShiftReflectOp op;
    op.add_term({Rational(0), false}, c);
    op.add_term({Rational(0), true}, -c);
    return op;
}

inline ShiftReflectOp build_D_alpha(const ParamSet& p, const Rational& alpha) {
    return build_D0(p) + alpha * build_U(p);
}

/// Lambda_{2m} = m^2 + (g+1) m, Lambda_{2m+1} = m^2 + (g+2) m + alpha.
template <class F>
F eigenvalue_lambda(const ParamsT<F>& p, const F& alpha, long n) {
    using detail::integer;
    const F m = integer<F>(n / 2);
    const F g = p.g();
    if (n % 2 == 0) return m * m + (g + integer<F>(1)) * m;
    return m * m + (g + integer<F>(2)) * m + alpha;
}

/// g^2 + 2g + 5/4: the odd-sector offset of the spectrum of H.
inline Rational kappa_offset(const ParamSet& p) {
    Rational g = p.g();
    return g * g + 2 * g + Rational(5, 4);
}

inline Rational eigenvalue_kappa(const ParamSet& p, long n) { return eigenvalue_lambda(p, kappa_offset(p), n); }

struct HCoefficients {
    RatFunc Phi1;
    RatFunc Phi2;
    RatFunc Phi3;
    RatFunc Phi4;
    RatFunc Phi5;
    Rational nu;
};

/// nu = r1 + r2 + 2 r1 r2 - 2 rho1 - 2 (r1 + r2) rho1 - 4 rho2 + 1/8 - 2 g^2.
inline Rational h_nu(const ParamSet& p) {
    Rational g = p.g();
    return p.r1 + p.r2 + 2 * p.r1 * p.r2 - 2 * p.rho1 - 2 * (p.r1 + p.r2) * p.rho1 - 4 * p.rho2 + Rational(1, 8) -
           2 * g * g;
}

inline HCoefficients h_coefficients(const ParamSet& p) {
    const RatFunc y = RatFunc::x();
    const Rational q(1, 4);
    auto lin = [&](const Rational& c) { return y + RatFunc(c); };
    const RatFunc four(4);
    const Rational nu = h_nu(p);
    HCoefficients h;
    h.Phi1 = lin(p.rho1 + 3 * q) * lin(p.rho2 + 3 * q) * lin(q - p.r1) * lin(q - p.r2) / (four * lin(q) * lin(3 * q));
    h.Phi2 = lin(-p.rho1 - 5 * q) * lin(-p.rho2 - q) * lin(p.r1 - 3 * q) * lin(p.r2 - 3 * q) /
             (four * lin(-q) * lin(-3 * q));
    h.Phi3 = lin(p.rho1 + 3 * q) * lin(-p.rho2 - q) * lin(q - p.r1) * lin(q - p.r2) / (four * lin(-q) * lin(q));
    h.Phi4 = lin(p.rho1 + 3 * q) * lin(p.rho2 - q) * lin(q - p.r1) * lin(q - p.r2) / (four * lin(-q) * lin(q));
    h.Phi5 = lin(-p.rho2 - q) / (four * lin(-q)) * RatFunc(Poly{nu, Rational(-1), Rational(2)});
    h.nu = nu;
    return h;
}

/// Phi1 T^1 + (Phi4 - Phi1) T^{1/2}R + (Phi3 - Phi4 - Phi5) 1 + (Phi5 - Phi2 - Phi3) T^{-1/2}R + Phi2 T^{-1}.
inline ShiftReflectOp build_H_y(const ParamSet& p) {
    auto h = h_coefficients(p);
    ShiftReflectOp op;
    op.add_term({Rational(1), false}, h.Phi1);
    op.add_term({Rational(1, 2), true}, h.Phi4 - h.Phi1);
    op.add_term({Rational(0), false}, h.Phi3 - h.Phi4 - h.Phi5);
    op.add_term({Rational(-1, 2), true}, h.Phi5 - h.Phi2 - h.Phi3);
    op.add_term({Rational(-1), false}, h.Phi2);
    return op;
}

}  // namespace cbi
