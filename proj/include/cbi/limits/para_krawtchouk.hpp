#pragma once

/**
 * @file para_krawtchouk.hpp
 * @brief Para-Krawtchouk specialization of the CBI family (odd N).
 */

#include <optional>
#include <string>
#include <utility>

#include "cbi/operators/eigen.hpp"
#include "cbi/spectral/orthogonality.hpp"

namespace cbi {

/// rho1 = (gamma-N-3)/4, rho2 = 0, r1 = (N+1+gamma)/4, r2 = 0, with a = (1-N)/4.
inline std::pair<ParamSet, Rational> para_krawtchouk_params(unsigned N, const Rational& gamma) {
    if (N % 2 == 0) throw DomainError("para-Krawtchouk needs odd N, got " + std::to_string(N));
    const Rational NN(static_cast<long>(N));
    ParamSet p{(gamma - NN - 3) / 4, Rational(0), (NN + 1 + gamma) / 4, Rational(0)};
    return {p, (1 - NN) / 4};
}

struct ParaKrawtchoukReport {
    unsigned N = 0;
    Rational gamma;
    ParamSet params;
    Rational alpha;
    EigenReport eigen;
    bool symmetric = false;  // I_n(-x) = (-1)^n I_n(x), n <= N
    Rational tau_next;       // tau_{N+1}
    std::optional<TruncationCase> truncation;
    std::optional<OrthoReport> orthogonality;
    std::string truncation_error;

    bool passed() const {
        return eigen.passed() && symmetric && tau_next.is_zero() && truncation && orthogonality &&
               orthogonality->passed();
    }
};

/// The generic eigen and truncation suites run unchanged at the para-Krawtchouk point.
inline ParaKrawtchoukReport verify_para_krawtchouk(unsigned N, const Rational& gamma) {
    ParaKrawtchoukReport rep;
    rep.N = N;
    rep.gamma = gamma;
    std::tie(rep.params, rep.alpha) = para_krawtchouk_params(N, gamma);
    rep.eigen = verify_eigen(rep.params, rep.alpha, N);
    rep.symmetric = true;
    const auto I = cbi_table(rep.params, N);
    for (unsigned n = 0; n <= N; ++n) {
        if (affine_substitute(I[n], -1, 0) != I[n] * Rational(parity_sign(static_cast<long>(n)))) rep.symmetric = false;
    }
    rep.tau_next = cbi_tau(rep.params, static_cast<long>(N) + 1);
    try {
        rep.truncation = classify_truncation(rep.params, N);
        rep.orthogonality = compute_orthogonality(*rep.truncation, rep.params);
    } catch (const Error& e) {
        rep.truncation_error = e.what();
    }
    return rep;
}

}  // namespace cbi
