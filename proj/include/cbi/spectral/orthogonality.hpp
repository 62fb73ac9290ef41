#pragma once

/**
 * @file orthogonality.hpp
 * @brief Weights and exact Gram-matrix verification of the finite orthogonality.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbi/spectral/truncation.hpp"

namespace cbi {

/**
 * w_k = (-1)^v / l! (rho1-r1+1/2)_{l+v} (rho1-r2+1/2)_{l+v} (rho1+rho2+1)_l (2rho1+1)_l
 *       / ((rho1+r1+1/2)_{l+v} (rho1+r2+1/2)_{l+v} (rho1-rho2+1)_l),  k = 2l + v.
 */
inline Rational bi_weight(const ParamSet& p, unsigned k) {
    const unsigned l = k / 2;
    const unsigned v = k % 2;
    const Rational half(1, 2);
    Rational num = pochhammer(p.rho1 - p.r1 + half, l + v) * pochhammer(p.rho1 - p.r2 + half, l + v) *
                   pochhammer(p.rho1 + p.rho2 + 1, l) * pochhammer(2 * p.rho1 + 1, l);
    Rational den = pochhammer(p.rho1 + p.r1 + half, l + v) * pochhammer(p.rho1 + p.r2 + half, l + v) *
                   pochhammer(p.rho1 - p.rho2 + 1, l) * pochhammer(Rational(1), l);
    if (den.is_zero()) throw SingularParameter("weight denominator vanishes at k=" + std::to_string(k));
    Rational w = num / den;
    return v ? -w : w;
}

/// The argument substitution applied to the weight formula for each CBI case.
inline ParamSet cbi_weight_arguments(TruncationTag tag, const ParamSet& p) {
    switch (tag) {
        case TruncationTag::EvenCase1:
        case TruncationTag::EvenCase2:
        case TruncationTag::EvenCase3: return {p.rho2, p.rho1, p.r1, p.r2};
        case TruncationTag::OddCase_i:
        case TruncationTag::OddCase_ii: return {-p.r1, -p.r2, -p.rho1, -p.rho2};
        case TruncationTag::OddCase_iii: return {-p.r2, -p.r1, -p.rho1, -p.rho2};
    }
    return p;
}

/// w~_k = (x_k - rho1) w_k with the case substitution.
inline Rational cbi_weight(const TruncationCase& c, const ParamSet& p, unsigned k) {
    const Rational x = spectral_grid(c, p)[k];
    return (x - p.rho1) * bi_weight(cbi_weight_arguments(c.tag, p), k);
}

struct GramWitness {
    unsigned n;
    unsigned m;
    Rational value;
};

struct OrthoReport {
    TruncationCase truncation;
    ParamSet params;
    std::vector<Rational> grid;
    std::vector<Rational> weights;
    std::vector<Rational> taus;            // tau_1 .. tau_N
    std::vector<bool> tau_positive;        // tau_n > 0, n = 1..N
    std::vector<std::vector<Rational>> gram;
    Rational gram_offdiag_max_abs;
    std::vector<Rational> norm_ratios;     // G[n][n]/G[0][0]
    std::vector<Rational> expected_ratios; // tau_1 ... tau_n
    bool grid_are_roots = true;            // I_{N+1}(x_k) = 0 and the x_k are distinct
    int weight_sign = 0;                   // +1 / -1 if all weights share a sign, 0 otherwise
    std::optional<GramWitness> offdiag_witness;
    std::optional<unsigned> ratio_witness;

    bool orthogonal() const { return !offdiag_witness.has_value(); }
    bool ratios_match() const { return !ratio_witness.has_value(); }
    bool positive_taus() const {
        for (bool b : tau_positive) {
            if (!b) return false;
        }
        return true;
    }
    bool passed() const { return orthogonal() && ratios_match() && grid_are_roots; }
};

namespace detail {

inline int common_sign(const std::vector<Rational>& v) {
    if (v.empty()) return 0;
    int s = v.front().sign();
    for (const auto& x : v) {
        if (x.sign() != s) return 0;
    }
    return s;
}

/// Fills gram, off-diagonal witness and norm ratios for sample vectors of a polynomial table.
inline void fill_gram(OrthoReport& rep, const std::vector<Poly>& polys) {
    const std::size_t size = rep.grid.size();
    std::vector<std::vector<Rational>> values(size, std::vector<Rational>(size));
    for (std::size_t n = 0; n < size; ++n) {
        for (std::size_t k = 0; k < size; ++k) values[n][k] = polys[n](rep.grid[k]);
    }
    rep.gram.assign(size, std::vector<Rational>(size));
    rep.gram_offdiag_max_abs = Rational(0);
    for (std::size_t n = 0; n < size; ++n) {
        for (std::size_t m = n; m < size; ++m) {
            Rational s(0);
            for (std::size_t k = 0; k < size; ++k) s += rep.weights[k] * values[n][k] * values[m][k];
            rep.gram[n][m] = s;
            rep.gram[m][n] = s;
            if (n != m && !s.is_zero()) {
                if (abs(s) > rep.gram_offdiag_max_abs) rep.gram_offdiag_max_abs = abs(s);
                if (!rep.offdiag_witness) rep.offdiag_witness = GramWitness{unsigned(n), unsigned(m), s};
            }
        }
    }
    const Rational& g00 = rep.gram[0][0];
    if (g00.is_zero()) {
        rep.ratio_witness = 0;
        return;
    }
    for (std::size_t n = 0; n < size; ++n) {
        rep.norm_ratios.push_back(rep.gram[n][n] / g00);
        if (rep.norm_ratios.back() != rep.expected_ratios[n] && !rep.ratio_witness) rep.ratio_witness = unsigned(n);
    }
}

inline void check_roots(OrthoReport& rep, const Poly& top) {
    for (std::size_t k = 0; k < rep.grid.size(); ++k) {
        if (!top(rep.grid[k]).is_zero()) rep.grid_are_roots = false;
        for (std::size_t j = 0; j < k; ++j) {
            if (rep.grid[j] == rep.grid[k]) rep.grid_are_roots = false;
        }
    }
}

}  // namespace detail

/// Exact Gram matrix of I_0..I_N against w~_k on the spectral grid; never throws on a failed check.
inline OrthoReport compute_orthogonality(const TruncationCase& c, const ParamSet& p) {
    OrthoReport rep{c, p, spectral_grid(c, p), {}, {}, {}, {}, Rational(0), {}, {}, true, 0, std::nullopt,
                    std::nullopt};
    const ParamSet args = cbi_weight_arguments(c.tag, p);
    for (unsigned k = 0; k <= c.N; ++k) rep.weights.push_back((rep.grid[k] - p.rho1) * bi_weight(args, k));
    rep.weight_sign = detail::common_sign(rep.weights);
    Rational prod(1);
    rep.expected_ratios.push_back(prod);
    for (unsigned n = 1; n <= c.N; ++n) {
        Rational t = cbi_tau(p, n);
        rep.taus.push_back(t);
        rep.tau_positive.push_back(t.sign() > 0);
        prod *= t;
        rep.expected_ratios.push_back(prod);
    }
    auto I = cbi_table(p, c.N + 1);
    detail::check_roots(rep, I[c.N + 1]);
    detail::fill_gram(rep, I);
    return rep;
}

/// As compute_orthogonality, raising VerificationFailure with the witness on any failure.
inline OrthoReport verify_orthogonality(const TruncationCase& c, const ParamSet& p) {
    OrthoReport rep = compute_orthogonality(c, p);
    if (rep.offdiag_witness) {
        const auto& w = *rep.offdiag_witness;
        throw VerificationFailure("Gram entry (" + std::to_string(w.n) + "," + std::to_string(w.m) +
                                  ") = " + w.value.str() + " is nonzero");
    }
    if (rep.ratio_witness) {
        unsigned n = *rep.ratio_witness;
        throw VerificationFailure("norm ratio at n=" + std::to_string(n) + " differs from the tau product");
    }
    if (!rep.grid_are_roots) throw VerificationFailure("spectral grid is not the root set of I_{N+1}");
    return rep;
}

/// Truncation cases of the Bannai-Ito recurrence, u_{N+1} = A_N C_{N+1} = 0.
enum class BiTruncationTag { Even1, Even2, Even3, Even4, Odd_i, Odd_ii };

/**
 * N even: 1) r1 - rho1, 2) r2 - rho1, 3) r1 - rho2, 4) r2 - rho2 equal to (N+1)/2.
 * N odd: i) rho1 + rho2 = -(N+1)/2, ii) r1 + r2 = (N+1)/2.
 */
inline BiTruncationTag classify_bi_truncation(const ParamSet& p, unsigned N) {
    const Rational n1(static_cast<long>(N) + 1, 2);
    if (N % 2 == 0) {
        if (p.r1 - p.rho1 == n1) return BiTruncationTag::Even1;
        if (p.r2 - p.rho1 == n1) return BiTruncationTag::Even2;
        if (p.r1 - p.rho2 == n1) return BiTruncationTag::Even3;
        if (p.r2 - p.rho2 == n1) return BiTruncationTag::Even4;
    } else {
        if (p.rho1 + p.rho2 == -n1) return BiTruncationTag::Odd_i;
        if (p.r1 + p.r2 == n1) return BiTruncationTag::Odd_ii;
    }
    throw NotTruncated("no Bannai-Ito truncation condition holds for N=" + std::to_string(N));
}

/// Gram check of B_0..B_N; norm ratios are products of u_n = A_{n-1} C_n.
inline OrthoReport compute_bi_orthogonality(const ParamSet& p, unsigned N) {
    const BiTruncationTag tag = classify_bi_truncation(p, N);
    OrthoReport rep{{N % 2 == 0 ? TruncationTag::EvenCase1 : TruncationTag::OddCase_ii, N}, p, {}, {}, {}, {}, {},
                    Rational(0), {}, {}, true, 0, std::nullopt, std::nullopt};
    ParamSet args = p;
    switch (tag) {
        case BiTruncationTag::Even1:
        case BiTruncationTag::Even2: break;
        case BiTruncationTag::Even3:
        case BiTruncationTag::Even4:
        case BiTruncationTag::Odd_i: args = {p.rho2, p.rho1, p.r1, p.r2}; break;
        case BiTruncationTag::Odd_ii: args = {-p.r1, -p.r2, -p.rho1, -p.rho2}; break;
    }
    for (long k = 0; k <= static_cast<long>(N); ++k) {
        rep.grid.push_back(tag == BiTruncationTag::Odd_ii ? alternate_grid(p.r1, k) : bi_grid(args.rho1, k));
        rep.weights.push_back(bi_weight(args, static_cast<unsigned>(k)));
    }
    rep.weight_sign = detail::common_sign(rep.weights);
    Rational prod(1);
    rep.expected_ratios.push_back(prod);
    for (unsigned n = 1; n <= N; ++n) {
        Rational u = bi_coefficients(p, static_cast<long>(n) - 1).A * bi_coefficients(p, n).C;
        rep.taus.push_back(u);
        rep.tau_positive.push_back(u.sign() > 0);
        prod *= u;
        rep.expected_ratios.push_back(prod);
    }
    auto B = bi_table(p, N + 1);
    detail::check_roots(rep, B[N + 1]);
    detail::fill_gram(rep, B);
    return rep;
}

}  // namespace cbi
