#pragma once

/**
 * @file representations.hpp
 * @brief Matrix representations of the CBI algebra: monic and orthonormal bases, and the dual basis on the grid.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbi/algebra/matrix.hpp"
#include "cbi/algebra/realization.hpp"
#include "cbi/spectral/truncation.hpp"

namespace cbi {

struct NamedCheck {
    std::string name;
    bool pass = false;
};

struct MonicRepresentation {
    Generators<ExactMatrix> gens;
    std::vector<NamedCheck> relations;  // on the leading (size-2) block
    std::optional<Rational> casimir;    // Q = q 1 on the leading block, if so

    bool passed() const {
        for (const auto& c : relations) {
            if (!c.pass) return false;
        }
        return casimir.has_value();
    }
};

/// kappa1 = diag(Lambda_n), r = diag((-1)^n), kappa2 with sub 1, diag (-1)^n rho2, super tau_n; kappa3 = [kappa1, kappa2].
inline Generators<ExactMatrix> monic_generators(const ParamSet& p, const Rational& alpha, std::size_t size) {
    ExactMatrix K1(size), K2(size), P(size);
    for (std::size_t n = 0; n < size; ++n) {
        const long ln = static_cast<long>(n);
        K1(n, n) = eigenvalue_lambda(p, alpha, ln);
        P(n, n) = parity_sign(ln);
        K2(n, n) = parity_sign(ln) * p.rho2;
        if (n + 1 < size) {
            K2(n + 1, n) = Rational(1);
            K2(n, n + 1) = cbi_tau(p, ln + 1);
        }
    }
    ExactMatrix K3 = K1 * K2 - K2 * K1;
    return {K1, K2, K3, P, ExactMatrix::identity(size)};
}

inline MonicRepresentation monic_rep_matrices(const ParamSet& p, const Rational& alpha, std::size_t size) {
    if (size < 3) throw DomainError("representation size must be at least 3");
    MonicRepresentation rep{monic_generators(p, alpha, size), {}, std::nullopt};
    const StructureConstants d = structure_constants(p, alpha);
    const std::size_t inner = size - 2;
    for (const auto& r : relation_residuals(rep.gens, d)) rep.relations.push_back({r.name, r.value.leading_block_zero(inner)});
    ExactMatrix Q = casimir_element(rep.gens, d);
    const Rational q = Q(0, 0);
    if ((Q - q * rep.gens.I).leading_block_zero(inner)) rep.casimir = q;
    return rep;
}

struct OrthonormalReport {
    std::size_t size = 0;
    std::vector<double> a;  // a_0 = 0, a_n = sqrt(tau_n)
    std::vector<double> b;  // (-1)^n rho2
    double relation_residual = 0;    // relative, leading block, max over relations
    double similarity_residual = 0;  // |diag(pi) M diag(pi)^{-1} - J|
    std::optional<double> spectrum_error;  // max |eig - grid| when the size is a truncation size
    double relation_tolerance = 1e-10;
    double spectrum_tolerance = 1e-9;

    bool passed() const {
        return relation_residual < relation_tolerance && similarity_residual < relation_tolerance &&
               (!spectrum_error || *spectrum_error < spectrum_tolerance);
    }
};

namespace detail {

inline Eigen::MatrixXd to_eigen(const ExactMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(std::size_t(i), std::size_t(j)).to_double();
    }
    return out;
}

inline StructureConstantsT<double> to_double(const StructureConstants& d) {
    return {d.d1.to_double(), d.d2.to_double(), d.d3.to_double(), d.d4.to_double(), d.d5.to_double()};
}

}  // namespace detail

/// Symmetric tridiagonal kappa2 in double precision; requires tau_n > 0 for n < size.
inline OrthonormalReport orthonormal_rep_check(const ParamSet& p, const Rational& alpha, std::size_t size) {
    if (size < 3) throw DomainError("representation size must be at least 3");
    OrthonormalReport rep;
    rep.size = size;
    const auto n = static_cast<Eigen::Index>(size);
    rep.a.push_back(0.0);
    std::vector<double> pi{1.0};
    for (std::size_t k = 1; k < size; ++k) {
        Rational t = cbi_tau(p, static_cast<long>(k));
        if (t.sign() <= 0) throw DomainError("tau_" + std::to_string(k) + " = " + t.str() + " is not positive");
        rep.a.push_back(std::sqrt(t.to_double()));
        pi.push_back(pi.back() * rep.a.back());
    }
    Eigen::MatrixXd K1 = Eigen::MatrixXd::Zero(n, n), J = Eigen::MatrixXd::Zero(n, n), P = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const long lk = static_cast<long>(k);
        K1(k, k) = eigenvalue_lambda(p, alpha, lk).to_double();
        P(k, k) = lk % 2 == 0 ? 1.0 : -1.0;
        rep.b.push_back((parity_sign(lk) * p.rho2).to_double());
        J(k, k) = rep.b.back();
        if (k + 1 < n) {
            J(k, k + 1) = rep.a[std::size_t(k + 1)];
            J(k + 1, k) = rep.a[std::size_t(k + 1)];
        }
    }
    Eigen::MatrixXd K3 = K1 * J - J * K1;
    const Generators<Eigen::MatrixXd> gens{K1, J, K3, P, Eigen::MatrixXd::Identity(n, n)};
    const double scale = std::max({1.0, K1.cwiseAbs().maxCoeff(), J.cwiseAbs().maxCoeff(), K3.cwiseAbs().maxCoeff()});
    const Eigen::Index inner = n - 2;
    for (const auto& r : relation_residuals(gens, detail::to_double(structure_constants(p, alpha)))) {
        double res = r.value.topLeftCorner(inner, inner).cwiseAbs().maxCoeff() / (scale * scale);
        rep.relation_residual = std::max(rep.relation_residual, res);
    }
    Eigen::MatrixXd M = detail::to_eigen(monic_generators(p, alpha, size).K2);
    Eigen::VectorXd d(n);
    for (Eigen::Index k = 0; k < n; ++k) d(k) = pi[std::size_t(k)];
    Eigen::MatrixXd S = d.asDiagonal() * M * d.cwiseInverse().asDiagonal();
    rep.similarity_residual = (S - J).cwiseAbs().maxCoeff() / std::max(1.0, J.cwiseAbs().maxCoeff());

    std::optional<TruncationCase> trunc;
    try {
        trunc = classify_truncation(p, static_cast<unsigned>(size - 1));
    } catch (const NotTruncated&) {
    } catch (const InadmissibleTruncation&) {
    }
    if (trunc) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
        std::vector<double> grid;
        for (const auto& x : spectral_grid(*trunc, p)) grid.push_back(x.to_double());
        std::sort(grid.begin(), grid.end());
        double err = 0;
        for (Eigen::Index k = 0; k < n; ++k) err = std::max(err, std::abs(es.eigenvalues()(k) - grid[std::size_t(k)]));
        rep.spectrum_error = err;
    }
    return rep;
}

struct DualBasisReport {
    TruncationCase truncation;
    std::vector<Rational> grid;
    Rational t;              // grid offset: x_k = theta_{j_k}(t)
    std::vector<long> label; // j_k
    ExactMatrix r, kappa1, kappa2;
    long kappa1_bandwidth = -1;
    bool grid_matches_theta = true;
    bool closed = true;      // no operator term leaves the grid with a nonzero coefficient
    bool r_block_diagonal = true;
    bool r_diagonal_matches = true;
    bool kappa2_diagonal = true;
    bool kappa1_eigen = true;  // kappa1 maps samples of I_n to Lambda_n times them
    std::optional<std::string> witness;

    bool passed() const {
        return grid_matches_theta && closed && r_block_diagonal && r_diagonal_matches && kappa2_diagonal &&
               kappa1_eigen && kappa1_bandwidth <= 2;
    }
};

/// theta_{2k} = k + t, theta_{2k+1} = -(k + t + 1).
inline Rational dual_theta(long j, const Rational& t) {
    const long k = j >= 0 ? j / 2 : -((-j + 1) / 2);
    return (j - 2 * k == 0) ? Rational(k) + t : -(Rational(k) + t + 1);
}

namespace detail {

inline void note(DualBasisReport& rep, const std::string& s) {
    if (!rep.witness) rep.witness = s;
}

/// (M f)_k = sum over terms c(x_k) f(sigma(x_k)) with sigma(x_k) on the grid.
inline ExactMatrix sample_matrix(const ShiftReflectOp& op, const std::vector<Rational>& grid,
                                 const std::map<Rational, std::size_t>& index, DualBasisReport& rep,
                                 const char* name) {
    ExactMatrix m(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Rational& x = grid[k];
        for (const auto& [key, c] : op.terms()) {
            if (c.has_pole_at(x)) {
                throw GridPole(std::string(name) + " coefficient has a pole at x_" + std::to_string(k) + " = " + x.str(),
                               static_cast<long>(k));
            }
            const Rational v = c(x);
            if (v.is_zero()) continue;
            const Rational target = key.slope() * x + key.offset();
            auto it = index.find(target);
            if (it == index.end()) {
                rep.closed = false;
                note(rep, std::string(name) + " maps x_" + std::to_string(k) + " off the grid to " + target.str());
                continue;
            }
            m(k, it->second) += v;
        }
    }
    return m;
}

}  // namespace detail

/// Operators as matrices on grid samples (f(x_0), ..., f(x_N)) for a truncated case.
inline DualBasisReport dual_basis_structure(const TruncationCase& c, const ParamSet& p, const Rational& alpha) {
    DualBasisReport rep{c, spectral_grid(c, p), Rational(0), {}, {}, {}, {}, -1, true, true, true, true, true, true, std::nullopt};
    const bool even_grid = c.even();
    if (even_grid) {
        rep.t = p.rho2;
    } else {
        rep.t = (c.tag == TruncationTag::OddCase_iii ? p.r2 : p.r1) - Rational(1, 2);
    }
    std::map<Rational, std::size_t> index;
    for (std::size_t k = 0; k < rep.grid.size(); ++k) {
        const long j = even_grid ? static_cast<long>(k) : -static_cast<long>(k);
        rep.label.push_back(j);
        if (rep.grid[k] != dual_theta(j, rep.t)) {
            rep.grid_matches_theta = false;
            detail::note(rep, "x_" + std::to_string(k) + " differs from theta_" + std::to_string(j));
        }
        index.emplace(rep.grid[k], k);
    }
    rep.r = detail::sample_matrix(build_P(p), rep.grid, index, rep, "r");
    rep.kappa1 = detail::sample_matrix(build_D_alpha(p, alpha), rep.grid, index, rep, "kappa1");
    rep.kappa2 = detail::sample_matrix(build_K2(), rep.grid, index, rep, "kappa2");
    rep.kappa1_bandwidth = rep.kappa1.bandwidth();

    auto block = [&](std::size_t k) { return even_grid ? (k + 1) / 2 : k / 2; };
    const std::size_t size = rep.grid.size();
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (block(i) != block(j) && !rep.r(i, j).is_zero()) {
                rep.r_block_diagonal = false;
                detail::note(rep, "r has entry outside its block at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (i != j && !rep.kappa2(i, j).is_zero()) rep.kappa2_diagonal = false;
        }
        if (rep.kappa2(i, i) != rep.grid[i]) rep.kappa2_diagonal = false;
        const long j = rep.label[i];
        const long m = j >= 0 ? j / 2 : -((-j + 1) / 2);
        const Rational den = (j - 2 * m == 0) ? Rational(m) + rep.t : -(Rational(m) + rep.t + 1);
        if (den.is_zero() && !p.rho2.is_zero()) {
            throw GridPole("r diagonal has a pole at x_" + std::to_string(i), static_cast<long>(i));
        }
        if (den.is_zero()) continue;  // rho2 = 0 and x_i = 0: r is the bare reflection there
        if (rep.r(i, i) != p.rho2 / den) {
            rep.r_diagonal_matches = false;
            detail::note(rep, "r diagonal at x_" + std::to_string(i) + " is " + rep.r(i, i).str());
        }
    }
    auto I = cbi_table(p, c.N);
    for (std::size_t n = 0; n <= c.N; ++n) {
        const Rational lam = eigenvalue_lambda(p, alpha, static_cast<long>(n));
        for (std::size_t i = 0; i < size; ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < size; ++j) s += rep.kappa1(i, j) * I[n](rep.grid[j]);
            if (s != lam * I[n](rep.grid[i])) {
                rep.kappa1_eigen = false;
                detail::note(rep, "kappa1 sample action fails for I_" + std::to_string(n));
            }
        }
    }
    return rep;
}

}  // namespace cbi
