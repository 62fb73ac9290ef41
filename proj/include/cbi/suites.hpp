#pragma once

/**
 * @file suites.hpp
 * @brief Verification suites driven by the CLI: case lists in, one JSON report out.
 *
 * Every failing suite carries a witness with a single `cbi verify ...` command that
 * reproduces the first failing case on its own.
 */

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbi/family/sampling.hpp"
#include "cbi/report/serialize.hpp"

namespace cbi::suites {

using report::Json;

struct Witness {
    std::string detail;
    std::string reproduce;
};

struct SuiteResult {
    std::string suite;
    Json config = Json::object();
    Json cases = Json::array();
    std::optional<Witness> witness;

    bool passed() const { return !witness.has_value(); }

    Json to_json() const {
        Json j{{"suite", suite}, {"config", config}, {"cases", cases}, {"pass", passed()}};
        if (witness) j["witness"] = Json{{"detail", witness->detail}, {"reproduce", witness->reproduce}};
        return j;
    }

    void fail(std::size_t index, const std::string& detail, const std::string& reproduce) {
        if (!witness) witness = Witness{"case " + std::to_string(index) + ": " + detail, reproduce};
    }
};

/// "--rho1=1 --rho2=1/2 ..." ('=' keeps negative values from parsing as options).
inline std::string param_flags(const ParamSet& p) {
    return "--rho1=" + p.rho1.str() + " --rho2=" + p.rho2.str() + " --r1=" + p.r1.str() + " --r2=" + p.r2.str();
}

inline std::string flag(const char* name, const Rational& v) { return std::string(" --") + name + "=" + v.str(); }
inline std::string flag(const char* name, long v) { return std::string(" --") + name + "=" + std::to_string(v); }

/// Shortest round-trip text of a double.
inline std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct ParamAlpha {
    ParamSet params;
    Rational alpha;
};

/// draws generic parameter sets, each paired with `alphas` values of alpha.
inline std::vector<ParamAlpha> draw_param_alpha(std::uint64_t seed, unsigned draws, unsigned alphas,
                                                const GenericityOptions& opt = {}) {
    RationalSampler rng(seed);
    std::vector<ParamAlpha> out;
    for (unsigned i = 0; i < draws; ++i) {
        const ParamSet p = draw_generic_params(rng, opt);
        for (unsigned j = 0; j < alphas; ++j) out.push_back({p, rng.next()});
    }
    return out;
}

// eigen

inline SuiteResult eigen_suite(const std::vector<ParamAlpha>& cases, unsigned n_max) {
    SuiteResult res;
    res.suite = "eigen";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [p, a] = cases[i];
        EigenReport rep = verify_eigen(p, a, n_max);
        res.cases.push_back(report::to_json(rep));
        if (!rep.passed()) {
            res.fail(i, "D_a I_n != Lambda_n I_n at n=" + std::to_string(rep.failures.front().n),
                     "cbi verify eigen " + param_flags(p) + flag("alpha", a) + flag("n", rep.failures.front().n));
        }
    }
    return res;
}

// five-term

struct FiveTermRange {
    unsigned n_max = 12;
    long k_min = -8;
    long k_max = 8;
};

inline SuiteResult five_term_suite(const std::vector<ParamAlpha>& cases, const FiveTermRange& r) {
    SuiteResult res;
    res.suite = "five-term";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [p, a] = cases[i];
        const PolyTable table = make_table(Family::Complementary, p, r.n_max);
        Json grids = Json::array();
        for (GridKind kind : {GridKind::Standard, GridKind::Alternate}) {
            const Rational h = default_grid_parameter(p, kind);
            EigenReport rep = five_term_apply(p, a, table, h, r.k_min, r.k_max, kind);
            Json j = report::to_json(rep);
            j["h"] = h.str();
            grids.push_back(j);
            if (!rep.passed()) {
                const auto& f = rep.failures.front();
                res.fail(i, rep.check + " residual at n=" + std::to_string(f.n) + " k=" + std::to_string(*f.k),
                         "cbi verify five-term " + param_flags(p) + flag("alpha", a) + flag("n", f.n) +
                             flag("k-min", *f.k) + flag("k-max", *f.k));
            }
        }
        res.cases.push_back(Json{{"params", report::to_json(p)}, {"alpha", a.str()}, {"grids", grids}});
    }
    return res;
}

// ortho

struct OrthoInput {
    ParamSet params;
    unsigned N = 0;
    bool positive = false;  // built from a positive parametrization
    std::string flags;      // CLI flags that rebuild this case
};

inline OrthoInput even_input(const Rational& a, const Rational& b, const Rational& c, unsigned N) {
    return {positive_even_params(a, b, c, N), N, true,
            "--even a=" + a.str() + " b=" + b.str() + " c=" + c.str() + " N=" + std::to_string(N)};
}

inline OrthoInput odd_input(const Rational& zeta, const Rational& xi, const Rational& chi, unsigned N) {
    return {positive_odd_params(zeta, xi, chi, N), N, true,
            "--odd zeta=" + zeta.str() + " xi=" + xi.str() + " chi=" + chi.str() + " N=" + std::to_string(N)};
}

inline OrthoInput explicit_ortho_input(const ParamSet& p, unsigned N) {
    return {p, N, false, param_flags(p) + flag("N", static_cast<long>(N))};
}

/// Even triples x N in {2,4,6} and odd triples x N in {3,5}.
inline std::vector<OrthoInput> default_ortho_sweep() {
    const std::vector<std::array<Rational, 3>> triples = {
        {Rational(1), Rational(1), Rational(1)}, {Rational(2), Rational(1, 2), Rational(3)},
        {Rational(1, 3), Rational(2), Rational(1)}};
    std::vector<OrthoInput> out;
    for (const auto& t : triples) {
        for (unsigned N : {2u, 4u, 6u}) out.push_back(even_input(t[0], t[1], t[2], N));
    }
    for (const auto& t : triples) {
        for (unsigned N : {3u, 5u}) out.push_back(odd_input(t[0], t[1], t[2], N));
    }
    return out;
}

inline SuiteResult ortho_suite(const std::vector<OrthoInput>& cases) {
    SuiteResult res;
    res.suite = "ortho";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& in = cases[i];
        const TruncationCase c = classify_truncation(in.params, in.N);
        OrthoReport rep = compute_orthogonality(c, in.params);
        Json j = report::to_json(rep);
        const bool positive_ok = !in.positive || (rep.positive_taus() && rep.weight_sign != 0);
        j["positivity_required"] = in.positive;
        res.cases.push_back(j);
        const std::string again = "cbi verify ortho " + in.flags;
        if (rep.offdiag_witness) {
            res.fail(i, "G[" + std::to_string(rep.offdiag_witness->n) + "][" + std::to_string(rep.offdiag_witness->m) +
                            "] = " + rep.offdiag_witness->value.str(), again);
        } else if (rep.ratio_witness) {
            res.fail(i, "norm ratio mismatch at n=" + std::to_string(*rep.ratio_witness), again);
        } else if (!rep.grid_are_roots) {
            res.fail(i, "grid points are not the roots of I_{N+1}", again);
        } else if (!positive_ok) {
            res.fail(i, "positive parametrization gives a non-positive tau or mixed weight signs", again);
        }
    }
    return res;
}

// algebra

struct AlgebraInput {
    ParamSet params;
    Rational alpha;
    Rational beta;
};

inline std::vector<AlgebraInput> draw_algebra_inputs(std::uint64_t seed, unsigned draws) {
    RationalSampler rng(seed);
    std::vector<AlgebraInput> out;
    for (unsigned i = 0; i < draws; ++i) {
        const ParamSet p = draw_generic_params(rng);
        const Rational a = rng.next();
        out.push_back({p, a, rng.next_nonzero()});
    }
    return out;
}

inline std::array<Rational, 5> constants_array(const StructureConstants& d) { return {d.d1, d.d2, d.d3, d.d4, d.d5}; }

inline SuiteResult algebra_suite(const std::vector<AlgebraInput>& cases, unsigned max_degree = default_monomial_cap) {
    SuiteResult res;
    res.suite = "algebra";
    static const char* const names[5] = {"d1", "d2", "d3", "d4", "d5"};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [p, a, b] = cases[i];
        const auto ops = realization(p, a);
        const StructureConstants d = structure_constants(p, a);
        const RelationReport rel = check_relations(ops, d, max_degree);
        const CasimirReport cas = compute_casimir(ops, d);
        const AlphaShiftReport shift = alpha_shift_check(p, a, b, max_degree);
        res.cases.push_back(Json{{"params", report::to_json(p)},
                                 {"alpha", a.str()},
                                 {"constants", report::to_json(d)},
                                 {"relations", report::to_json(rel)},
                                 {"casimir", report::to_json(cas)},
                                 {"alpha_shift", report::to_json(shift)}});
        const std::string again = "cbi verify algebra " + param_flags(p) + flag("alpha", a) + flag("beta", b);
        for (const auto& r : rel.relations) {
            if (!r.action_pass) res.fail(i, "relation " + r.name + " fails on x^" + std::to_string(*r.action_witness), again);
        }
        if (!cas.passed()) res.fail(i, cas.scalar ? "Casimir not central" : "Casimir normal form not scalar", again);
        if (!shift.k1_is_shifted_family || !shift.k3_is_commutator || !shift.k3_is_shifted_family) {
            res.fail(i, "alpha-shifted generators differ from the shifted family", again);
        }
        for (int k = 0; k < 5; ++k) {
            if (!shift.match[k]) {
                std::string detail = std::string("alpha-shift ") + names[k] + "~ closed form " +
                                     constants_array(shift.printed)[k].str() + " != recomputed " +
                                     constants_array(shift.recomputed)[k].str();
                if (k == 0 && shift.corrected_d1_matches) detail += " (matches after subtracting beta^2)";
                res.fail(i, detail, again);
            }
        }
        for (const auto& r : shift.relations.relations) {
            if (!r.action_pass) res.fail(i, "alpha-shifted relation " + r.name + " fails", again);
        }
    }
    return res;
}

// dual -1 Hahn

struct DualHahnInput {
    DualHahnParams params;
    Rational alpha;
};

inline std::string dual_hahn_flags(const DualHahnInput& in) {
    return "--rho2=" + in.params.rho2.str() + " --r1=" + in.params.r1.str() + " --r2=" + in.params.r2.str() +
           flag("alpha", in.alpha);
}

/// Rejects draws whose 3F2 forms or E coefficients are singular.
inline std::vector<DualHahnInput> draw_dual_hahn_inputs(std::uint64_t seed, unsigned draws, unsigned n_max) {
    RationalSampler rng(seed);
    std::vector<DualHahnInput> out;
    while (out.size() < draws) {
        DualHahnInput in{{rng.next_nonzero(), rng.next(), rng.next()}, rng.next()};
        try {
            for (unsigned n = 0; n <= n_max; ++n) {
                (void)dual_m1_hahn_poly(in.params, n);
                if (n > 0 && dual_m1_hahn_sigma(in.params, static_cast<long>(n)).is_zero()) throw SingularParameter("sigma");
            }
            (void)build_E_alpha(in.params, in.alpha);
        } catch (const Error&) {
            continue;
        }
        out.push_back(in);
    }
    return out;
}

inline SuiteResult dual_hahn_suite(const std::vector<DualHahnInput>& cases, unsigned n_max,
                                   unsigned max_degree = default_monomial_cap) {
    SuiteResult res;
    res.suite = "dual-hahn";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& in = cases[i];
        const DualHahnLimitReport lim = verify_dual_hahn_limit(in.params, in.alpha, n_max);
        const DualHahnAlgebraReport alg = dual_hahn_algebra_check(in.params, in.alpha, max_degree);
        res.cases.push_back(Json{{"limit", report::to_json(lim)}, {"algebra", report::to_json(alg)}});
        const std::string again = "cbi verify dual-hahn " + dual_hahn_flags(in) + flag("n", static_cast<long>(n_max));
        if (lim.tau_witness) res.fail(i, "lim tau_n != sigma_n at n=" + std::to_string(*lim.tau_witness), again);
        if (lim.operator_witness) res.fail(i, "operator limit: " + *lim.operator_witness, again);
        if (lim.eigen_witness) res.fail(i, "E Q_n != nu_n Q_n at n=" + std::to_string(*lim.eigen_witness), again);
        if (lim.closed_form_witness) {
            res.fail(i, "3F2 form differs from the recurrence at n=" + std::to_string(*lim.closed_form_witness), again);
        }
        for (const auto& r : alg.relations.relations) {
            if (!r.action_pass) res.fail(i, "limit relation " + r.name + " fails", again);
        }
    }
    return res;
}

// symmetric Hahn

struct HahnInput {
    Rational r1;
    Rational r2;
    unsigned N = 4;
};

inline SuiteResult hahn_suite(const std::vector<HahnInput>& cases) {
    SuiteResult res;
    res.suite = "hahn";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& in = cases[i];
        const SymmetricHahnReport rep = symmetric_hahn_reduction(in.r1, in.r2, in.N);
        res.cases.push_back(report::to_json(rep));
        const std::string again =
            "cbi verify hahn" + flag("r1", in.r1) + flag("r2", in.r2) + flag("N", static_cast<long>(in.N));
        if (!rep.reflection_terms_vanish) res.fail(i, "reflection coefficients are nonzero", again);
        if (!rep.three_term_matches) res.fail(i, "reduced operator is not the three-term Hahn operator", again);
        if (!rep.eigenvalues_match) res.fail(i, "eigenvalues differ from n(n-2r1-2r2+1)/4", again);
        if (!rep.hahn_form_matches) res.fail(i, "B, D do not take the Hahn form at r1=(N+1)/2", again);
        if (!rep.diagonal_vanishes) res.fail(i, "diagonal term does not vanish", again);
        if (rep.omega_witness) res.fail(i, "tau_n != omega_n at n=" + std::to_string(*rep.omega_witness), again);
        if (!rep.d2_d3_d4_zero) res.fail(i, "d2, d3, d4 are not all zero", again);
        if (!rep.actual_d1_matches || !rep.actual_d5_matches) res.fail(i, "d1 or d5 differ from the reduced values", again);
        if (!rep.reduced_relations.action_passed()) res.fail(i, "reduced relations fail", again);
    }
    return res;
}

// para-Krawtchouk

struct ParaKrawtchoukInput {
    unsigned N = 5;
    Rational gamma;
};

inline SuiteResult para_krawtchouk_suite(const std::vector<ParaKrawtchoukInput>& cases) {
    SuiteResult res;
    res.suite = "para-krawtchouk";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& in = cases[i];
        const ParaKrawtchoukReport rep = verify_para_krawtchouk(in.N, in.gamma);
        res.cases.push_back(report::to_json(rep));
        const std::string again = "cbi verify para-krawtchouk" + flag("N", static_cast<long>(in.N)) + flag("gamma", in.gamma);
        if (!rep.eigen.passed()) res.fail(i, "eigen equation fails at n=" + std::to_string(rep.eigen.failures.front().n), again);
        if (!rep.symmetric) res.fail(i, "I_n(-x) != (-1)^n I_n(x)", again);
        if (!rep.tau_next.is_zero()) res.fail(i, "tau_{N+1} = " + rep.tau_next.str(), again);
        if (!rep.truncation) res.fail(i, "truncation: " + rep.truncation_error, again);
        if (rep.orthogonality && !rep.orthogonality->passed()) res.fail(i, "orthogonality fails", again);
    }
    return res;
}

// Askey-Wilson limit

inline std::string eps_flag(const std::vector<double>& eps) {
    std::string s = " --eps=";
    for (std::size_t i = 0; i < eps.size(); ++i) s += (i ? "," : "") + shortest(eps[i]);
    return s;
}

inline SuiteResult aw_limit_suite(const std::vector<ParamSet>& cases, unsigned n_max, const std::vector<double>& eps) {
    SuiteResult res;
    res.suite = "aw-limit";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const AWLimitReport rep = verify_aw_limit(cases[i], n_max, eps);
        res.cases.push_back(report::to_json(rep));
        if (rep.witness) {
            res.fail(i, *rep.witness, "cbi verify aw-limit " + param_flags(cases[i]) + flag("n", static_cast<long>(n_max)) +
                                         eps_flag(eps));
        }
    }
    return res;
}

}  // namespace cbi::suites
