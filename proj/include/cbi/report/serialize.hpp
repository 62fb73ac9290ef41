#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV serialization of tables, operators and verification reports.
 *
 * Rationals are always written as "p/q" strings; objects use insertion order so the
 * output is byte-stable.
 */

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbi/algebra/representations.hpp"
#include "cbi/limits/askey_wilson.hpp"
#include "cbi/limits/dual_hahn.hpp"
#include "cbi/limits/para_krawtchouk.hpp"
#include "cbi/limits/symmetric_hahn.hpp"
#include "cbi/operators/eigen.hpp"
#include "cbi/spectral/orthogonality.hpp"

namespace cbi::report {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

/// Ascending coefficients.
inline Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    if (p.is_zero()) out.push_back("0");
    return out;
}

inline Json to_json(const ParamSet& p) {
    return Json{{"rho1", p.rho1.str()}, {"rho2", p.rho2.str()}, {"r1", p.r1.str()}, {"r2", p.r2.str()}};
}

inline Json to_json(const DualHahnParams& p) {
    return Json{{"rho2", p.rho2.str()}, {"r1", p.r1.str()}, {"r2", p.r2.str()}};
}

inline Json to_json(const StructureConstants& d) {
    return Json{{"d1", d.d1.str()}, {"d2", d.d2.str()}, {"d3", d.d3.str()}, {"d4", d.d4.str()}, {"d5", d.d5.str()}};
}

inline std::string family_name(Family f) { return f == Family::BannaiIto ? "bi" : "cbi"; }

inline Json to_json(const PolyTable& t) {
    Json polys = Json::array();
    for (const auto& p : t.polys) polys.push_back(to_json(p));
    return Json{{"family", family_name(t.family)}, {"params", to_json(t.params)}, {"polys", polys}};
}

/// One row per polynomial: n, then the ascending coefficients.
inline std::string to_csv(const PolyTable& t) {
    std::ostringstream os;
    std::size_t width = t.polys.empty() ? 0 : t.polys.back().coefficients().size();
    for (const auto& p : t.polys) width = std::max(width, p.coefficients().size());
    os << "n";
    for (std::size_t k = 0; k < width; ++k) os << ",c" << k;
    os << "\n";
    for (std::size_t n = 0; n < t.polys.size(); ++n) {
        os << n;
        for (std::size_t k = 0; k < width; ++k) os << "," << t.polys[n].coeff(k).str();
        os << "\n";
    }
    return os.str();
}

inline Json to_json(const ShiftReflectOp& op) {
    Json out = Json::array();
    for (const auto& [key, c] : op.terms()) {
        out.push_back(Json{{"shift", key.shift.str()}, {"reflect", key.reflect}, {"num", to_json(c.num())},
                           {"den", to_json(c.den())}});
    }
    return out;
}

inline Json to_json(const EigenReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json j{{"n", f.n}};
        if (f.k) j["k"] = *f.k;
        j["residual"] = f.residual;
        failures.push_back(j);
    }
    return Json{{"check", r.check}, {"params", to_json(r.params)}, {"alpha", r.alpha.str()},
                {"max_n", r.max_n}, {"pass", r.passed()}, {"failures", failures}};
}

inline Json to_json(const OrthoReport& r) {
    Json gram = Json::array();
    for (const auto& row : r.gram) gram.push_back(to_json(row));
    Json j{{"case", to_string(r.truncation.tag)},
           {"N", r.truncation.N},
           {"params", to_json(r.params)},
           {"grid", to_json(r.grid)},
           {"weights", to_json(r.weights)},
           {"taus", to_json(r.taus)},
           {"gram", gram},
           {"gram_offdiag_max_abs", r.gram_offdiag_max_abs.str()},
           {"norm_ratios", to_json(r.norm_ratios)},
           {"expected_ratios", to_json(r.expected_ratios)},
           {"grid_are_roots", r.grid_are_roots},
           {"weight_sign", r.weight_sign},
           {"positive_taus", r.positive_taus()},
           {"orthogonal", r.orthogonal()},
           {"ratios_match", r.ratios_match()},
           {"pass", r.passed()}};
    if (r.offdiag_witness) {
        j["offdiag_witness"] = Json{{"n", r.offdiag_witness->n}, {"m", r.offdiag_witness->m},
                                    {"value", r.offdiag_witness->value.str()}};
    }
    if (r.ratio_witness) j["ratio_witness"] = *r.ratio_witness;
    return j;
}

/// Columns k, x_k, w~_k.
inline std::string to_csv(const OrthoReport& r) {
    std::ostringstream os;
    os << "k,x_k,w_k\n";
    for (std::size_t k = 0; k < r.grid.size(); ++k) os << k << "," << r.grid[k].str() << "," << r.weights[k].str() << "\n";
    return os.str();
}

inline Json to_json(const RelationReport& r) {
    Json rels = Json::array();
    for (const auto& x : r.relations) {
        Json j{{"name", x.name}, {"normal_form_pass", x.normal_form_pass}, {"action_pass", x.action_pass}};
        if (x.action_witness) j["action_witness_degree"] = *x.action_witness;
        if (!x.normal_form_residual.empty()) j["normal_form_residual"] = x.normal_form_residual;
        rels.push_back(j);
    }
    Json j{{"relations", rels}, {"action_pass", r.action_passed()}, {"normal_form_pass", r.normal_form_passed()}};
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

inline Json to_json(const CasimirReport& c) {
    Json j{{"scalar", c.scalar}};
    if (c.scalar) {
        j["value"] = c.value.str();
    } else {
        j["residual"] = c.residual;
    }
    j["central"] = c.commutes_K1 && c.commutes_K2 && c.commutes_K3 && c.commutes_P;
    j["pass"] = c.passed();
    return j;
}

inline Json to_json(const AlphaShiftReport& a) {
    Json match = Json::array();
    for (bool b : a.match) match.push_back(b);
    return Json{{"beta", a.beta.str()},
                {"k1_is_shifted_family", a.k1_is_shifted_family},
                {"k3_is_commutator", a.k3_is_commutator},
                {"k3_is_shifted_family", a.k3_is_shifted_family},
                {"closed_form", to_json(a.printed)},
                {"recomputed", to_json(a.recomputed)},
                {"match", match},
                {"d1_with_beta_squared", a.corrected_d1.str()},
                {"d1_with_beta_squared_matches", a.corrected_d1_matches},
                {"relations", to_json(a.relations)},
                {"pass", a.passed()}};
}

inline Json to_json(const MonicRepresentation& m) {
    Json rels = Json::array();
    for (const auto& c : m.relations) rels.push_back(Json{{"name", c.name}, {"pass", c.pass}});
    Json j{{"size", m.gens.I.size()}, {"relations", rels}};
    j["casimir"] = m.casimir ? Json(m.casimir->str()) : Json(nullptr);
    j["pass"] = m.passed();
    return j;
}

inline Json to_json(const OrthonormalReport& o) {
    Json j{{"size", o.size}, {"relation_residual", o.relation_residual}, {"similarity_residual", o.similarity_residual}};
    j["spectrum_error"] = o.spectrum_error ? Json(*o.spectrum_error) : Json(nullptr);
    j["pass"] = o.passed();
    return j;
}

inline Json to_json(const DualBasisReport& d) {
    std::vector<std::string> labels;
    for (long l : d.label) labels.push_back(std::to_string(l));
    Json j{{"case", to_string(d.truncation.tag)},
           {"N", d.truncation.N},
           {"t", d.t.str()},
           {"labels", labels},
           {"kappa1_bandwidth", d.kappa1_bandwidth},
           {"grid_matches_theta", d.grid_matches_theta},
           {"closed", d.closed},
           {"r_block_diagonal", d.r_block_diagonal},
           {"r_diagonal_matches", d.r_diagonal_matches},
           {"kappa2_diagonal", d.kappa2_diagonal},
           {"kappa1_eigen", d.kappa1_eigen},
           {"pass", d.passed()}};
    if (d.witness) j["witness"] = *d.witness;
    return j;
}

inline Json to_json(const DualHahnLimitReport& r) {
    Json j{{"params", to_json(r.params)},
           {"alpha", r.alpha.str()},
           {"n_max", r.n_max},
           {"tau_limits", to_json(r.tau_limits)},
           {"sigmas", to_json(r.sigmas)},
           {"samples", to_json(r.samples)},
           {"operator_checks", r.operator_checks},
           {"pass", r.passed()}};
    if (r.tau_witness) j["tau_witness"] = *r.tau_witness;
    if (r.operator_witness) j["operator_witness"] = *r.operator_witness;
    if (r.eigen_witness) j["eigen_witness"] = *r.eigen_witness;
    if (r.closed_form_witness) j["closed_form_witness"] = *r.closed_form_witness;
    return j;
}

inline Json to_json(const DualHahnAlgebraReport& r) {
    return Json{{"gammas", to_json(r.gammas)}, {"relations", to_json(r.relations)}, {"pass", r.passed()}};
}

inline Json to_json(const SymmetricHahnReport& r) {
    Json j{{"r1", r.r1.str()},
           {"r2", r.r2.str()},
           {"N", r.N},
           {"reflection_terms_vanish", r.reflection_terms_vanish},
           {"three_term_matches", r.three_term_matches},
           {"eigenvalues_match", r.eigenvalues_match},
           {"hahn_form_matches", r.hahn_form_matches},
           {"diagonal_vanishes", r.diagonal_vanishes},
           {"tau_equals_omega", !r.omega_witness.has_value()},
           {"d2_d3_d4_zero", r.d2_d3_d4_zero},
           {"constants", to_json(r.constants)},
           {"truncated_constants", to_json(r.truncated_constants)},
           {"closed_form_d1", r.printed_d1.str()},
           {"closed_form_d5", r.printed_d5.str()},
           {"closed_form_d1_matches", r.printed_d1_matches},
           {"closed_form_d5_matches", r.printed_d5_matches},
           {"actual_d1", r.actual_d1.str()},
           {"actual_d5", r.actual_d5.str()},
           {"reduced_relations", to_json(r.reduced_relations)},
           {"pass", r.passed()}};
    if (r.omega_witness) j["omega_witness"] = *r.omega_witness;
    return j;
}

inline Json to_json(const ParaKrawtchoukReport& r) {
    Json j{{"N", r.N}, {"gamma", r.gamma.str()}, {"params", to_json(r.params)}, {"alpha", r.alpha.str()},
           {"eigen", to_json(r.eigen)}, {"symmetric", r.symmetric}, {"tau_next", r.tau_next.str()}};
    if (r.orthogonality) {
        j["orthogonality"] = to_json(*r.orthogonality);
    } else {
        j["truncation_error"] = r.truncation_error;
    }
    j["pass"] = r.passed();
    return j;
}

/// Non-finite doubles (the first ratio of each n) become null.
inline Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json to_json(const AWLimitReport& r) {
    Json tables = Json::array();
    for (unsigned n = 0; n <= r.n_max; ++n) {
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            if (row.n != static_cast<long>(n)) continue;
            rows.push_back(Json{{"eps", row.eps},
                                {"alpha_re", row.alpha_scaled.real()},
                                {"alpha_im", row.alpha_scaled.imag()},
                                {"alpha_err", row.alpha_error},
                                {"alpha_ratio", number(row.alpha_ratio)},
                                {"gamma_re", row.gamma_scaled.real()},
                                {"gamma_im", row.gamma_scaled.imag()},
                                {"gamma_err", row.gamma_error},
                                {"gamma_ratio", number(row.gamma_ratio)}});
        }
        tables.push_back(Json{{"n", n},
                              {"alpha_star", r.targets[n].alpha_star.str()},
                              {"gamma_star", r.targets[n].gamma_star.str()},
                              {"rows", rows}});
    }
    Json j{{"params", to_json(r.params)},
           {"eps", r.eps},
           {"ratio_window", {r.ratio_low, r.ratio_high}},
           {"final_factor", r.final_factor},
           {"tables", tables},
           {"pass", r.passed()}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cbi::report
