#pragma once

/**
 * @file realization.hpp
 * @brief The CBI algebra: relations, Casimir, and the realization by K1 = D_a, K2 = x, K3, P.
 *
 * Relations and the Casimir are written once as templates over the element type so the
 * same expressions are checked on operator normal forms, on the sequential action on
 * polynomials, and on representation matrices.
 */

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbi/operators/dunkl.hpp"

namespace cbi {

template <class S>
struct StructureConstantsT {
    S d1, d2, d3, d4, d5;
};
using StructureConstants = StructureConstantsT<Rational>;

template <class M>
struct Generators {
    M K1, K2, K3, P, I;
};

template <class M>
struct NamedElement {
    std::string name;
    M value;
};

/// lhs - rhs of each defining relation; all vanish in a realization.
template <class M, class S>
std::vector<NamedElement<M>> relation_residuals(const Generators<M>& e, const StructureConstantsT<S>& d) {
    const S half = S(1) / S(2);
    const S two(2);
    const M& K1 = e.K1;
    const M& K2 = e.K2;
    const M& K3 = e.K3;
    const M& P = e.P;
    const M K2sq = K2 * K2;
    std::vector<NamedElement<M>> out;
    out.push_back({"[K1,P]=0", K1 * P - P * K1});
    out.push_back({"{K2,P}=2d3", K2 * P + P * K2 - (two * d.d3) * e.I});
    out.push_back({"{K3,P}=0", K3 * P + P * K3});
    out.push_back({"[K1,K2]=K3", K1 * K2 - K2 * K1 - K3});
    M rhs13 = half * (K1 * K2 + K2 * K1) - d.d2 * (K3 * P) - d.d3 * (K1 * P) + d.d1 * K2 - (d.d1 * d.d3) * P;
    out.push_back({"[K1,K3]", K1 * K3 - K3 * K1 - rhs13});
    M rhs32 = half * K2sq + d.d2 * (K2sq * P) + (two * d.d3) * (K1 * P) + (two * d.d3) * (K3 * P) + K1 + d.d4 * P +
              d.d5 * e.I;
    out.push_back({"[K3,K2]", K3 * K2 - K2 * K3 - rhs32});
    out.push_back({"P^2=I", P * P - e.I});
    return out;
}

template <class M, class S>
M casimir_element(const Generators<M>& e, const StructureConstantsT<S>& d) {
    const S half = S(1) / S(2);
    const S quarter = S(1) / S(4);
    const S two(2);
    const M K2sq = e.K2 * e.K2;
    return half * (K2sq * e.K1 + e.K1 * K2sq) - (d.d2 * half) * (K2sq * e.P) + e.K1 * e.K1 - e.K3 * e.K3 +
           (d.d1 - quarter) * K2sq + (d.d3 - d.d2) * (e.K1 * e.P) + (two * d.d5) * e.K1 +
           (d.d1 * d.d3 - d.d2 * d.d5) * e.P;
}

/// A linear map on polynomials evaluated by sequential application (no operator composition).
class PolyAction {
public:
    using Fn = std::function<Poly(const Poly&)>;

    explicit PolyAction(Fn f) : f_(std::move(f)) {}
    static PolyAction of(const ShiftReflectOp& op) {
        return PolyAction([op](const Poly& p) { return op.apply(p); });
    }
    static PolyAction identity() {
        return PolyAction([](const Poly& p) { return p; });
    }

    Poly operator()(const Poly& p) const { return f_(p); }

    friend PolyAction operator+(const PolyAction& a, const PolyAction& b) {
        return PolyAction([a, b](const Poly& p) { return a(p) + b(p); });
    }
    friend PolyAction operator-(const PolyAction& a, const PolyAction& b) {
        return PolyAction([a, b](const Poly& p) { return a(p) - b(p); });
    }
    friend PolyAction operator*(const PolyAction& a, const PolyAction& b) {
        return PolyAction([a, b](const Poly& p) { return a(b(p)); });
    }
    friend PolyAction operator*(const Rational& c, const PolyAction& a) {
        return PolyAction([c, a](const Poly& p) { return a(p) * c; });
    }

private:
    Fn f_;
};

inline ShiftReflectOp build_K2() { return ShiftReflectOp::multiplication(RatFunc::x()); }

/// P = R + (rho2/x)(1 - R).
inline ShiftReflectOp build_P(const ParamSet& p) {
    RatFunc c(Poly(p.rho2), Poly::x());
    ShiftReflectOp op;
    op.add_term({Rational(0), false}, c);
    op.add_term({Rational(0), true}, RatFunc(1) - c);
    return op;
}

/// K3 = A T^+ - B T^- + [a(x - rho2) - 2x C] R - (1 + 2x) D T^+R.
inline ShiftReflectOp build_K3(const ParamSet& p, const Rational& alpha) {
    auto c = d0_coefficients(p);
    const RatFunc x = RatFunc::x();
    ShiftReflectOp op;
    op.add_term({Rational(1), false}, c.A);
    op.add_term({Rational(-1), false}, -c.B);
    op.add_term({Rational(0), true}, RatFunc(Poly::linear(alpha, -alpha * p.rho2)) - RatFunc(2) * x * c.C);
    op.add_term({Rational(1), true}, -(RatFunc(1) + RatFunc(2) * x) * c.D);
    return op;
}

template <class F>
StructureConstantsT<F> structure_constants(const ParamsT<F>& p, const F& alpha) {
    using detail::constant;
    const F g = p.g();
    const F om = d0_omega(p);
    const F half = constant<F>(1, 2);
    const F one = constant<F>(1);
    const F two = constant<F>(2);
    StructureConstantsT<F> d;
    d.d1 = alpha * (g - alpha + one);
    d.d2 = g - two * alpha + constant<F>(3, 2);
    d.d3 = p.rho2;
    d.d4 = alpha * (two * p.rho2 * p.rho2 - p.rho2 + half) + p.rho2 * om / constant<F>(4) +
           (constant<F>(8) * p.rho1 * p.r1 * p.r2 + constant<F>(4) * p.r1 * p.r2 - two * p.rho1 + two * p.r1 +
            two * p.r2 - constant<F>(3)) /
               constant<F>(8);
    d.d5 = alpha * (p.rho2 - half) + om / constant<F>(8);
    return d;
}

inline Generators<ShiftReflectOp> realization(const ParamSet& p, const Rational& alpha) {
    return {build_D_alpha(p, alpha), build_K2(), build_K3(p, alpha), build_P(p), ShiftReflectOp::identity()};
}

struct RelationResult {
    std::string name;
    bool normal_form_pass = false;
    bool action_pass = false;
    std::optional<unsigned> action_witness;  // first monomial degree with nonzero residual
    std::string normal_form_residual;        // empty when the normal form vanishes
};

struct RelationReport {
    std::vector<RelationResult> relations;
    std::vector<std::string> warnings;

    bool action_passed() const {
        for (const auto& r : relations) {
            if (!r.action_pass) return false;
        }
        return true;
    }
    bool normal_form_passed() const {
        for (const auto& r : relations) {
            if (!r.normal_form_pass) return false;
        }
        return true;
    }
};

inline constexpr unsigned default_monomial_cap = 24;

/**
 * Normal-form and action checks of the relations produced by residuals(generators), which is
 * called once with operator normal forms and once with sequential actions. Never throws on a
 * failed relation.
 */
template <class ResidualFn>
RelationReport check_relations_with(const Generators<ShiftReflectOp>& ops, ResidualFn residuals,
                                    unsigned max_degree = default_monomial_cap) {
    const Generators<PolyAction> act{PolyAction::of(ops.K1), PolyAction::of(ops.K2), PolyAction::of(ops.K3),
                                     PolyAction::of(ops.P), PolyAction::identity()};
    auto nf = residuals(ops);
    auto ac = residuals(act);
    RelationReport rep;
    for (std::size_t i = 0; i < nf.size(); ++i) {
        RelationResult r;
        r.name = nf[i].name;
        r.normal_form_pass = nf[i].value.is_zero();
        if (!r.normal_form_pass) r.normal_form_residual = nf[i].value.str();
        r.action_pass = true;
        for (unsigned m = 0; m <= max_degree; ++m) {
            if (!ac[i].value(Poly::monomial(1, m)).is_zero()) {
                r.action_pass = false;
                r.action_witness = m;
                break;
            }
        }
        if (r.action_pass && !r.normal_form_pass) {
            rep.warnings.push_back(r.name + ": normal form nonzero but action on monomials vanishes");
        }
        rep.relations.push_back(std::move(r));
    }
    return rep;
}

inline RelationReport check_relations(const Generators<ShiftReflectOp>& ops, const StructureConstants& d,
                                      unsigned max_degree = default_monomial_cap) {
    return check_relations_with(
        ops, [&](const auto& g) { return relation_residuals(g, d); }, max_degree);
}

inline RelationReport compute_cbi_relations(const ParamSet& p, const Rational& alpha,
                                            unsigned max_degree = default_monomial_cap) {
    return check_relations(realization(p, alpha), structure_constants(p, alpha), max_degree);
}

/// As compute_cbi_relations; an action failure raises VerificationFailure naming the relation.
inline RelationReport verify_cbi_relations(const ParamSet& p, const Rational& alpha,
                                           unsigned max_degree = default_monomial_cap) {
    RelationReport rep = compute_cbi_relations(p, alpha, max_degree);
    for (const auto& r : rep.relations) {
        if (!r.action_pass) {
            throw VerificationFailure("relation " + r.name + " fails on x^" + std::to_string(*r.action_witness) +
                                      " at " + to_string(p) + " alpha=" + alpha.str());
        }
    }
    return rep;
}

struct CasimirReport {
    bool scalar = false;
    Rational value;
    std::string residual;  // normal form when not scalar
    bool commutes_K1 = false;
    bool commutes_K2 = false;
    bool commutes_K3 = false;
    bool commutes_P = false;

    bool passed() const { return scalar && commutes_K1 && commutes_K2 && commutes_K3 && commutes_P; }
};

inline CasimirReport compute_casimir(const Generators<ShiftReflectOp>& ops, const StructureConstants& d) {
    CasimirReport rep;
    ShiftReflectOp Q = casimir_element(ops, d);
    rep.scalar = Q.is_scalar();
    if (rep.scalar) {
        rep.value = Q.scalar_value();
    } else {
        rep.residual = Q.str();
    }
    rep.commutes_K1 = commutator(Q, ops.K1).is_zero();
    rep.commutes_K2 = commutator(Q, ops.K2).is_zero();
    rep.commutes_K3 = commutator(Q, ops.K3).is_zero();
    rep.commutes_P = commutator(Q, ops.P).is_zero();
    return rep;
}

/// The scalar by which Q acts; CasimirFailure if the normal form is not q * 1 or Q is not central.
inline Rational casimir_scalar(const ParamSet& p, const Rational& alpha) {
    CasimirReport rep = compute_casimir(realization(p, alpha), structure_constants(p, alpha));
    if (!rep.scalar) throw CasimirFailure("Casimir normal form is not a multiple of the identity: " + rep.residual);
    if (!rep.passed()) throw CasimirFailure("Casimir does not commute with every generator");
    return rep.value;
}

struct AlphaShiftReport {
    Rational beta;
    bool k1_is_shifted_family = false;  // K~1 = D_{a+b}
    bool k3_is_commutator = false;      // K~3 = [K~1, K2]
    bool k3_is_shifted_family = false;  // K~3 = K3(a+b)
    StructureConstants printed;         // delta~ from the closed forms in terms of delta(a) and beta
    StructureConstants recomputed;      // delta(a+b)
    bool match[5] = {false, false, false, false, false};
    Rational corrected_d1;              // delta1 + beta(delta2 - 1/2) - beta^2
    bool corrected_d1_matches = false;
    RelationReport relations;           // tilde generators against recomputed constants

    bool printed_constants_match() const {
        for (bool b : match) {
            if (!b) return false;
        }
        return true;
    }
    bool passed() const {
        return k1_is_shifted_family && k3_is_commutator && k3_is_shifted_family && printed_constants_match() &&
               relations.action_passed();
    }
};

inline AlphaShiftReport alpha_shift_check(const ParamSet& p, const Rational& alpha, const Rational& beta,
                                          unsigned max_degree = default_monomial_cap) {
    AlphaShiftReport rep;
    rep.beta = beta;
    auto ops = realization(p, alpha);
    const StructureConstants d = structure_constants(p, alpha);
    const Rational half(1, 2);
    ShiftReflectOp K1t = ops.K1 + (beta * half) * (ops.I - ops.P);
    ShiftReflectOp K3t = ops.K3 - beta * (ops.P * ops.K2) + (beta * d.d3) * ops.I;
    rep.k1_is_shifted_family = K1t == build_D_alpha(p, alpha + beta);
    rep.k3_is_commutator = K3t == commutator(K1t, ops.K2);
    rep.k3_is_shifted_family = K3t == build_K3(p, alpha + beta);
    rep.printed = {d.d1 + beta * (d.d2 - half), d.d2 - 2 * beta, d.d3,
                   d.d4 + beta * (2 * d.d3 * d.d3 - d.d3 + half), d.d5 + beta * (d.d3 - half)};
    rep.recomputed = structure_constants(p, alpha + beta);
    rep.match[0] = rep.printed.d1 == rep.recomputed.d1;
    rep.match[1] = rep.printed.d2 == rep.recomputed.d2;
    rep.match[2] = rep.printed.d3 == rep.recomputed.d3;
    rep.match[3] = rep.printed.d4 == rep.recomputed.d4;
    rep.match[4] = rep.printed.d5 == rep.recomputed.d5;
    rep.corrected_d1 = rep.printed.d1 - beta * beta;
    rep.corrected_d1_matches = rep.corrected_d1 == rep.recomputed.d1;
    rep.relations = check_relations({K1t, ops.K2, K3t, ops.P, ops.I}, rep.recomputed, max_degree);
    return rep;
}

}  // namespace cbi
