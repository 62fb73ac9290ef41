#pragma once

/**
 * @file shift_reflect.hpp
 * @brief Normal-form calculus for reflection-shift operators.
 *
 * An operator is a finite sum of terms c(x) T^h R^s with rational-function
 * coefficients, rational shifts h and s in {0, 1}. R acts first:
 *
 *     (c T^h) f(x)   = c(x) f(x + h)
 *     (c T^h R) f(x) = c(x) f(-x - h)
 *
 * Composition uses T^h c(x) = c(x+h) T^h, R c(x) = c(-x) R, R T^h = T^{-h} R
 * and R^2 = 1. At most one term is stored per (h, s) and zero coefficients are
 * dropped, so equal operators have equal representations.
 */

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "cbi/core/ratfunc.hpp"

namespace cbi {

struct OpKey {
    Rational shift;
    bool reflect = false;

    friend auto operator<=>(const OpKey&, const OpKey&) = default;
    friend bool operator==(const OpKey&, const OpKey&) = default;

    /// The affine map x -> slope*x + offset that the term applies to the argument.
    Rational slope() const { return reflect ? Rational(-1) : Rational(1); }
    Rational offset() const { return reflect ? -shift : shift; }
};

class ShiftReflectOp {
public:
    using Terms = std::map<OpKey, RatFunc>;

    ShiftReflectOp() = default;

    static ShiftReflectOp identity() { return term(RatFunc(1), Rational(0), false); }
    static ShiftReflectOp shift(const Rational& h) { return term(RatFunc(1), h, false); }
    static ShiftReflectOp reflection() { return term(RatFunc(1), Rational(0), true); }
    static ShiftReflectOp multiplication(const RatFunc& c) { return term(c, Rational(0), false); }
    static ShiftReflectOp term(const RatFunc& c, const Rational& h, bool reflect) {
        ShiftReflectOp op;
        op.add_term({h, reflect}, c);
        return op;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of T^h R^s (zero when absent).
    RatFunc coefficient(const Rational& h, bool reflect) const {
        auto it = terms_.find({h, reflect});
        return it == terms_.end() ? RatFunc() : it->second;
    }

    /// True iff the operator is q * identity for a constant q.
    bool is_scalar() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const auto& [k, c] = *terms_.begin();
        return k.shift.is_zero() && !k.reflect && c.is_constant();
    }
    Rational scalar_value() const { return terms_.empty() ? Rational(0) : terms_.begin()->second.constant_value(); }

    void add_term(const OpKey& key, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ShiftReflectOp& operator+=(const ShiftReflectOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    ShiftReflectOp& operator-=(const ShiftReflectOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    ShiftReflectOp operator-() const {
        ShiftReflectOp r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend ShiftReflectOp operator+(ShiftReflectOp a, const ShiftReflectOp& b) { return a += b; }
    friend ShiftReflectOp operator-(ShiftReflectOp a, const ShiftReflectOp& b) { return a -= b; }

    /// Left multiplication by a function: c(x) * op.
    friend ShiftReflectOp operator*(const RatFunc& c, const ShiftReflectOp& op) {
        ShiftReflectOp r;
        for (const auto& [k, v] : op.terms_) r.add_term(k, c * v);
        return r;
    }
    friend ShiftReflectOp operator*(const Rational& c, const ShiftReflectOp& op) { return RatFunc(c) * op; }

    /// Composition: (a * b) f = a(b f).
    friend ShiftReflectOp operator*(const ShiftReflectOp& a, const ShiftReflectOp& b) { return compose(a, b); }

    static ShiftReflectOp compose(const ShiftReflectOp& left, const ShiftReflectOp& right) {
        ShiftReflectOp r;
        for (const auto& [ka, ca] : left.terms_) {
            for (const auto& [kb, cb] : right.terms_) {
                // ca(x) * cb(sigma_a(x)) * f(sigma_b(sigma_a(x)))
                RatFunc coeff = ca * cb.substitute(ka.slope(), ka.offset());
                OpKey key{ka.reflect ? ka.shift - kb.shift : ka.shift + kb.shift, ka.reflect != kb.reflect};
                r.add_term(key, coeff);
            }
        }
        return r;
    }

    /**
     * Action on a polynomial. Individual terms may be non-polynomial; the sum is
     * formed over the lcm of the coefficient denominators before the exactness check.
     */
    Poly apply(const Poly& p) const {
        if (terms_.empty() || p.is_zero()) return {};
        Poly common(1);
        for (const auto& [k, c] : terms_) {
            const Poly& d = c.den();
            if (d.degree() == 0) continue;
            Poly g = gcd(common, d);
            common = common * divmod(d, g).quotient;
        }
        Poly total;
        for (const auto& [k, c] : terms_) {
            Poly moved = affine_substitute(p, k.slope(), k.offset());
            Poly cofactor = divmod(common, c.den()).quotient;
            total += c.num() * cofactor * moved;
        }
        if (common.degree() == 0) return total / common.leading();
        auto [q, rem] = divmod(total, common);
        if (!rem.is_zero()) throw NonPolynomialResult("operator applied to polynomial is not a polynomial", rem.str());
        return q;
    }

    /// (op f)(t) for a polynomial f; a coefficient pole at t is an error.
    Rational apply_at(const Poly& f, const Rational& t) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += c(t) * f(k.slope() * t + k.offset());
        return acc;
    }

    friend bool operator==(const ShiftReflectOp&, const ShiftReflectOp&) = default;

    std::string str() const {
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*T^" + k.shift.str() + (k.reflect ? "*R" : "");
        }
        return s.empty() ? "0" : s;
    }

private:
    Terms terms_;
};

inline ShiftReflectOp op_compose(const ShiftReflectOp& a, const ShiftReflectOp& b) {
    return ShiftReflectOp::compose(a, b);
}
inline Poly op_apply(const ShiftReflectOp& op, const Poly& p) { return op.apply(p); }
inline bool op_equal(const ShiftReflectOp& a, const ShiftReflectOp& b) { return a == b; }

inline ShiftReflectOp commutator(const ShiftReflectOp& a, const ShiftReflectOp& b) { return a * b - b * a; }
inline ShiftReflectOp anticommutator(const ShiftReflectOp& a, const ShiftReflectOp& b) { return a * b + b * a; }

}  // namespace cbi
