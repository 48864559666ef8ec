#pragma once

#include <string>

#include "zetalab/hpreal.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// Element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of the field Q(sqrt2, sqrt3).
// Closed under +, -, *, and inverse (when nonzero), so every logarithm
// argument produced by the ladder rewrites is represented exactly until the
// final numeric log.
struct SurdValue {
    Rational a, b, c, d;

    SurdValue() = default;
    SurdValue(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    static SurdValue rational(const Rational& r) { return {r, 0, 0, 0}; }
    static SurdValue sqrt2() { return {0, 1, 0, 0}; }
    static SurdValue sqrt3() { return {0, 0, 1, 0}; }
    static SurdValue sqrt6() { return {0, 0, 0, 1}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

    friend bool operator==(const SurdValue& u, const SurdValue& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c && u.d == v.d;
    }
};

SurdValue surd_add(const SurdValue& u, const SurdValue& v);
SurdValue surd_sub(const SurdValue& u, const SurdValue& v);
SurdValue surd_mul(const SurdValue& u, const SurdValue& v);
SurdValue surd_neg(const SurdValue& u);

// Galois conjugates sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3
SurdValue surd_conj2(const SurdValue& u);
SurdValue surd_conj3(const SurdValue& u);

// field norm: product of the four Galois conjugates (always rational)
Rational surd_norm(const SurdValue& u);

// exact inverse via the three nontrivial conjugates over the norm
SurdValue surd_inv(const SurdValue& u);

inline SurdValue surd_div(const SurdValue& u, const SurdValue& v) {
    return surd_mul(u, surd_inv(v));
}

HPReal surd_eval(const SurdValue& u, long precision_bits);
HPReal surd_log(const SurdValue& u, long precision_bits);

// canonical textual form "a + b*r2 + c*r3 + d*r6", rationals as "p/q"
std::string surd_format(const SurdValue& u);
SurdValue surd_parse(const std::string& text);

} // namespace zetalab
