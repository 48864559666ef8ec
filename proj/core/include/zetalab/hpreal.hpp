#pragma once

#include <mpfr.h>
#include <cstdint>
#include <string>
#include <utility>

#include "zetalab/rational.hpp"

namespace zetalab {

// Guard-bit policy: evaluation at a requested output precision runs at
// requested + max(32, requested/8) bits to absorb cancellation in the long
// alternating sums of explicit log terms.
inline long working_precision(long requested_bits) {
    long guard = requested_bits / 8;
    if (guard < 32) guard = 32;
    return requested_bits + guard;
}

// Arbitrary-precision real with an explicit precision in bits. Binary
// operations round to the wider operand's precision.
class HPReal {
public:
    explicit HPReal(long prec_bits = 64) { mpfr_init2(v_, prec_bits < 2 ? 2 : prec_bits); mpfr_set_zero(v_, 1); }
    HPReal(long value, long prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_si(v_, value, MPFR_RNDN); }
    HPReal(const Rational& r, long prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    HPReal(const HPReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    HPReal(HPReal&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    HPReal& operator=(const HPReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~HPReal() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static HPReal pi(long prec) { HPReal r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static HPReal pow2(long e, long prec) { HPReal r(prec); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend HPReal operator+(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_add); }
    friend HPReal operator-(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_sub); }
    friend HPReal operator*(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_mul); }
    friend HPReal operator/(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_div); }
    HPReal operator-() const { HPReal r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    HPReal& operator+=(const HPReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator-=(const HPReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator*=(const HPReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator/=(const HPReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    HPReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    HPReal& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
    HPReal& operator*=(const Rational& r) {
        mpfr_mul_q(v_, v_, r.raw().get_mpq_t(), MPFR_RNDN);
        return *this;
    }

    friend HPReal operator*(HPReal a, long k) { return a *= k; }
    friend HPReal operator*(HPReal a, const Rational& r) { return a *= r; }
    friend HPReal operator/(HPReal a, long k) { return a /= k; }

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }

    // decimal string with the given number of significant digits, truncated
    // toward zero so that longer renderings extend shorter ones
    std::string str(long digits, bool truncate = false) const;

private:
    using mpfr_binfun = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static HPReal bin(const HPReal& a, const HPReal& b, mpfr_binfun f) {
        long p = std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
        HPReal r(p);
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

HPReal sqrt(const HPReal& x);
HPReal log(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal abs(const HPReal& x);
HPReal pow_si(const HPReal& x, long e);
HPReal cos(const HPReal& x);
HPReal sin(const HPReal& x);

// x^n for rational x as an exact Rational, evaluated to HPReal
inline HPReal to_hp(const Rational& r, long prec) { return HPReal(r, prec); }

} // namespace zetalab
