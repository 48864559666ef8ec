#include "zetalab/hpreal.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace zetalab {

std::string HPReal::str(long digits, bool truncate) const {
    if (digits < 1) throw std::invalid_argument("HPReal::str: digits must be >= 1");
    if (mpfr_nan_p(v_) || mpfr_inf_p(v_)) return "nan";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits),
                             v_, truncate ? MPFR_RNDZ : MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out;
    long ee = static_cast<long>(e);
    auto trim = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    if (ee <= -4 || ee > digits + 6) {
        // scientific form
        out = d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out = trim(out) + "e" + std::to_string(ee - 1);
    } else if (ee <= 0) {
        out = trim("0." + std::string(static_cast<size_t>(-ee), '0') + d);
    } else if (ee >= static_cast<long>(d.size())) {
        out = d + std::string(static_cast<size_t>(ee) - d.size(), '0');
    } else {
        out = trim(d.substr(0, static_cast<size_t>(ee)) + "." + d.substr(static_cast<size_t>(ee)));
    }
    return neg ? "-" + out : out;
}

static HPReal un(const HPReal& x, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    HPReal r(x.precision());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HPReal sqrt(const HPReal& x) {
    if (x.sign() < 0) throw std::domain_error("sqrt of negative value");
    return un(x, mpfr_sqrt);
}

HPReal log(const HPReal& x) {
    if (x.sign() <= 0) throw std::domain_error("log of non-positive value");
    return un(x, mpfr_log);
}

HPReal exp(const HPReal& x) { return un(x, mpfr_exp); }
HPReal abs(const HPReal& x) { return un(x, mpfr_abs); }
HPReal cos(const HPReal& x) { return un(x, mpfr_cos); }
HPReal sin(const HPReal& x) { return un(x, mpfr_sin); }

HPReal pow_si(const HPReal& x, long e) {
    HPReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

} // namespace zetalab
