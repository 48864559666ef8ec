#include "zetalab/polylog.hpp"

#include <mutex>
#include <stdexcept>

#include "zetalab/pbern.hpp"

namespace zetalab {

HPReal li_direct(long s, const HPReal& x, long precision_bits) {
    if (s < 2) throw std::domain_error("li_direct: s must be >= 2");
    if (x.sign() < 0 || !(x < HPReal(1, x.precision())))
        throw std::domain_error("li_direct: x must satisfy 0 <= x < 1");
    long wp = working_precision(precision_bits);
    HPReal eps = HPReal::pow2(-wp, wp);
    HPReal one(1, wp);
    HPReal xw = HPReal(0, wp) + x;
    HPReal one_minus_x = one - xw;
    HPReal sum(0, wp);
    HPReal xpow = xw;
    for (unsigned long n = 1;; ++n) {
        HPReal np(wp);
        mpfr_ui_pow_ui(np.raw(), n, static_cast<unsigned long>(s), MPFR_RNDN);
        sum += xpow / np;
        xpow *= xw;
        // tail bound: x^(n+1) / ((n+1)^s (1-x))
        HPReal np1(wp);
        mpfr_ui_pow_ui(np1.raw(), n + 1, static_cast<unsigned long>(s), MPFR_RNDN);
        if (abs(xpow) / (np1 * one_minus_x) < eps) break;
    }
    return sum;
}

HPReal li_direct(long s, const Rational& x, long precision_bits) {
    return li_direct(s, HPReal(x, working_precision(precision_bits)), precision_bits);
}

HPReal zeta_em(long s, long precision_bits) {
    if (s < 2) throw std::domain_error("zeta_em: s must be >= 2");
    long wp = working_precision(precision_bits);
    long N = wp / 2 + 16;
    HPReal eps = HPReal::pow2(-wp - 8, wp);
    HPReal sum(0, wp);
    for (long n = 1; n < N; ++n) {
        HPReal np(wp);
        mpfr_ui_pow_ui(np.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(s), MPFR_RNDN);
        sum += HPReal(1, wp) / np;
    }
    // tail integral N^(1-s)/(s-1) and half-term N^(-s)/2
    HPReal Ns(wp);
    mpfr_ui_pow_ui(Ns.raw(), static_cast<unsigned long>(N), static_cast<unsigned long>(s), MPFR_RNDN);
    HPReal invNs = HPReal(1, wp) / Ns;                       // N^-s
    HPReal invN = HPReal(1, wp) / HPReal(N, wp);
    sum += invNs * HPReal(N, wp) / HPReal(s - 1, wp);        // N^(1-s)/(s-1)
    sum += invNs / 2;
    // Euler-Maclaurin corrections: B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    Rational rising(s);            // running product s(s+1)...(s+2k-2)
    Rational fact(2);              // (2k)!
    HPReal Npow = invNs * HPReal(N, wp);  // N^(-s-2k+1), starts at N^(1-s)
    for (long k = 1;; ++k) {
        Npow *= invN;              // now N^(-s-2k+1) for current k
        Npow *= invN;
        HPReal term = Npow * HPReal(bernoulli_classical(2 * k) * rising / fact, wp);
        sum += term;
        if (abs(term) < eps) break;
        if (2 * k + s > 4 * N) throw std::logic_error("zeta_em: correction series diverging");
        rising *= Rational((s + 2 * k - 1)) * Rational(s + 2 * k);
        fact *= Rational(2 * k + 1) * Rational(2 * k + 2);
    }
    return sum;
}

HPReal zeta3_alternating(long precision_bits) {
    // Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^(k)/ (k+1)^3
    long wp = working_precision(precision_bits);
    long n = static_cast<long>(0.40 * wp) + 8;
    HPReal d = pow_si(HPReal(3, wp) + sqrt(HPReal(8, wp)), n);
    d = (d + HPReal(1, wp) / d) / 2;
    HPReal b(-1, wp), c = -d, s(0, wp);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        HPReal ak(wp);
        mpfr_ui_pow_ui(ak.raw(), static_cast<unsigned long>(k + 1), 3, MPFR_RNDN);
        s += c / ak;
        b *= HPReal(2 * (k + n) * (k - n), wp);
        b /= HPReal((2 * k + 1) * (k + 1), wp);
    }
    // s/d = eta(3) = (3/4) zeta(3)
    return (s / d) * Rational(4, 3);
}

HPReal zeta3_reference(long precision_bits) {
    static std::mutex mu;
    static HPReal cache(2);
    static long cached_prec = 0;
    long wp = working_precision(precision_bits);
    std::lock_guard<std::mutex> lock(mu);
    if (cached_prec < wp) {
        cache = zeta_em(3, precision_bits);
        cached_prec = wp;
    }
    HPReal out(wp);
    mpfr_set(out.raw(), cache.raw(), MPFR_RNDN);
    return out;
}

HPReal clausen3(const HPReal& x, long precision_bits) {
    long wp = std::max<long>(working_precision(precision_bits), 128);
    HPReal xw = HPReal(0, wp) + x;
    if (!(xw.sign() > 0) || HPReal(Rational(1, 2), wp) < xw)
        throw std::domain_error("clausen3: x must lie in (0, 1/2]");
    const long N = 10000;
    HPReal theta = HPReal::pi(wp) * 2 * xw;
    // iterated angle addition keeps all cos(n theta) exact to working precision
    HPReal ct = cos(theta), st = sin(theta);
    HPReal c = ct, s = st;
    HPReal sum = ct;  // n = 1
    for (long n = 2; n <= N; ++n) {
        HPReal cn = c * ct - s * st;
        HPReal sn = s * ct + c * st;
        c = cn; s = sn;
        HPReal n3(wp);
        mpfr_ui_pow_ui(n3.raw(), static_cast<unsigned long>(n), 3, MPFR_RNDN);
        sum += c / n3;
    }
    // Euler-Maclaurin tail for sum_{n>N} cos(theta n) n^-3:
    //   integral_N^inf cos(theta t) t^-3 dt  - g(N)/2  - B2/2! g'(N) - B4/4! g'''(N)
    // with the integral expanded by repeated integration by parts.
    HPReal cN = c, sN = s;  // cos(theta N), sin(theta N)
    HPReal invN = HPReal(1, wp) / HPReal(N, wp);
    HPReal invT = HPReal(1, wp) / theta;
    // I_m = -sin(tN) N^-m / t + (m/t) J_{m+1};  J_m = cos(tN) N^-m / t - (m/t) I_{m+1}
    HPReal Nm = invN * invN * invN;  // N^-m starting m = 3
    HPReal integral(0, wp);
    HPReal coef(1, wp);
    for (long m = 3; m <= 13; m += 2) {
        integral += coef * (-sN * Nm * invT);
        HPReal coefJ = coef * HPReal(m, wp) * invT;
        Nm *= invN;
        integral += coefJ * (cN * Nm * invT);
        coef = -coefJ * HPReal(m + 1, wp) * invT;
        Nm *= invN;
    }
    HPReal N3 = pow_si(HPReal(N, wp), -3), N4 = N3 * invN, N5 = N4 * invN, N6 = N5 * invN;
    HPReal g = cN * N3;
    HPReal g1 = -theta * sN * N3 - cN * N4 * 3;
    HPReal g3 = theta * theta * theta * sN * N3 + theta * theta * cN * N4 * 9
                - theta * sN * N5 * 36 - cN * N6 * 60;
    HPReal tail = integral - g / 2 - g1 * Rational(1, 12) + g3 * Rational(1, 720);
    return sum + tail;
}

} // namespace zetalab
