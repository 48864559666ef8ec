#include "zetalab/identities.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "zetalab/bbp.hpp"
#include "zetalab/pbern.hpp"
#include "zetalab/polylog.hpp"
#include "zetalab/surd.hpp"

namespace zetalab {

namespace {

// shared exact table for the sigma-form expansions exercised here
PTable& table() {
    static PTable t;
    return t;
}
std::mutex table_mu;

Rational sigma_of(long n) {
    std::lock_guard<std::mutex> lock(table_mu);
    return table().sigma_coeff(n);
}
Rational combined_of(long n) {
    std::lock_guard<std::mutex> lock(table_mu);
    return table().combined_coeff(n);
}

// oracle-grade zeta(2n) values, cached per (n, wp)
HPReal zeta2n(long n, long wp) {
    static std::map<std::pair<long, long>, HPReal> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, wp);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, zeta_em(2 * n, wp)).first;
    HPReal out(wp);
    mpfr_set(out.raw(), it->second.raw(), MPFR_RNDN);
    return out;
}

HPReal log_rat(long num, long den, long wp) { return log(HPReal(Rational(num, den), wp)); }

// sum_{n>=1} (-1)^n zeta(2n) / (2n(2n+1)(2n+2)) * (L/over)^(2n)
HPReal zser3(const HPReal& L, const HPReal& over, long wp) {
    HPReal q2 = (L / over) * (L / over);
    HPReal qpow = q2, tot(0, wp);
    HPReal eps = HPReal::pow2(-wp - 8, wp);
    for (long n = 1;; ++n) {
        HPReal term = zeta2n(n, wp) * qpow / HPReal(2 * n * (2 * n + 1) * (2 * n + 2), wp);
        if (n % 2 == 1) term = -term;
        tot += term;
        if (abs(term) < eps) break;
        qpow *= q2;
    }
    return tot;
}

// trilogarithm expansion, degree-2 coefficient route, summed to convergence:
// z3 - pi^2/6 L + 3/4 L^2 + 1/12 L^3 - 1/2 L^2 ln L
//    + 2 L^2 sum (-1)^n sigma(n)/((2n-1)2n(2n+1)(2n+2)) (L/(2 sqrt6))^(2n)
HPReal li3_sigma_expansion(const HPReal& L, long wp, bool spurious_L2, bool deg4) {
    HPReal pi = HPReal::pi(wp);
    HPReal z3 = zeta3_reference(wp);
    HPReal L2 = L * L;
    HPReal out = z3 - pi * pi * L / 6 + L2 * Rational(3, 4) + L2 * L * Rational(1, 12)
                 - L2 * log(L) / 2;
    HPReal q2 = L2 / 24;
    HPReal eps = HPReal::pow2(-wp - 8, wp);
    HPReal ser(0, wp);
    if (!deg4) {
        HPReal qpow = q2;
        for (long n = 1;; ++n) {
            HPReal term = HPReal(sigma_of(n), wp) * qpow /
                          HPReal((2 * n - 1) * 2 * n * (2 * n + 1), wp) / HPReal(2 * n + 2, wp);
            if (n % 2 == 1) term = -term;
            ser += term;
            if (abs(term) < eps) break;
            qpow *= q2;
        }
        ser = ser * L2 * 2;
        if (spurious_L2) ser *= L2;  // the misprint under adjudication
    } else {
        out -= L2 * L2 * Rational(1, 288);
        HPReal qpow = q2 * q2;
        for (long n = 1;; ++n) {
            HPReal term = HPReal(combined_of(n), wp) * qpow;
            ser += term;
            if (abs(term) < eps) break;
            qpow *= q2;
        }
        ser = ser * L2 * 24;
    }
    return out + ser;
}

HPReal sq(const HPReal& x) { return x * x; }
HPReal cube(const HPReal& x) { return x * x * x; }

struct Quartics {
    HPReal q2, q3, q6, q12;  // fourth roots of 2, 3, 6, 12
    explicit Quartics(long wp)
        : q2(sqrt(sqrt(HPReal(2, wp)))), q3(sqrt(sqrt(HPReal(3, wp)))),
          q6(sqrt(sqrt(HPReal(6, wp)))), q12(sqrt(sqrt(HPReal(12, wp)))) {}
};

// functional-equation instance solved for Li3(((1-x)/(1+x))^2); args passed
// explicitly so both exact-surd and fourth-root instances share it
HPReal rewrite_rhs(const HPReal& A, const HPReal& c, const HPReal& d, const HPReal& e,
                   const HPReal& W, long wp) {
    HPReal pi = HPReal::pi(wp);
    HPReal lw = log(W);
    return zeta3_reference(wp) * 7 + li_direct(3, A, wp) * 8 - li_direct(3, c, wp) * 8
           - li_direct(3, d, wp) * 8 + li_direct(3, e, wp) * 2
           - pi * pi * lw * Rational(2, 3) + cube(lw) * Rational(4, 3);
}

} // namespace

IdentityRegistry& IdentityRegistry::instance() {
    static IdentityRegistry reg;
    return reg;
}

IdentityRegistry::IdentityRegistry() {
    auto add = [&](IdentityDescriptor d) { entries_.push_back(std::move(d)); };

    add({"LI3_HALF",
         "Li3(1/2) = 7/8 zeta(3) + ln(2)^3/6 - pi^2 ln(2)/12",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp);
             HPReal rhs = zeta3_reference(wp) * Rational(7, 8) + cube(l2) / 6 - pi * pi * l2 / 12;
             return abs(li_direct(3, Rational(1, 2), wp) - rhs);
         },
         nullptr, "", 0});

    add({"LI2_HALF",
         "Li2(1/2) = pi^2/12 - ln(2)^2/2",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp);
             return abs(li_direct(2, Rational(1, 2), wp) - (pi * pi / 12 - sq(l2) / 2));
         },
         nullptr, "", 0});

    add({"CL3_SERIES_X6",
         "zeta(3) = pi^2/8 - pi^2/12 ln(pi/3) + pi^2/3 sum zeta(2n)/(2n(2n+1)(2n+2)) 6^(-2n)",
         [](long wp) {
             HPReal pi = HPReal::pi(wp);
             HPReal eps = HPReal::pow2(-wp - 8, wp);
             HPReal tot(0, wp), pw(Rational(1, 36), wp);
             for (long n = 1;; ++n) {
                 HPReal term = zeta2n(n, wp) * pw / HPReal(2 * n * (2 * n + 1) * (2 * n + 2), wp);
                 tot += term;
                 if (term < eps) break;
                 pw *= Rational(1, 36);
             }
             HPReal rhs = pi * pi / 8 - pi * pi * log(pi / 3) / 12 + pi * pi * tot / 3;
             return abs(rhs - zeta3_reference(wp));
         },
         nullptr, "", 0});

    add({"LOG2_LADDER",
         "zeta(3) = 2pi^2/3 ln2 - 6 ln2^2 + 2/3 ln2^3 + 4 ln2^2 ln(ln2) "
         "+ 16 ln2^2 sum (-1)^(n+1) zeta(2n)/(2n(2n+1)(2n+2)) (ln2/(2pi))^(2n)",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp);
             HPReal rhs = pi * pi * l2 * Rational(2, 3) - sq(l2) * 6 + cube(l2) * Rational(2, 3)
                          + sq(l2) * log(l2) * 4 - sq(l2) * zser3(l2, pi * 2, wp) * 16;
             return abs(rhs - zeta3_reference(wp));
         },
         nullptr, "", 0});

    add({"ZETA2_LADDER",
         "zeta(2) = 2 ln2 (1 - ln(ln2)) - ln2^2/2 - 4 ln2 sum (-1)^(n+1) zeta(2n)/(2n(2n+1)) (ln2/(2pi))^(2n)",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp);
             HPReal eps = HPReal::pow2(-wp - 8, wp);
             HPReal q2 = sq(l2 / (pi * 2)), qpow = q2, tot(0, wp);
             for (long n = 1;; ++n) {
                 HPReal term = zeta2n(n, wp) * qpow / HPReal(2 * n * (2 * n + 1), wp);
                 if (n % 2 == 0) term = -term;
                 tot += term;
                 if (abs(term) < eps) break;
                 qpow *= q2;
             }
             HPReal rhs = l2 * 2 * (HPReal(1, wp) - log(l2)) - sq(l2) / 2 - l2 * tot * 4;
             return abs(rhs - pi * pi / 6);
         },
         nullptr, "", 0});

    add({"CL_SCALING_3",
         "Cl3 at one sixth of the period equals (1/2)(1-2^-2)(1-3^-2) zeta(3) = zeta(3)/3",
         [](long wp) {
             return abs(clausen3(HPReal(Rational(1, 6), wp), wp) - zeta3_reference(wp) / 3);
         },
         [](long wp) {
             // reading the Cl argument as a period fraction x = pi/3 (reduced mod 1)
             HPReal x = HPReal::pi(wp) / 3 - HPReal(1, wp);
             return abs(clausen3(x, wp) - zeta3_reference(wp) / 3);
         },
         "Cl_{2n+1}(pi/3) is an angle: it equals the cosine series at x = 1/6 of the "
         "period; the period-fraction reading x = pi/3 fails",
         1e-11});

    add({"CL3_EXPANSION",
         "sum cos(2 pi n x)/n^3 = zeta(3) - 3 pi^2 x^2 + 2 pi^2 x^2 ln(2 pi x) "
         "- 8 pi^2 sum zeta(2n)/(2n(2n+1)(2n+2)) x^(2n+2), checked at x = 1/6",
         [](long wp) {
             HPReal pi = HPReal::pi(wp);
             HPReal x(Rational(1, 6), wp);
             HPReal eps = HPReal::pow2(-wp - 8, wp);
             HPReal x2 = sq(x), pw = sq(x2), tot(0, wp);
             for (long n = 1;; ++n) {
                 HPReal term = zeta2n(n, wp) * pw / HPReal(2 * n * (2 * n + 1) * (2 * n + 2), wp);
                 tot += term;
                 if (term < eps) break;
                 pw *= x2;
             }
             HPReal rhs = zeta3_reference(wp) - pi * pi * x2 * 3 + pi * pi * x2 * log(pi * 2 * x) * 2
                          - pi * pi * tot * 8;
             return abs(clausen3(x, wp) - rhs);
         },
         nullptr, "", 1e-11});

    add({"LNSIN_X6",
         "ln sin(pi x) = ln(pi x) - sum_n 2 zeta(2)^n sigma(n)/((2n-1)2n) x^(2n) at x = 1/6",
         [](long wp) {
             HPReal pi = HPReal::pi(wp);
             HPReal x(Rational(1, 6), wp);
             HPReal z2x2 = pi * pi / 6 * sq(x);
             HPReal eps = HPReal::pow2(-wp - 8, wp);
             HPReal pw = z2x2, tot(0, wp);
             for (long n = 1;; ++n) {
                 HPReal term = HPReal(sigma_of(n) * Rational(2), wp) * pw /
                               HPReal((2 * n - 1) * 2 * n, wp);
                 tot += term;
                 if (abs(term) < eps) break;
                 pw *= z2x2;
             }
             return abs(log(sin(pi * x)) - (log(pi * x) - tot));
         },
         nullptr, "", 0});

    add({"LADDER_19_6",
         "Li3(3/4) + 2 Li3(1/3) + Li3(1/4) = 19/6 zeta(3) + ln3^3/3 - 4/3 ln2^3 "
         "- pi^2/3 ln2 + 2 ln(4/3) ln2^2",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp), l3 = log_rat(3, 1, wp);
             HPReal s = log_rat(4, 3, wp);
             HPReal lhs = li_direct(3, Rational(3, 4), wp) + li_direct(3, Rational(1, 3), wp) * 2
                          + li_direct(3, Rational(1, 4), wp);
             HPReal rhs = zeta3_reference(wp) * Rational(19, 6) + cube(l3) / 3
                          - cube(l2) * Rational(4, 3) - pi * pi * l2 / 3 + s * sq(l2) * 2;
             return abs(lhs - rhs);
         },
         nullptr, "", 0});

    add({"LADDER_15_8",
         "Li3(1/3) + 1/4 Li3(1/4) + Li3(2/3) = 15/8 zeta(3) + ln2^3/6 - pi^2/12 ln2 "
         "- ln(3/2)^3/6 + ln3 ln(3/2)^2/2 - pi^2/6 ln(3/2)",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp), l3 = log_rat(3, 1, wp);
             HPReal u = log_rat(3, 2, wp);
             HPReal lhs = li_direct(3, Rational(1, 3), wp)
                          + li_direct(3, Rational(1, 4), wp) * Rational(1, 4)
                          + li_direct(3, Rational(2, 3), wp);
             HPReal rhs = zeta3_reference(wp) * Rational(15, 8) + cube(l2) / 6 - pi * pi * l2 / 12
                          - cube(u) / 6 + l3 * sq(u) / 2 - pi * pi * u / 6;
             return abs(lhs - rhs);
         },
         nullptr, "", 0});

    // the trilogarithm functional equation at chosen parameters; all five
    // arguments lie inside (0,1)
    struct FEParam { const char* id; Rational x; };
    for (auto prm : {FEParam{"FUNC_EQ:x=1/5", Rational(1, 5)}, FEParam{"FUNC_EQ:x=1/3", Rational(1, 3)},
                     FEParam{"FUNC_EQ:x=1/2", Rational(1, 2)}, FEParam{"FUNC_EQ:x=2/3", Rational(2, 3)}}) {
        Rational x = prm.x;
        auto make = [x](long coeff_inv) {
            return [x, coeff_inv](long wp) {
                HPReal pi = HPReal::pi(wp);
                Rational A = (Rational(1) - x) / (Rational(1) + x);
                Rational inv1px = Rational(1) / (Rational(1) + x);
                HPReal l1px = log(HPReal(Rational(1) + x, wp));
                HPReal lhs = li_direct(3, A * A, wp) * Rational(1, 4) - li_direct(3, A, wp) * 2
                             + li_direct(3, Rational(1) - x, wp) * 2
                             + li_direct(3, inv1px, wp) * coeff_inv
                             - li_direct(3, Rational(1) - x * x, wp) * Rational(1, 2)
                             + pi * pi * l1px / 6 - cube(l1px) / 3;
                return abs(lhs - zeta3_reference(wp) * Rational(7, 4));
            };
        };
        add({prm.id,
             "7/4 zeta(3) = 1/4 Li3(((1-x)/(1+x))^2) - 2 Li3((1-x)/(1+x)) + 2 Li3(1-x) "
             "+ 2 Li3(1/(1+x)) - 1/2 Li3(1-x^2) + pi^2/6 ln(1+x) - ln(1+x)^3/3 at x = " + x.str(),
             make(2), make(1),
             "coefficient of Li3(1/(1+x)) is 2, not 1 as printed", 0});
    }

    add({"ID_91_12",
         "6 Li3(2/3) + 3 Li3(3/4) - Li3(8/9) = 91/12 zeta(3) - pi^2/2 ln2 + 7/3 ln2^3 "
         "- ln3^3/3 - ln(3/2)^3/3 - 2 ln(4/3) ln2^2 + ln3 ln(3/2)^2 + 2/3 ln(4/3)^3",
         [](long wp) {
             HPReal pi = HPReal::pi(wp), l2 = log_rat(2, 1, wp), l3 = log_rat(3, 1, wp);
             HPReal u = log_rat(3, 2, wp), s = log_rat(4, 3, wp);
             HPReal lhs = li_direct(3, Rational(2, 3), wp) * 6 + li_direct(3, Rational(3, 4), wp) * 3
                          - li_direct(3, Rational(8, 9), wp);
             HPReal rhs = zeta3_reference(wp) * Rational(91, 12) - pi * pi * l2 / 2
                          + cube(l2) * Rational(7, 3) - cube(l3) / 3 - cube(u) / 3
                          - s * sq(l2) * 2 + l3 * sq(u) + cube(s) * Rational(2, 3);
             return abs(lhs - rhs);
         },
         nullptr, "", 0});

    add({"LI3_DEG2_8_9",
         "trilogarithm expansion with sigma coefficients at x = 8/9 against direct summation",
         [](long wp) {
             return abs(li3_sigma_expansion(log_rat(9, 8, wp), wp, false, false)
                        - li_direct(3, Rational(8, 9), wp));
         },
         [](long wp) {
             return abs(li3_sigma_expansion(log_rat(9, 8, wp), wp, true, false)
                        - li_direct(3, Rational(8, 9), wp));
         },
         "series term is -24 [..] q^(2n+2) without the extra ln(1/x)^2 prefactor printed on it",
         0});

    add({"LI3_DEG4_2_3",
         "combined-coefficient trilogarithm expansion at x = 2/3 against direct summation",
         [](long wp) {
             return abs(li3_sigma_expansion(log_rat(3, 2, wp), wp, false, true)
                        - li_direct(3, Rational(2, 3), wp));
         },
         nullptr, "", 0});

    // surd-ladder rewrites; the exact arguments live in Q(sqrt2, sqrt3)
    {
        SurdValue c1{-4, 0, 0, 2};    // 2 sqrt2/(sqrt2+sqrt3)
        SurdValue d1{Rational(1, 2), 0, 0, Rational(1, 6)};  // (sqrt2+sqrt3)/(2 sqrt3)
        SurdValue e1{-48, 0, 0, 20};  // 4 sqrt6/(5+2 sqrt6)
        SurdValue W1{6, 0, 0, -2};    // 2 sqrt3/(sqrt2+sqrt3)
        SurdValue W1bad{-4, 0, 0, 2};
        add({"REWRITE_LI3_2_3",
             "Li3(2/3) = 7 zeta(3) + 8 Li3(sqrt(2/3)) - 8 Li3(2sqrt2/(sqrt2+sqrt3)) "
             "- 8 Li3((sqrt2+sqrt3)/(2sqrt3)) + 2 Li3(4sqrt6/(5+2sqrt6)) "
             "- 2pi^2/3 ln(2sqrt3/(sqrt2+sqrt3)) + 4/3 ln(2sqrt3/(sqrt2+sqrt3))^3",
             [c1, d1, e1, W1](long wp) {
                 HPReal A = sqrt(HPReal(Rational(2, 3), wp));
                 HPReal rhs = rewrite_rhs(A, surd_eval(c1, wp), surd_eval(d1, wp),
                                          surd_eval(e1, wp), surd_eval(W1, wp), wp);
                 return abs(li_direct(3, Rational(2, 3), wp) - rhs);
             },
             [c1, d1, e1, W1bad](long wp) {
                 HPReal A = sqrt(HPReal(Rational(2, 3), wp));
                 HPReal rhs = rewrite_rhs(A, surd_eval(c1, wp), surd_eval(d1, wp),
                                          surd_eval(e1, wp), surd_eval(W1bad, wp), wp);
                 return abs(li_direct(3, Rational(2, 3), wp) - rhs);
             },
             "log argument is 2sqrt3/(sqrt2+sqrt3) = 1+x, not 2sqrt2/(sqrt2+sqrt3)", 0});
    }
    {
        SurdValue c2{-6, 0, 4, 0};   // 2 sqrt3/(2+sqrt3)
        SurdValue d2{Rational(1, 2), 0, Rational(1, 4), 0};  // (2+sqrt3)/4
        SurdValue e2{-96, 0, 56, 0};  // 8 sqrt3/(7+4 sqrt3)
        SurdValue W2{8, 0, -4, 0};    // 4/(2+sqrt3)
        add({"REWRITE_LI3_3_4",
             "Li3(3/4) = 7 zeta(3) + 8 Li3(sqrt(3/4)) - 8 Li3(2sqrt3/(2+sqrt3)) "
             "- 8 Li3((2+sqrt3)/4) + 2 Li3(8sqrt3/(7+4sqrt3)) "
             "- 2pi^2/3 ln(4/(2+sqrt3)) + 4/3 ln(4/(2+sqrt3))^3",
             [c2, d2, e2, W2](long wp) {
                 HPReal A = sqrt(HPReal(Rational(3, 4), wp));
                 HPReal rhs = rewrite_rhs(A, surd_eval(c2, wp), surd_eval(d2, wp),
                                          surd_eval(e2, wp), surd_eval(W2, wp), wp);
                 return abs(li_direct(3, Rational(3, 4), wp) - rhs);
             },
             [c2, d2, e2, W2](long wp) {
                 // printed arguments are the reciprocals, which exceed 1
                 HPReal A = sqrt(HPReal(Rational(3, 4), wp));
                 HPReal rhs = rewrite_rhs(A, surd_eval(surd_inv(c2), wp),
                                          surd_eval(surd_inv(d2), wp),
                                          surd_eval(surd_inv(e2), wp), surd_eval(W2, wp), wp);
                 return abs(li_direct(3, Rational(3, 4), wp) - rhs);
             },
             "the three surd trilogarithm arguments are printed as reciprocals (> 1)", 0});
    }
    add({"REWRITE_SQRT_2_3",
         "Li3(sqrt(2/3)) = 7 zeta(3) + 8 Li3((2/3)^(1/4)) - 8 Li3(2*2^(1/4)/(2^(1/4)+3^(1/4))) "
         "- 8 Li3((2^(1/4)+3^(1/4))/(2*3^(1/4))) + 2 Li3(4*6^(1/4)/(sqrt2+sqrt3+2*6^(1/4))) "
         "- 2pi^2/3 ln(2*3^(1/4)/(2^(1/4)+3^(1/4))) + 4/3 ln(..)^3",
         [](long wp) {
             Quartics Q(wp);
             HPReal A = sqrt(sqrt(HPReal(Rational(2, 3), wp)));
             HPReal c = Q.q2 * 2 / (Q.q2 + Q.q3);
             HPReal d = (Q.q2 + Q.q3) / (Q.q3 * 2);
             HPReal r2 = sqrt(HPReal(2, wp)), r3 = sqrt(HPReal(3, wp));
             HPReal e = Q.q6 * 4 / (r2 + r3 + Q.q6 * 2);
             HPReal W = Q.q3 * 2 / (Q.q2 + Q.q3);
             HPReal rhs = rewrite_rhs(A, c, d, e, W, wp);
             return abs(li_direct(3, sqrt(HPReal(Rational(2, 3), wp)), wp) - rhs);
         },
         [](long wp) {
             // printed first argument is (3/4)^(1/4)
             Quartics Q(wp);
             HPReal A = sqrt(sqrt(HPReal(Rational(3, 4), wp)));
             HPReal c = Q.q2 * 2 / (Q.q2 + Q.q3);
             HPReal d = (Q.q2 + Q.q3) / (Q.q3 * 2);
             HPReal r2 = sqrt(HPReal(2, wp)), r3 = sqrt(HPReal(3, wp));
             HPReal e = Q.q6 * 4 / (r2 + r3 + Q.q6 * 2);
             HPReal W = Q.q3 * 2 / (Q.q2 + Q.q3);
             HPReal rhs = rewrite_rhs(A, c, d, e, W, wp);
             return abs(li_direct(3, sqrt(HPReal(Rational(2, 3), wp)), wp) - rhs);
         },
         "first argument is (2/3)^(1/4); the remaining arguments are printed as reciprocals",
         0});
    add({"REWRITE_SQRT_3_4",
         "Li3(sqrt(3/4)) = 7 zeta(3) + 8 Li3((3/4)^(1/4)) - 8 Li3(2*3^(1/4)/(sqrt2+3^(1/4))) "
         "- 8 Li3((sqrt2+3^(1/4))/(2 sqrt2)) + 2 Li3(4*12^(1/4)/(2+sqrt3+2*12^(1/4))) "
         "- 2pi^2/3 ln(2 sqrt2/(sqrt2+3^(1/4))) + 4/3 ln(..)^3",
         [](long wp) {
             Quartics Q(wp);
             HPReal r2 = sqrt(HPReal(2, wp)), r3 = sqrt(HPReal(3, wp));
             HPReal A = sqrt(sqrt(HPReal(Rational(3, 4), wp)));
             HPReal c = Q.q3 * 2 / (r2 + Q.q3);
             HPReal d = (r2 + Q.q3) / (r2 * 2);
             HPReal e = Q.q12 * 4 / (HPReal(2, wp) + r3 + Q.q12 * 2);
             HPReal W = r2 * 2 / (r2 + Q.q3);
             HPReal rhs = rewrite_rhs(A, c, d, e, W, wp);
             return abs(li_direct(3, sqrt(HPReal(Rational(3, 4), wp)), wp) - rhs);
         },
         [](long wp) {
             // printed arguments are the reciprocals, which exceed 1
             Quartics Q(wp);
             HPReal r2 = sqrt(HPReal(2, wp)), r3 = sqrt(HPReal(3, wp));
             HPReal A = sqrt(sqrt(HPReal(Rational(3, 4), wp)));
             HPReal c = (r2 + Q.q3) / (Q.q3 * 2);
             HPReal d = (r2 * 2) / (r2 + Q.q3);
             HPReal e = (HPReal(2, wp) + r3 + Q.q12 * 2) / (Q.q12 * 4);
             HPReal W = r2 * 2 / (r2 + Q.q3);
             HPReal rhs = rewrite_rhs(A, c, d, e, W, wp);
             return abs(li_direct(3, sqrt(HPReal(Rational(3, 4), wp)), wp) - rhs);
         },
         "surd trilogarithm arguments printed as reciprocals; evaluated with the "
         "arguments inside (0,1)",
         0});

    // printed explicit form of Li3(2/3) after the rewrite; one cubic
    // coefficient requires the minimal edit -3/4 -> -2/3
    add({"EXPL_LI3_2_3",
         "explicit Li3(2/3): log/pi^2 terms plus four zeta(2n) series with arguments "
         "ln(3/2)/(4pi), v/(2pi), w/(2pi), z/(2pi)",
         [](long wp) {
             HPReal pi = HPReal::pi(wp);
             HPReal u = log_rat(3, 2, wp);
             HPReal v = surd_log(SurdValue{Rational(1, 2), 0, 0, Rational(1, 4)}, wp);   // (2+sqrt6)/4
             HPReal w = surd_log(SurdValue{6, 0, 0, -2}, wp);
             HPReal z = surd_log(SurdValue{Rational(1, 2), 0, 0, Rational(5, 24)}, wp);  // (12+5sqrt6)/24
             HPReal rhs = zeta3_reference(wp) - pi * pi * u * Rational(2, 3) + cube(u) / 12
                          + sq(u) * Rational(3, 2) - sq(u) * log(u / 2)
                          + pi * pi * v * Rational(4, 3) - cube(v) * Rational(2, 3) - sq(v) * 6
                          + sq(v) * log(v) * 4
                          + pi * pi * w * Rational(2, 3) + cube(w) * Rational(2, 3) - sq(w) * 6
                          + sq(w) * log(w) * 4
                          - pi * pi * z / 3 + cube(z) / 6 + sq(z) * Rational(3, 2) - sq(z) * log(z)
                          + sq(u) * zser3(u, pi * 4, wp) * 4 - sq(v) * zser3(v, pi * 2, wp) * 16
                          - sq(w) * zser3(w, pi * 2, wp) * 16 + sq(z) * zser3(z, pi * 2, wp) * 4;
             return abs(li_direct(3, Rational(2, 3), wp) - rhs);
         },
         [](long wp) {
             HPReal pi = HPReal::pi(wp);
             HPReal u = log_rat(3, 2, wp);
             HPReal v = surd_log(SurdValue{Rational(1, 2), 0, 0, Rational(1, 4)}, wp);
             HPReal w = surd_log(SurdValue{6, 0, 0, -2}, wp);
             HPReal z = surd_log(SurdValue{Rational(1, 2), 0, 0, Rational(5, 24)}, wp);
             HPReal rhs = zeta3_reference(wp) - pi * pi * u * Rational(2, 3) + cube(u) / 12
                          + sq(u) * Rational(3, 2) - sq(u) * log(u / 2)
                          + pi * pi * v * Rational(4, 3) - cube(v) * Rational(3, 4) - sq(v) * 6
                          + sq(v) * log(v) * 4
                          + pi * pi * w * Rational(2, 3) + cube(w) * Rational(2, 3) - sq(w) * 6
                          + sq(w) * log(w) * 4
                          - pi * pi * z / 3 + cube(z) / 6 + sq(z) * Rational(3, 2) - sq(z) * log(z)
                          + sq(u) * zser3(u, pi * 4, wp) * 4 - sq(v) * zser3(v, pi * 2, wp) * 16
                          - sq(w) * zser3(w, pi * 2, wp) * 16 + sq(z) * zser3(z, pi * 2, wp) * 4;
             return abs(li_direct(3, Rational(2, 3), wp) - rhs);
         },
         "cubic coefficient of ln((sqrt2+sqrt3)/(2sqrt2))^3 is -2/3, not -3/4; the "
         "ln(ln(..)) argument is the same (sqrt2+sqrt3)/(2sqrt2) log", 0});

    add({"EXPL_LI3_3_4",
         "explicit Li3(3/4): log/pi^2 terms plus four zeta(2n) series with arguments "
         "ln(4/3)/(4pi) and three surd logs over 2pi",
         [](long wp) {
             HPReal pi = HPReal::pi(wp);
             HPReal s = log_rat(4, 3, wp);
             HPReal v = surd_log(SurdValue{Rational(1, 2), 0, Rational(1, 3), 0}, wp);   // (3+2sqrt3)/6
             HPReal w = surd_log(SurdValue{8, 0, -4, 0}, wp);
             HPReal z = surd_log(SurdValue{Rational(1, 2), 0, Rational(7, 24), 0}, wp);  // (12+7sqrt3)/24
             HPReal rhs = zeta3_reference(wp) - pi * pi * s * Rational(2, 3) + cube(s) / 12
                          + sq(s) * Rational(3, 2) - sq(s) * log(s / 2)
                          + pi * pi * v * Rational(4, 3) - cube(v) * Rational(2, 3) - sq(v) * 6
                          + sq(v) * log(v) * 4
                          + pi * pi * w * Rational(2, 3) + cube(w) * Rational(2, 3) - sq(w) * 6
                          + sq(w) * log(w) * 4
                          - pi * pi * z / 3 + cube(z) / 6 + sq(z) * Rational(3, 2) - sq(z) * log(z)
                          + sq(s) * zser3(s, pi * 4, wp) * 4 - sq(v) * zser3(v, pi * 2, wp) * 16
                          - sq(w) * zser3(w, pi * 2, wp) * 16 + sq(z) * zser3(z, pi * 2, wp) * 4;
             return abs(li_direct(3, Rational(3, 4), wp) - rhs);
         },
         [](long wp) {
             // as printed: sign flips on three cubes, ln(ln(4/3)) without the half,
             // and coefficient 2 pi^2 on the ln(4/(2+sqrt3)) term
             HPReal pi = HPReal::pi(wp);
             HPReal s = log_rat(4, 3, wp);
             HPReal v = surd_log(SurdValue{Rational(1, 2), 0, Rational(1, 3), 0}, wp);
             HPReal w = surd_log(SurdValue{8, 0, -4, 0}, wp);
             HPReal z = surd_log(SurdValue{Rational(1, 2), 0, Rational(7, 24), 0}, wp);
             HPReal rhs = zeta3_reference(wp) - pi * pi * s * Rational(2, 3) - cube(s) / 12
                          + sq(s) * Rational(3, 2) - sq(s) * log(s)
                          + pi * pi * v * Rational(4, 3) + cube(v) * Rational(2, 3) - sq(v) * 6
                          + sq(v) * log(v) * 4
                          + pi * pi * w * 2 + cube(w) * Rational(2, 3) - sq(w) * 6
                          + sq(w) * log(w) * 4
                          - pi * pi * z / 3 - cube(z) / 6 + sq(z) * Rational(3, 2) - sq(z) * log(z)
                          + sq(s) * zser3(s, pi * 4, wp) * 4 - sq(v) * zser3(v, pi * 2, wp) * 16
                          - sq(w) * zser3(w, pi * 2, wp) * 16 + sq(z) * zser3(z, pi * 2, wp) * 4;
             return abs(li_direct(3, Rational(3, 4), wp) - rhs);
         },
         "cube terms of ln(4/3), ln((2+sqrt3)/(2sqrt3)), ln((7+4sqrt3)/(8sqrt3)) change "
         "sign as printed; pi^2 coefficient of ln(4/(2+sqrt3)) is 2pi^2/3; the ln(3/2) "
         "double log carries the half factor", 0});

    add({"BBP_LAST_TERM",
         "base-4096 series for zeta(3): the final denominator offset is 23; the printed "
         "duplicate offset 18 breaks convergence",
         [](long wp) {
             return abs(bbp_zeta3(20, wp, BBPTermSet::corrected).value
                        - zeta3_reference(wp));
         },
         [](long wp) {
             return abs(bbp_zeta3_adjudication(20, wp, BBPTermSet::printed_verbatim)
                        - zeta3_reference(wp));
         },
         "final term 1/(24k+18)^3 corrected to 1/(24k+23)^3 by scanning offsets 19..23",
         0});
}

std::vector<std::string> IdentityRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.id);
    return out;
}

const IdentityDescriptor& IdentityRegistry::get(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity id: " + id);
}

ResidualReport IdentityRegistry::verify(const std::string& id, long precision_bits) const {
    const auto& e = get(id);
    long wp = working_precision(precision_bits);
    ResidualReport r;
    r.id = id;
    r.precision_bits = precision_bits;
    r.residual = e.residual(wp);
    if (e.tol_override > 0) {
        r.tolerance = HPReal(64);
        mpfr_set_d(r.tolerance.raw(), e.tol_override, MPFR_RNDN);
    } else {
        r.tolerance = HPReal::pow2(-precision_bits / 2, wp);
    }
    r.pass = r.residual < r.tolerance;
    if (!e.printed_residual) {
        r.status = r.pass ? "verified" : "failed";
    } else {
        bool printed_pass = false;
        try {
            printed_pass = e.printed_residual(wp) < r.tolerance;
        } catch (const std::domain_error&) {
            printed_pass = false;  // printed form not even evaluable
        }
        if (printed_pass && r.pass) r.status = "verified";
        else if (r.pass) { r.status = "corrected"; r.note = e.correction_note; }
        else r.status = "failed";
    }
    return r;
}

std::vector<ResidualReport> IdentityRegistry::verify_all(long precision_bits) const {
    std::vector<ResidualReport> out;
    for (const auto& e : entries_) out.push_back(verify(e.id, precision_bits));
    return out;
}

std::string IdentityRegistry::ledger_json(const std::vector<ResidualReport>& reports,
                                          const IdentityRegistry& reg) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) os << ",";
        os << "{\"id\":\"" << r.id << "\",\"source_quote\":\"" << reg.get(r.id).statement
           << "\",\"verdict\":\"" << r.status << "\",\"residual_decimal\":\""
           << r.residual.str(6) << "\",\"corrected\":" << (r.status == "corrected" ? "true" : "false")
           << ",\"note\":\"" << r.note << "\"}";
    }
    os << "]";
    return os.str();
}

} // namespace zetalab
