// Acceptance suite: prints one pass/fail line per criterion and exits with
// the number of failed criteria. Failures that stem from published
// magnitudes this implementation cannot reproduce are reported with the
// measured values so the gap is visible, not hidden.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "zetalab/bbp.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/pbern.hpp"
#include "zetalab/polylog.hpp"
#include "zetalab/series.hpp"
#include "zetalab/table1.hpp"

using namespace zetalab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int num, bool pass, const std::string& what, double elapsed,
            const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", num,
                what.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

bool within_one_order(double measured, double target) {
    double r = std::log10(measured / target);
    return r >= -1.0 && r <= 1.0;
}

} // namespace

int main() {
    // 1. zeta(2n) through the polynomial representation equals the closed
    //    Bernoulli route as exact rationals for n = 1..30, under 5 s
    {
        auto t0 = Clock::now();
        PTable t;
        bool ok = true;
        for (long n = 1; n <= 30 && ok; ++n)
            ok = (t.zeta_even_coeff(n).coeff == zeta_even_euler_route(n));
        double el = secs_since(t0);
        report(1, ok && el < 5.0, "zeta(2n) rational equality, both routes, n = 1..30", el);
    }

    // 2. P-polynomial closed forms reproduced exactly for all n <= 30, under 1 s
    {
        auto t0 = Clock::now();
        PTable t;
        t.ensure_rows(30);
        bool ok = true;
        for (long n = 2; n <= 30; ++n) {
            if (t.p_poly(2, n) != Rational(3, 10)) ok = false;
            if (n >= 3 && t.p_poly(3, n) != Rational(3 * (21 * n - 43), 1400)) ok = false;
            if (n >= 4 && t.p_poly(4, n) != Rational(63 * n * n - 387 * n + 590, 14000)) ok = false;
        }
        double el = secs_since(t0);
        report(2, ok && el < 1.0, "closed forms of P^(2), P^(3), P^(4) for n <= 30", el);
    }

    // 3. identity suite at 256 bits: residual < 1e-60, verbatim or corrected
    {
        auto t0 = Clock::now();
        const auto& reg = IdentityRegistry::instance();
        long wp = working_precision(256);
        HPReal bound(1, wp);
        for (int i = 0; i < 60; ++i) bound /= 10;
        const std::vector<std::string> suite = {
            "LI3_HALF",       "LI2_HALF",        "LADDER_19_6",     "LADDER_15_8",
            "ID_91_12",       "FUNC_EQ:x=1/5",   "FUNC_EQ:x=1/3",   "FUNC_EQ:x=1/2",
            "FUNC_EQ:x=2/3",  "REWRITE_LI3_2_3", "REWRITE_LI3_3_4", "REWRITE_SQRT_2_3",
            "REWRITE_SQRT_3_4"};
        bool ok = true;
        std::string worst;
        for (const auto& id : suite) {
            ResidualReport r = reg.verify(id, 256);
            bool this_ok = (r.status == "verified" || r.status == "corrected") &&
                           r.residual < bound;
            if (!this_ok) worst += id + " ";
            ok = ok && this_ok;
        }
        double el = secs_since(t0);
        report(3, ok && el < 30.0, "identity suite residuals < 1e-60 at 256 bits", el, worst);
    }

    // 4. convergence table reproduction: 12 cells, each within one order of
    //    magnitude of the published delta, under 60 s at 256 bits
    {
        auto t0 = Clock::now();
        PTable t;
        BenchReport rep = run_table1(t, 256);
        bool ok = true;
        std::string detail;
        char buf[160];
        for (const auto& row : rep.rows) {
            for (const auto& c : row.cells) {
                if (!c.pass) {
                    ok = false;
                    std::snprintf(buf, sizeof buf, "n=%ld %s measured %.2e vs %.2e; ",
                                  row.n, to_string(c.method).c_str(), c.abs_error,
                                  c.target_delta);
                    detail += buf;
                }
            }
        }
        double el = secs_since(t0);
        report(4, ok && el < 60.0, "table reproduction: 12 cells within one order", el, detail);
    }

    // 5. headline: FINAL at order 4 within 2e-26 of zeta(3)
    {
        auto t0 = Clock::now();
        PTable t;
        SeriesResult r = eval_method(t, MethodId::FINAL, 4, 256);
        double err = r.abs_error.to_double();
        bool ok = err <= 2e-26;
        char buf[120];
        std::snprintf(buf, sizeof buf, "measured %.3e (composition converges, bound unmet)", err);
        report(5, ok, "FINAL order 4 within 2e-26", secs_since(t0), ok ? "" : buf);
    }

    // 6. intermediate claims, each within one order of magnitude
    {
        auto t0 = Clock::now();
        PTable t;
        double log2_1 = eval_method(t, MethodId::LOG2, 1, 256).abs_error.to_double();
        double tri_4 = eval_method(t, MethodId::TRI, 4, 256).abs_error.to_double();
        double six_4 = eval_method(t, MethodId::SIX, 4, 256).abs_error.to_double();
        bool ok1 = within_one_order(log2_1, 1e-7);
        bool ok2 = within_one_order(tri_4, 0.3e-17);
        bool ok3 = within_one_order(six_4, 0.37e-21);
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "LOG2@1 %.2e vs 1e-7 [%s]; TRI@4 %.2e vs 3e-18 [%s]; SIX@4 %.2e vs 3.7e-22 [%s]",
                      log2_1, ok1 ? "ok" : "off", tri_4, ok2 ? "ok" : "off", six_4,
                      ok3 ? "ok" : "off");
        report(6, ok1 && ok2 && ok3, "intermediate claims LOG2@1, TRI@4, SIX@4",
               secs_since(t0), buf);
    }

    // 7. oracle independence: Euler-Maclaurin and accelerated alternating
    //    routes agree to at least 50 decimal digits
    {
        auto t0 = Clock::now();
        HPReal a = zeta_em(3, 256);
        HPReal b = zeta3_alternating(256);
        HPReal bound(1, a.precision());
        for (int i = 0; i < 50; ++i) bound /= 10;
        bool ok = abs(a - b) < bound;
        report(7, ok, "dual zeta(3) oracles agree to >= 50 digits", secs_since(t0));
    }

    // 8. negative control: verbatim printed term set fails, corrected set
    //    contracts at about 4096^-1 per outer term, scan finds offset 23
    {
        auto t0 = Clock::now();
        HPReal ref = zeta3_reference(256);
        bool verbatim_fails =
            abs(bbp_zeta3_adjudication(30, 256, BBPTermSet::printed_verbatim) - ref)
                .to_double() > 1e-9;
        bool contracts = true;
        double prev = bbp_zeta3(0, 256).abs_error.to_double();
        for (long k = 1; k <= 5; ++k) {
            double err = bbp_zeta3(k, 256).abs_error.to_double();
            double c = err / prev;
            contracts = contracts && c < 10.0 / 4096.0 && c > 0.1 / 4096.0;
            prev = err;
        }
        bool scan_ok = (bbp_scan_final_offset(192) == 23);
        report(8, verbatim_fails && contracts && scan_ok,
               "base-4096 adjudication: verbatim fails, corrected contracts, offset 23",
               secs_since(t0));
    }

    // 9. property suite
    {
        auto t0 = Clock::now();
        PTable t;
        bool ok = true;
        std::string detail;
        for (MethodId id : {MethodId::CLAUSEN_X6, MethodId::LOG2, MethodId::ZETA2_LOG2,
                            MethodId::POLY_LOG2, MethodId::TRI, MethodId::SIX, MethodId::FINAL}) {
            double prev = 1e300;
            for (long order = 1; order <= 8; ++order) {
                SeriesResult r = eval_method(t, id, order, 256);
                double err = r.abs_error.to_double();
                double est = r.error_estimate.to_double();
                if (!(err < prev) || !(err <= 10 * est)) {
                    ok = false;
                    detail += to_string(id) + "@" + std::to_string(order) + " ";
                }
                prev = err;
            }
        }
        for (const Rational& x : {Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(8, 9)}) {
            for (Li3Variant v : {Li3Variant::deg2, Li3Variant::deg4}) {
                Li3Result r = li3_expansion(t, SurdValue::rational(x), 6, 256, v);
                if (!(r.abs_error < r.error_estimate)) {
                    ok = false;
                    detail += "li3(" + x.str() + ") ";
                }
            }
            for (long order : {1L, 2L, 4L, 6L, 8L}) {
                Li3Result d2 = li3_expansion(t, SurdValue::rational(x), order, 192, Li3Variant::deg2);
                Li3Result d4 = li3_expansion(t, SurdValue::rational(x), order, 192, Li3Variant::deg4);
                if (!(d4.error_estimate < d2.error_estimate)) {
                    ok = false;
                    detail += "deg4!(" + x.str() + "@" + std::to_string(order) + ") ";
                }
            }
        }
        report(9, ok, "property suite: monotone decay, estimate bound, expansion cross-checks",
               secs_since(t0), detail);
    }

    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures;
}
