#include <doctest.h>

#include <cmath>

#include "zetalab/polylog.hpp"
#include "zetalab/series.hpp"

using namespace zetalab;

namespace {
// reference magnitudes computed independently at 120-decimal precision
const double kExpected[7][8] = {
    // CLAUSEN_X6
    {2.311e-5, 2.163e-7, 2.773e-9, 4.196e-11, 7.049e-13, 1.274e-14, 2.43e-16, 4.835e-18},
    // LOG2
    {1.023e-5, 4.172e-8, 2.336e-10, 1.545e-12, 1.135e-14, 8.972e-17, 7.49e-19, 6.523e-21},
    // ZETA2_LOG2
    {2.21e-5, 1.202e-7, 8.415e-10, 6.678e-12, 5.724e-14, 5.172e-16, 4.858e-18, 4.701e-20},
    // POLY_LOG2
    {2.536e-6, 1.511e-9, 7.772e-13, 2.807e-16, 2.494e-20, 5.936e-23, 5.59e-26, 2.454e-29},
    // TRI
    {1.961e-7, 3.953e-11, 7.214e-15, 1.05e-18, 1.051e-22, 1.651e-27, 2.293e-30, 6.619e-34},
    // SIX
    {3.413e-8, 2.437e-12, 1.74e-16, 1.121e-20, 5.92e-25, 1.936e-29, 5.851e-34, 1.792e-37},
    // FINAL
    {7.47e-13, 8.713e-17, 1.195e-20, 1.811e-24, 2.931e-28, 4.959e-32, 8.622e-36, 1.518e-39},
};
const MethodId kIds[7] = {MethodId::CLAUSEN_X6, MethodId::LOG2, MethodId::ZETA2_LOG2,
                          MethodId::POLY_LOG2,  MethodId::TRI,  MethodId::SIX,
                          MethodId::FINAL};

bool within(double measured, double expected, double rel) {
    return measured > expected * (1 - rel) && measured < expected * (1 + rel);
}
} // namespace

TEST_CASE("registry basics") {
    CHECK(method_from_string("FINAL") == MethodId::FINAL);
    CHECK_THROWS_AS(method_from_string("NOPE"), std::invalid_argument);
    CHECK(method_descriptor(MethodId::TRI).components.size() == 3);
    CHECK(method_descriptor(MethodId::SIX).components.size() == 6);
    CHECK(method_descriptor(MethodId::FINAL).components.size() == 15);
    CHECK(method_registry_json().find("\"id\":\"SIX\"") != std::string::npos);
}

TEST_CASE("analytic parts") {
    long wp = working_precision(256);
    HPReal pi = HPReal::pi(wp);
    // pi^2/8 - pi^2/12 ln(pi/3)
    HPReal want = pi * pi / 8 - pi * pi * log(pi / 3) / 12;
    CHECK(abs(analytic_terms(MethodId::CLAUSEN_X6, 256) - want) < HPReal::pow2(-250, wp));
    PTable t;
    SeriesResult r0 = eval_method(t, MethodId::CLAUSEN_X6, 0, 256);
    CHECK(abs(r0.value - want) < HPReal::pow2(-250, wp));
    CHECK(r0.term_trace.empty());
}

TEST_CASE("abs errors against the reference match the frozen magnitudes") {
    PTable t;
    for (int m = 0; m < 7; ++m) {
        for (long order = 1; order <= 8; ++order) {
            SeriesResult r = eval_method(t, kIds[m], order, 256);
            INFO(to_string(kIds[m]) << " order " << order);
            CHECK(within(r.abs_error.to_double(), kExpected[m][order - 1], 0.02));
        }
    }
}

TEST_CASE("error decays monotonically and the first-omitted bound holds") {
    PTable t;
    for (int m = 0; m < 7; ++m) {
        double prev = 1e300;
        for (long order = 1; order <= 8; ++order) {
            SeriesResult r = eval_method(t, kIds[m], order, 256);
            double err = r.abs_error.to_double();
            double est = r.error_estimate.to_double();
            INFO(to_string(kIds[m]) << " order " << order);
            CHECK(err < prev);
            CHECK(est > 0);
            CHECK(err <= 10 * est);
            prev = err;
        }
    }
}

TEST_CASE("series arguments of the ladder methods stay below ln(3/2)/(2 sqrt6)") {
    long wp = working_precision(128);
    HPReal qmax = log(HPReal(Rational(3, 2), wp)) / (sqrt(HPReal(6, wp)) * 2);
    HPReal bound = qmax + HPReal::pow2(-90, wp);
    for (MethodId id : {MethodId::TRI, MethodId::SIX, MethodId::FINAL}) {
        for (const auto& c : method_descriptor(id).components) {
            HPReal q = c.arg.eval_L(wp) / (sqrt(HPReal(6, wp)) * 2);
            INFO(to_string(id) << " " << c.label);
            CHECK(q <= bound);
            CHECK(q < HPReal(Rational(1, 9), wp));
        }
    }
}

TEST_CASE("trace length is order times the number of components") {
    PTable t;
    SeriesResult r = eval_method(t, MethodId::SIX, 3, 160, /*want_trace=*/true);
    CHECK(r.term_trace.size() == 3u * 6u);
    SeriesResult rf = eval_method(t, MethodId::FINAL, 2, 160, true);
    CHECK(rf.term_trace.size() == 2u * 15u);
}

TEST_CASE("zeta2 method converges to pi^2/6") {
    PTable t;
    long wp = working_precision(256);
    SeriesResult r = eval_method(t, MethodId::ZETA2_LOG2, 40, 256);
    HPReal want = HPReal::pi(wp) * HPReal::pi(wp) / 6;
    CHECK(abs(r.value - want) < HPReal::pow2(-200, wp));
}

TEST_CASE("coefficient family leading term and alternating bound") {
    PTable t;
    long wp = working_precision(192);
    // i = 1, leading inner term is q^2/12
    HPReal q = log(HPReal(Rational(3, 2), wp)) / (sqrt(HPReal(6, wp)) * 2);
    HPReal c1_1 = coefficient_family(t, 1, q, 1, 192);
    CHECK(abs(c1_1 - q * q / 12) < HPReal::pow2(-180, wp));
    // alternating tail bound: |truncated - converged| <= first omitted inner term
    HPReal full = coefficient_family(t, 1, q, 0, 192);
    for (long inner = 2; inner <= 6; ++inner) {
        HPReal trunc = coefficient_family(t, 1, q, inner, 192);
        Rational pv = t.p_poly(1, inner + 1);
        long n = inner + 1;
        Rational coef = Rational(n) * Rational(n + 1) * pv /
                        (Rational(2 * n - 1) * Rational(2 * n) * Rational(2 * n + 1) *
                         Rational(2 * n + 2));
        HPReal omitted = abs(HPReal(coef, wp) * pow_si(q, 2 * n));
        CHECK(abs(full - trunc) <= omitted + HPReal::pow2(-180, wp));
    }
}

TEST_CASE("both index readings computed; only the shifted one reproduces zeta(3)") {
    PTable t;
    long wp = working_precision(160);
    HPReal q = log(HPReal(2, wp)) / (sqrt(HPReal(6, wp)) * 2);
    // assemble the ln2-ladder with each reading at order 12
    HPReal base = analytic_terms(MethodId::POLY_LOG2, 160);
    HPReal shifted = base, plain = base;
    for (long i = 1; i <= 12; ++i) {
        shifted += coefficient_family(t, i, q, 0, 160, 12, false) * pow_si(q, 2 * i) * 192;
        plain += coefficient_family(t, i, q, 0, 160, 12, true) * pow_si(q, 2 * i) * 192;
    }
    HPReal ref = zeta3_reference(160);
    CHECK(abs(shifted - ref).to_double() < 1e-14);
    CHECK(abs(plain - ref).to_double() > 1e-7);   // stuck near 2.6e-6
    CHECK(abs(plain - ref).to_double() < 1e-4);
}

TEST_CASE("li3 expansions match direct summation within their estimates") {
    PTable t;
    struct Case { Rational x; long order; };
    for (const auto& c : {Case{Rational(8, 9), 6}, Case{Rational(2, 3), 6},
                          Case{Rational(3, 4), 6}, Case{Rational(1, 2), 8}}) {
        for (Li3Variant v : {Li3Variant::deg2, Li3Variant::deg4}) {
            Li3Result r = li3_expansion(t, SurdValue::rational(c.x), c.order, 192, v);
            INFO(c.x.str());
            CHECK(r.abs_error < r.error_estimate);
        }
    }
    // frozen cross-check values at order 6 / 8
    CHECK(li3_expansion(t, SurdValue::rational(Rational(8, 9)), 6, 256, Li3Variant::deg2)
              .abs_error.to_double() == doctest::Approx(5.463e-30).epsilon(0.02));
    CHECK(li3_expansion(t, SurdValue::rational(Rational(2, 3)), 6, 256, Li3Variant::deg4)
              .abs_error.to_double() == doctest::Approx(6.056e-24).epsilon(0.02));
    CHECK(li3_expansion(t, SurdValue::rational(Rational(1, 2)), 8, 256, Li3Variant::deg2)
              .abs_error.to_double() == doctest::Approx(8.154e-22).epsilon(0.02));
    CHECK(li3_expansion(t, SurdValue::rational(Rational(1, 2)), 8, 256, Li3Variant::deg4)
              .abs_error.to_double() == doctest::Approx(7.344e-24).epsilon(0.02));
    CHECK_THROWS_AS(li3_expansion(t, SurdValue::rational(Rational(3, 2)), 4, 128,
                                  Li3Variant::deg2),
                    std::domain_error);
}

TEST_CASE("li3 expansion on a surd argument") {
    PTable t;
    // x = 2 sqrt2/(sqrt2+sqrt3) = 2 sqrt6 - 4, one of the rewrite arguments
    SurdValue x{-4, 0, 0, 2};
    for (Li3Variant v : {Li3Variant::deg2, Li3Variant::deg4}) {
        Li3Result r = li3_expansion(t, x, 6, 192, v);
        CHECK(r.abs_error < r.error_estimate);
        CHECK(r.abs_error.to_double() < 1e-18);
    }
}

TEST_CASE("li3 expansion at one half against the closed form") {
    PTable t;
    long wp = working_precision(256);
    HPReal pi = HPReal::pi(wp), l2 = log(HPReal(2, wp));
    HPReal closed = zeta3_reference(256) * Rational(7, 8) + l2 * l2 * l2 / 6 - pi * pi * l2 / 12;
    for (Li3Variant v : {Li3Variant::deg2, Li3Variant::deg4}) {
        Li3Result r = li3_expansion(t, SurdValue::rational(Rational(1, 2)), 8, 256, v);
        CHECK(abs(r.value - closed) < r.error_estimate);
    }
}

TEST_CASE("deg4 truncation is strictly tighter than deg2 at equal order") {
    PTable t;
    for (const Rational& x : {Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(8, 9)}) {
        for (long order : {2L, 4L, 6L}) {
            Li3Result d2 = li3_expansion(t, SurdValue::rational(x), order, 192, Li3Variant::deg2);
            Li3Result d4 = li3_expansion(t, SurdValue::rational(x), order, 192, Li3Variant::deg4);
            INFO(x.str() << " order " << order);
            CHECK(d4.error_estimate < d2.error_estimate);
        }
    }
}

TEST_CASE("eval_method input validation") {
    PTable t;
    CHECK_THROWS_AS(eval_method(t, MethodId::FINAL, -1, 128), std::invalid_argument);
}
