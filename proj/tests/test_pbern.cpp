#include <doctest.h>

#include <set>

#include "zetalab/pbern.hpp"

using namespace zetalab;

namespace {
Rational p3_closed(long n) { return Rational(3 * (21 * n - 43), 1400); }
Rational p4_closed(long n) { return Rational(63 * n * n - 387 * n + 590, 14000); }
Rational pow6(long n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 6, static_cast<unsigned long>(n));
    return Rational(p);
}
} // namespace

TEST_CASE("bernoulli classical recurrence") {
    CHECK(bernoulli_classical(2) == Rational(1, 6));
    CHECK(bernoulli_classical(4) == Rational(-1, 30));
    CHECK(bernoulli_classical(12) == Rational(-691, 2730));
    CHECK(bernoulli_classical(3) == Rational(0));
}

TEST_CASE("p_poly base rows and pinned values") {
    PTable t;
    CHECK(t.p_poly(1, 7) == Rational(1, 7));
    CHECK(t.p_poly(2, 5) == Rational(3, 10));
    CHECK(t.p_poly(3, 5) == Rational(93, 700));
    CHECK(t.p_poly(4, 4) == Rational(1, 280));
    CHECK_THROWS_AS(t.p_poly(5, 3), std::domain_error);
    CHECK_THROWS_AS(t.p_poly(0, 3), std::domain_error);
}

TEST_CASE("closed forms hold for every row up to 30") {
    PTable t;
    t.ensure_rows(30);
    for (long n = 2; n <= 30; ++n) {
        CHECK(t.p_poly(2, n) == Rational(3, 10));
        if (n >= 3) CHECK(t.p_poly(3, n) == p3_closed(n));
        if (n >= 4) CHECK(t.p_poly(4, n) == p4_closed(n));
    }
}

TEST_CASE("reconstructed rows match the frozen reference values") {
    PTable t;
    t.ensure_rows(8);
    CHECK(t.p_poly(5, 5) == Rational(3, 15400));
    CHECK(t.p_poly(5, 6) == Rational(471, 215600));
    CHECK(t.p_poly(5, 7) == Rational(4329, 539000));
    CHECK(t.p_poly(6, 6) == Rational(3, 400400));
    CHECK(t.p_poly(6, 7) == Rational(279, 1274000));
    CHECK(t.p_poly(7, 7) == Rational(3, 14014000));
    // diagonal law P^(l)(l) = 6^l/(2l+1)!
    for (long l = 2; l <= 8; ++l) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * l + 1));
        CHECK(t.p_poly(l, l) == pow6(l) / Rational(f));
    }
    // polynomial extension beyond built rows agrees with direct row solve
    Rational extended = t.p_poly(5, 20);
    PTable deep;
    deep.ensure_rows(20);
    CHECK(extended == deep.p_poly(5, 20));
}

TEST_CASE("sigma coefficients") {
    PTable t;
    CHECK(t.sigma_coeff(1) == Rational(1));
    CHECK(t.sigma_coeff(2) == Rational(6, 5));
    CHECK(t.sigma_coeff(3) == Rational(8, 7));
    CHECK(t.sigma_coeff(5) == Rational(288, 385));
    // sigma(3) reproduces zeta(6) = pi^6/945 through zeta(2)^3/5 * sigma
    CHECK(t.sigma_coeff(3) / (Rational(5) * pow6(3)) == Rational(1, 945));
}

TEST_CASE("zeta even coefficients: polynomial route equals the closed Bernoulli route") {
    PTable t;
    CHECK(t.zeta_even_coeff(1).coeff == Rational(1, 6));
    CHECK(t.zeta_even_coeff(2).coeff == Rational(1, 90));
    CHECK(t.zeta_even_coeff(3).coeff == Rational(1, 945));
    for (long n = 1; n <= 30; ++n)
        CHECK(t.zeta_even_coeff(n).coeff == zeta_even_euler_route(n));
}

TEST_CASE("bernoulli_even inverted from the zeta coefficients") {
    PTable t;
    CHECK(t.bernoulli_even(2) == Rational(1, 6));
    CHECK(t.bernoulli_even(4) == Rational(-1, 30));
    CHECK(t.bernoulli_even(12) == Rational(-691, 2730));
    for (long m = 2; m <= 60; m += 2) {
        CHECK(t.bernoulli_even(m) == bernoulli_classical(m));
        CHECK((t.bernoulli_even(m).sign() > 0) == (m % 4 == 2));
    }
    CHECK_THROWS_AS(t.bernoulli_even(3), std::domain_error);
    CHECK_THROWS_AS(t.bernoulli_even(0), std::domain_error);
}

TEST_CASE("combined degree-4 coefficients") {
    PTable t;
    CHECK(t.combined_coeff(1) == Rational(1, 3600));
    // the bracket collapses to (-1)^(n+1) sigma(n+1)(2n-1)2n / (12 D6(n)),
    // i.e. the degree-2 coefficient shifted by one order
    for (long n = 1; n <= 12; ++n) {
        Rational d4 = Rational(2 * n + 1) * Rational(2 * n + 2) * Rational(2 * n + 3) *
                      Rational(2 * n + 4);
        Rational want = t.sigma_coeff(n + 1) / (Rational(12) * d4);
        if (n % 2 == 0) want = -want;
        CHECK(t.combined_coeff(n) == want);
    }
}

TEST_CASE("denominator primes of the printed closed forms stay in {2,3,5,7}") {
    PTable t;
    t.ensure_rows(30);
    auto prime_ok = [](const Rational& r) {
        mpz_class d = r.den();
        for (long p : {2L, 3L, 5L, 7L})
            while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
                mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
        return d == 1;
    };
    for (long l = 2; l <= 4; ++l)
        for (long n = l; n <= 30; ++n) CHECK(prime_ok(t.p_poly(l, n)));
}

TEST_CASE("freeze makes the table immutable") {
    PTable t;
    t.ensure_rows(10);
    t.freeze();
    CHECK(t.frozen());
    CHECK(t.p_poly(4, 9) == p4_closed(9));
    CHECK_THROWS_AS(t.ensure_rows(40), std::logic_error);
}

TEST_CASE("ptable json dump") {
    PTable t;
    t.ensure_rows(3);
    std::string js = t.dump_json(2);
    CHECK(js == "[{\"l\":1,\"n\":1,\"value\":\"1\"},{\"l\":1,\"n\":2,\"value\":\"1/2\"},"
                "{\"l\":2,\"n\":2,\"value\":\"3/10\"}]");
}
