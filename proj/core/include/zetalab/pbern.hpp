#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

// Raised when two independent computation routes disagree where exact
// agreement is required.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// Bernoulli number B_m from the classical recurrence
// sum_{k=0}^{m} C(m+1,k) B_k = 0, cached. Independent oracle route.
const Rational& bernoulli_classical(long m);

// zeta(2n) = c * pi^(2n) by the closed Bernoulli form
// c = (-1)^(n+1) B_{2n} 2^(2n) / (2 (2n)!)
Rational zeta_even_euler_route(long n);

struct ZetaEvenCoefficient {
    long n;
    Rational coeff;  // zeta(2n) = coeff * pi^(2n)
};

// Table of the rational polynomial family P^(l)(n) that generates the
// zeta(2n) coefficients through
//    sigma(n) = sum_{l=1}^{n} (-1)^(l+1) C(n+2-l,2) P^(l)(n),
//    zeta(2n) = zeta(2)^n sigma(n) / (2n-1).
//
// Base data: P^(1)(n) = 1/n and the closed forms
//    P^(2)(n) = 3/10,  P^(3)(n) = 3(21n-43)/1400,
//    P^(4)(n) = (63n^2 - 387n + 590)/14000.
// Rows with l >= 5 are closed by the binomial moment ladder
//    T_{2k}(n) = sum_l (-1)^(l+1) C(n+2k-l, 2k) P^(l)(n)
// whose values obey
//    T_0(n) = sigma(n)/(n(2n-1)),  T_2(n) = sigma(n),
//    T_{2k+2}(n) = [24 k^2 T_{2k}(n-1)
//                   + (2n-2k)(2n-2k-1) T_{2k}(n)] / ((2k+1)(2k+2)).
// The closure reproduces the printed closed forms, makes every P^(l) an
// exact polynomial of degree l-2, and gives the diagonal P^(l)(l)
// = 6^l/(2l+1)!.  Entries are append-only; rows never change once computed.
class PTable {
public:
    PTable() = default;
    PTable(const PTable&) = delete;
    PTable& operator=(const PTable&) = delete;

    // builds rows up to max_n; single-writer, call before sharing
    void ensure_rows(long max_n);
    void freeze();
    bool frozen() const { return frozen_; }
    long rows_built() const { return static_cast<long>(rows_.size()); }

    // exact P^(l)(n); for n beyond built rows the degree-(l-2) polynomial is
    // extended by finite differences (requires rows up to 2l-2)
    Rational p_poly(long l, long n) const;

    // sum_{l=1}^{n} (-1)^(l+1) C(n+2-l,2) P^(l)(n); builds rows on demand
    // unless frozen
    Rational sigma_coeff(long n);

    // zeta(2n) = coeff * pi^(2n) via the P-route; raises IntegrityError if it
    // does not equal the closed Bernoulli route exactly
    ZetaEvenCoefficient zeta_even_coeff(long n);

    // exact B_m for even m >= 2, inverted from the P-route zeta coefficient
    Rational bernoulli_even(long m);

    // bracket coefficient of the (ln(1/x)/(2 sqrt6))^(2n+2) term of the
    // combined degree-4 trilogarithm expansion:
    //   (-1)^(n+1) [ A(n+1) - 2 sigma(n) ] / ((2n-1)2n(2n+1)(2n+2)(2n+3)(2n+4))
    // with A(m) = sum_{l=1}^{m} (-1)^(l+1) C(m+4-l, 4) P^(l)(m)
    Rational combined_coeff(long n);

    // JSON dump [{"l":..,"n":..,"value":"p/q"},...] for all built entries
    // with n <= max_n
    std::string dump_json(long max_n) const;

private:
    Rational closed_form(long l, long n) const;
    Rational t_target(long k, long n);
    const Rational& sigma_euler(long n);
    void solve_row(long n);
    Rational extend_poly(long l, long n) const;

    std::vector<std::vector<Rational>> rows_;  // rows_[n-1] = values for l = 1..n
    std::map<std::pair<long, long>, Rational> t_memo_;
    std::vector<Rational> sigma_memo_;  // sigma_euler cache, index n (0 = 1/2)
    mutable std::map<long, std::vector<Rational>> diff_memo_;  // per-l forward differences
    bool frozen_ = false;
};

} // namespace zetalab
