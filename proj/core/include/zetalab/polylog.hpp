#pragma once

#include "zetalab/hpreal.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// Li_s(x) = sum_{n>=1} x^n / n^s by direct summation, stopped when the
// geometric tail bound x^(N+1)/((N+1)^s (1-x)) drops below 2^(-working prec).
HPReal li_direct(long s, const HPReal& x, long precision_bits);
HPReal li_direct(long s, const Rational& x, long precision_bits);

// zeta(s) for integer s >= 2 via Euler-Maclaurin summation with exact
// Bernoulli corrections (classical recurrence route).
HPReal zeta_em(long s, long precision_bits);

// (3/4) zeta(3) = sum (-1)^(n-1)/n^3 under alternating-series convergence
// acceleration; second, structurally independent zeta(3) route.
HPReal zeta3_alternating(long precision_bits);

// cached zeta(3) ground truth at >= the requested precision (via zeta_em)
HPReal zeta3_reference(long precision_bits);

// Cl-type cosine series sum cos(2 pi n x)/n^3 for x in (0, 1/2]:
// direct summation to n = 10^4 plus an Euler-Maclaurin tail.
// Oracle grade only: absolute accuracy ~1e-12.
HPReal clausen3(const HPReal& x, long precision_bits);

} // namespace zetalab
