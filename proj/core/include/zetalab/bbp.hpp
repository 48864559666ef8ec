#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetalab/hpreal.hpp"

namespace zetalab {

// Base-4096 series for zeta(3): (1/672) sum_k 4096^-k sum_j num_j/(24k+j)^3.
// The printed term list repeats the offset 18 in its final term; the
// adjudicated set replaces it with offset 23 (the unique offset in 19..23
// that restores convergence).
enum class BBPTermSet { corrected, printed_verbatim };

struct BBPTerm {
    int offset;      // j in 1..23
    long numerator;  // signed
};

const std::vector<BBPTerm>& bbp_terms(BBPTermSet set);
std::string bbp_terms_json(BBPTermSet set);

struct BBPResult {
    HPReal value;
    HPReal abs_error;  // |value - zeta3 reference|
    long k_max;
};

// Summation with k ascending (deterministic rounding order). Evaluating the
// verbatim printed set through this entry point raises IntegrityError; use
// bbp_zeta3_adjudication for the negative control.
BBPResult bbp_zeta3(long k_max, long precision_bits, BBPTermSet set = BBPTermSet::corrected);

// raw evaluation of either term set, for adjudication runs and tests
HPReal bbp_zeta3_adjudication(long k_max, long precision_bits, BBPTermSet set);

// scans final-term offsets 19..23 against the reference and returns the
// unique offset that converges
int bbp_scan_final_offset(long precision_bits);

} // namespace zetalab
