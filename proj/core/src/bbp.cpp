#include "zetalab/bbp.hpp"

#include <sstream>
#include <stdexcept>

#include "zetalab/pbern.hpp"
#include "zetalab/polylog.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

namespace {
const long kNumerators[22] = {2048, -11264, -1024, 11776, -512, 4096, 256, 3456,
                              128,  -704,   -64,   -128,  -32,  -176, 16,  216,
                              8,    64,     -4,    46,    -2,   -11};

std::vector<BBPTerm> make_terms(int last_offset) {
    std::vector<BBPTerm> t;
    for (int j = 1; j <= 22; ++j) t.push_back({j, kNumerators[j - 1]});
    t.push_back({last_offset, 1});
    return t;
}

HPReal evaluate(long k_max, long precision_bits, const std::vector<BBPTerm>& terms) {
    long wp = working_precision(precision_bits);
    HPReal sum(0, wp);
    for (long k = 0; k <= k_max; ++k) {
        // exact rational inner block, then one rounding per outer term
        Rational inner(0);
        for (const auto& t : terms) {
            mpz_class d(24 * k + t.offset);
            inner += Rational(t.numerator) / Rational(mpz_class(d * d * d));
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 4096, static_cast<unsigned long>(k));
        sum += HPReal(inner / Rational(scale), wp);
    }
    return sum / 672;
}
} // namespace

const std::vector<BBPTerm>& bbp_terms(BBPTermSet set) {
    static const std::vector<BBPTerm> corrected = make_terms(23);
    static const std::vector<BBPTerm> printed = make_terms(18);
    return set == BBPTermSet::corrected ? corrected : printed;
}

std::string bbp_terms_json(BBPTermSet set) {
    std::ostringstream os;
    os << "[";
    const auto& terms = bbp_terms(set);
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ",";
        os << "{\"offset\":" << terms[i].offset << ",\"numerator\":" << terms[i].numerator << "}";
    }
    os << "]";
    return os.str();
}

BBPResult bbp_zeta3(long k_max, long precision_bits, BBPTermSet set) {
    if (k_max < 0) throw std::domain_error("bbp_zeta3: k_max must be >= 0");
    if (set != BBPTermSet::corrected)
        throw IntegrityError(
            "bbp_zeta3: the verbatim printed term set does not converge to zeta(3) "
            "(duplicated offset 18); evaluate it via bbp_zeta3_adjudication");
    HPReal v = evaluate(k_max, precision_bits, bbp_terms(set));
    HPReal err = abs(v - zeta3_reference(precision_bits));
    return {v, err, k_max};
}

HPReal bbp_zeta3_adjudication(long k_max, long precision_bits, BBPTermSet set) {
    return evaluate(k_max, precision_bits, bbp_terms(set));
}

int bbp_scan_final_offset(long precision_bits) {
    HPReal ref = zeta3_reference(precision_bits);
    HPReal tol = HPReal::pow2(-precision_bits / 2, ref.precision());
    int found = 0;
    for (int j = 19; j <= 23; ++j) {
        HPReal v = evaluate(24, precision_bits, make_terms(j));
        if (abs(v - ref) < tol) {
            if (found != 0) throw IntegrityError("bbp_scan_final_offset: scan is not unique");
            found = j;
        }
    }
    if (found == 0) throw IntegrityError("bbp_scan_final_offset: no offset in 19..23 converges");
    return found;
}

} // namespace zetalab
