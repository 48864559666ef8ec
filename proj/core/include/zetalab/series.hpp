#pragma once

#include <string>
#include <vector>

#include "zetalab/hpreal.hpp"
#include "zetalab/pbern.hpp"
#include "zetalab/surd.hpp"

namespace zetalab {

enum class MethodId { CLAUSEN_X6, LOG2, ZETA2_LOG2, POLY_LOG2, TRI, SIX, FINAL, BBP };

MethodId method_from_string(const std::string& s);  // throws std::invalid_argument
std::string to_string(MethodId id);
std::vector<MethodId> all_methods();

// L = scale * ln(base), with the base held exactly (surd) or as a fixed
// fourth-root composition evaluated numerically; base > 1 always.
struct LogArg {
    enum class Kind { surd, quartic } kind = Kind::surd;
    SurdValue base;       // kind == surd
    int quartic_id = 0;   // kind == quartic, one of the QID_* constants
    Rational scale{1};

    HPReal eval_base(long wp) const;
    HPReal eval_L(long wp) const;   // scale * ln(base)
    friend bool operator==(const LogArg& a, const LogArg& b) {
        return a.kind == b.kind && a.base == b.base && a.quartic_id == b.quartic_id &&
               a.scale == b.scale;
    }
};

inline constexpr int QID_C3 = 1, QID_D3 = 2, QID_E3 = 3, QID_C4 = 4, QID_D4 = 5, QID_E4 = 6;

// coeff * pi^pi_pow * L(a1)^p1 * L(a2)^p2 * (loglog ? ln(L(a1)) : 1)
struct AnalyticTerm {
    Rational coeff;
    int pi_pow = 0;
    LogArg a1;
    int p1 = 0;
    LogArg a2;
    int p2 = 0;
    bool loglog = false;
};

enum class SeriesKind {
    zeta_d3,        // sum sgn_n zeta(2n)/(2n(2n+1)(2n+2)) q^(2n)
    zeta_d2,        // sum sgn_n zeta(2n)/(2n(2n+1)) q^(2n)
    cfamily,        // sum_{i<=N} c_i(q) q^(2i), inner sums to convergence
    deg4,           // L^2 sum_{n<=N} combined(n) q^(2n+2)
    bbp             // outer base-4096 terms
};

struct SeriesComponent {
    std::string label;
    Rational weight;
    int pi_pow = 0;     // prefactor pi power
    int l_pow = 0;      // prefactor power of this component's own L
    LogArg arg;         // provides L; q = L/(2 sqrt6) for cfamily/deg4, L/(2 pi) for zeta kinds
    Rational q_rat{0};  // rational series argument (used instead of a log)
    bool q_is_rational = false;
    SeriesKind kind = SeriesKind::zeta_d3;
    bool alternating = false;
};

struct MethodDescriptor {
    MethodId id;
    std::string name;
    std::string description;
    std::string note;  // adjudication / composition notes, empty when none
    bool target_is_zeta2 = false;
    std::vector<AnalyticTerm> analytic;
    std::vector<SeriesComponent> components;
};

const MethodDescriptor& method_descriptor(MethodId id);
std::string method_registry_json();

struct TraceEntry {
    int component;
    long index;
    HPReal value;
};

struct SeriesResult {
    MethodId method;
    long order = 0;
    long precision_bits = 0;
    HPReal value{64};
    HPReal error_estimate{64};  // sum of first omitted outer terms
    HPReal abs_error{64};       // against zeta3_reference (pi^2/6 for the zeta(2) method)
    std::vector<TraceEntry> term_trace;
};

// Evaluates a registered method at the given truncation order. The table is
// extended to the required depth unless frozen (then it must already be deep
// enough).
SeriesResult eval_method(PTable& table, MethodId id, long order, long precision_bits,
                         bool want_trace = false);

// analytic (order-0) part only
HPReal analytic_terms(MethodId id, long precision_bits);

// Inner coefficient family
//   c_i(q) = sum_n (-1)^(n+1) n(n+1) P^(i)(n+i-1)
//            / ((2n+2i-3)(2n+2i-2)(2n+2i-1)(2n+2i)) q^(2n).
// inner_order 0 selects the production rule: stop when the contribution falls
// below 2^(-wp)/(100 outer_budget). plain_index_reading evaluates the P^(i)(n)
// variant (with P zero for n < i), kept for adjudication only.
HPReal coefficient_family(PTable& table, long i, const HPReal& q, long inner_order,
                          long precision_bits, long outer_budget = 4,
                          bool plain_index_reading = false);

enum class Li3Variant { deg2, deg4 };

struct Li3Result {
    HPReal value{64};
    HPReal error_estimate{64};   // first omitted term magnitude
    HPReal abs_error{64};        // against li_direct
    long order = 0;
};

// Li3(x) for exact surd x in (0,1) through the expansion with sigma (deg2) or
// combined (deg4) coefficients, truncated at the outer order.
Li3Result li3_expansion(PTable& table, const SurdValue& x, long order, long precision_bits,
                        Li3Variant variant);

} // namespace zetalab
