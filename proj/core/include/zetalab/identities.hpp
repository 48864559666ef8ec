#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetalab/hpreal.hpp"

namespace zetalab {

// One verifiable relation: the adjudicated form is what the artifact
// evaluates; when the printed source form differs, it is kept alongside so
// the verifier can demonstrate the failure and report the minimal edit.
struct IdentityDescriptor {
    std::string id;
    std::string statement;  // mathematical statement, used as the ledger's source_quote
    std::function<HPReal(long)> residual;          // adjudicated |lhs - rhs| path
    std::function<HPReal(long)> printed_residual;  // empty when the printed form is the adjudicated one
    std::string correction_note;  // the minimal edit applied, empty if verbatim
    double tol_override = 0;      // absolute tolerance for oracle-grade entries; 0 = 2^(-prec/2)
};

struct ResidualReport {
    std::string id;
    long precision_bits = 0;
    HPReal residual{64};
    HPReal tolerance{64};
    bool pass = false;
    std::string status;  // verified | corrected | failed
    std::string note;
};

class IdentityRegistry {
public:
    static IdentityRegistry& instance();

    std::vector<std::string> ids() const;
    const IdentityDescriptor& get(const std::string& id) const;  // throws std::invalid_argument
    ResidualReport verify(const std::string& id, long precision_bits) const;
    std::vector<ResidualReport> verify_all(long precision_bits) const;

    // [{id, source_quote, verdict, residual_decimal, corrected, note}, ...]
    static std::string ledger_json(const std::vector<ResidualReport>& reports,
                                   const class IdentityRegistry& reg);

private:
    IdentityRegistry();
    std::vector<IdentityDescriptor> entries_;
};

} // namespace zetalab
