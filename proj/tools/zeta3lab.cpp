// zeta3lab: compute, verify, and benchmark the series representations of
// zeta(3) (plus zeta(2)) against an independent numerical oracle.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "zetalab/bbp.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/pbern.hpp"
#include "zetalab/polylog.hpp"
#include "zetalab/series.hpp"
#include "zetalab/table1.hpp"

using namespace zetalab;

namespace {

long digits_for(long prec_bits) { return static_cast<long>(prec_bits * 0.30103) - 2; }

int cmd_compute(const std::string& method, long order, long prec, const std::string& format,
                bool trace) {
    PTable table;
    MethodId id = method_from_string(method);
    SeriesResult r = eval_method(table, id, order, prec, trace);
    long digits = digits_for(prec);
    if (format == "json") {
        std::cout << "{\"method\":\"" << method << "\",\"order\":" << order
                  << ",\"prec_bits\":" << prec << ",\"value\":\"" << r.value.str(digits)
                  << "\",\"error_estimate\":\"" << r.error_estimate.str(4)
                  << "\",\"abs_error\":\"" << r.abs_error.str(4) << "\"";
        if (trace) {
            std::cout << ",\"terms\":[";
            for (size_t i = 0; i < r.term_trace.size(); ++i) {
                const auto& t = r.term_trace[i];
                if (i) std::cout << ",";
                std::cout << "{\"component\":" << t.component << ",\"n\":" << t.index
                          << ",\"value\":\"" << t.value.str(6) << "\"}";
            }
            std::cout << "]";
        }
        std::cout << "}\n";
    } else if (format == "csv") {
        std::cout << "method,order,prec_bits,value,error_estimate,abs_error\n"
                  << method << "," << order << "," << prec << "," << r.value.str(digits) << ","
                  << r.error_estimate.str(4) << "," << r.abs_error.str(4) << "\n";
    } else {
        std::cout << "method          " << method << "\n"
                  << "order           " << order << "\n"
                  << "value           " << r.value.str(digits) << "\n"
                  << "error estimate  " << r.error_estimate.str(4) << "\n"
                  << "abs error       " << r.abs_error.str(4) << "\n";
        if (trace) {
            const auto& d = method_descriptor(id);
            for (const auto& t : r.term_trace) {
                std::cout << "  term[" << d.components[t.component].label << "][" << t.index
                          << "] = " << t.value.str(8) << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const std::string& id, bool verify_all, long prec) {
    const auto& reg = IdentityRegistry::instance();
    std::vector<ResidualReport> reports;
    if (verify_all) {
        reports = reg.verify_all(prec);
    } else {
        reports.push_back(reg.verify(id, prec));  // throws invalid_argument when unknown
    }
    bool ok = true;
    for (const auto& r : reports) {
        std::printf("%-22s %-10s residual %s (tol %s)%s%s\n", r.id.c_str(), r.status.c_str(),
                    r.residual.str(4).c_str(), r.tolerance.str(4).c_str(),
                    r.note.empty() ? "" : " -- ", r.note.c_str());
        ok = ok && (r.status == "verified" || r.status == "corrected");
    }
    std::cout << IdentityRegistry::ledger_json(reports, reg) << "\n";
    return ok ? 0 : 1;
}

int cmd_table1(long prec, const std::string& format) {
    PTable table;
    BenchReport rep = run_table1(table, prec);
    std::cout << render_table1(rep, format);
    return 0;
}

int cmd_reference(long digits) {
    HPReal z3 = zeta3_reference(static_cast<long>(digits * 3.33) + 64);
    std::cout << z3.str(digits, /*truncate=*/true) << "\n";
    return 0;
}

int cmd_list(const std::string& what) {
    if (what == "methods") {
        std::cout << method_registry_json() << "\n";
        return 0;
    }
    if (what == "identities") {
        for (const auto& id : IdentityRegistry::instance().ids()) std::cout << id << "\n";
        return 0;
    }
    std::cerr << "list: expected 'methods' or 'identities'\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision laboratory for series representations of zeta(3)"};
    app.require_subcommand(1);

    std::string method, format = "md", identity, list_what;
    long order = 4, prec = 256, digits = 10;
    bool trace = false, verify_all = false;

    auto* compute = app.add_subcommand("compute", "evaluate a method at a truncation order");
    compute->add_option("--method", method, "method id (see: list methods)")->required();
    compute->add_option("--order", order, "outer truncation order (>= 0)")->required();
    compute->add_option("--prec-bits", prec, "requested precision in bits");
    compute->add_option("--format", format, "md|csv|json");
    compute->add_flag("--trace", trace, "include the per-term trace");

    auto* verify = app.add_subcommand("verify", "verify identities against the oracle");
    verify->add_option("--identity", identity, "identity id (see: list identities)");
    verify->add_flag("--all", verify_all, "verify every registered identity");
    verify->add_option("--prec-bits", prec, "requested precision in bits");

    auto* table1 = app.add_subcommand("table1", "reproduce the convergence comparison table");
    table1->add_option("--prec-bits", prec, "requested precision in bits (>= 128)");
    table1->add_option("--format", format, "md|csv|json");

    auto* reference = app.add_subcommand("reference", "print the zeta(3) reference value");
    reference->add_option("--digits", digits, "decimal digits (>= 1)")->required();

    auto* list = app.add_subcommand("list", "list registered methods or identities");
    list->add_option("what", list_what, "methods|identities")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) {
            if (format != "md" && format != "csv" && format != "json") {
                std::cerr << "compute: --format must be md|csv|json\n";
                return 2;
            }
            return cmd_compute(method, order, prec, format, trace);
        }
        if (verify->parsed()) {
            if (verify_all && !identity.empty()) {
                std::cerr << "verify: pass either --identity <id> or --all, not both\n";
                return 2;
            }
            if (!verify_all && identity.empty()) {
                std::cerr << "verify: pass --identity <id> or --all\n";
                return 2;
            }
            return cmd_verify(identity, verify_all, prec);
        }
        if (table1->parsed()) return cmd_table1(prec, format);
        if (reference->parsed()) {
            if (digits < 1) {
                std::cerr << "reference: --digits must be >= 1\n";
                return 2;
            }
            return cmd_reference(digits);
        }
        if (list->parsed()) return cmd_list(list_what);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
