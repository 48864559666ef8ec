// exercises the installed command-line surface through the real binary
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

std::string bin() {
    const char* p = std::getenv("ZETA3LAB_BIN");
    if (!p) {
        std::cerr << "ZETA3LAB_BIN not set\n";
        std::exit(1);
    }
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) std::exit(1);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int failures = 0;
void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n";
    } else {
        std::cout << "[ ok ] " << what << "\n";
    }
}

} // namespace

int main() {
    // exit codes: 0 success, 1 verification failure, 2 usage error
    expect(run("compute --method FINAL --order 2 --prec-bits 160").exit_code == 0,
           "compute exits 0");
    expect(run("compute --bogus-flag").exit_code == 2, "bad flags exit 2");
    expect(run("compute --method NOPE --order 1").exit_code == 2, "unknown method exits 2");
    expect(run("verify --identity NO_SUCH").exit_code == 2, "unknown identity exits 2");
    expect(run("list nonsense").exit_code == 2, "bad list argument exits 2");
    expect(run("verify --identity LI3_HALF --prec-bits 160").exit_code == 0,
           "verify single identity exits 0");

    // reference digits: value, truncation, prefix consistency
    auto r10 = run("reference --digits 10");
    expect(r10.exit_code == 0 && r10.out == "1.202056903\n", "reference --digits 10");
    auto r1 = run("reference --digits 1");
    expect(r1.out == "1\n", "reference --digits 1 truncates");
    auto r30 = run("reference --digits 30");
    auto r50 = run("reference --digits 50");
    expect(r50.out.substr(0, r30.out.size() - 1) == r30.out.substr(0, r30.out.size() - 1),
           "digit prefixes agree between 30 and 50");

    // determinism: identical flags give byte-identical output
    std::string a = run("compute --method SIX --order 3 --prec-bits 192 --format json --trace").out;
    std::string b = run("compute --method SIX --order 3 --prec-bits 192 --format json --trace").out;
    expect(!a.empty() && a == b, "compute json output is deterministic");

    // json outputs parse and round-trip through their schema
    auto parsed = nlohmann::json::parse(a);
    expect(parsed["method"] == "SIX" && parsed["order"] == 3 && parsed.contains("value") &&
               parsed.contains("error_estimate") && parsed.contains("abs_error") &&
               parsed.contains("terms"),
           "compute json carries the SeriesResult schema");
    expect(nlohmann::json::parse(parsed.dump()) == parsed, "compute json round-trips");

    auto lm = run("list methods");
    auto methods = nlohmann::json::parse(lm.out);
    expect(methods.is_array() && methods.size() == 8, "list methods enumerates the registry");

    auto lv = run("verify --identity LI2_HALF --prec-bits 128");
    auto ledger_pos = lv.out.find('[');
    expect(ledger_pos != std::string::npos, "verify prints the ledger json");
    auto ledger = nlohmann::json::parse(lv.out.substr(ledger_pos));
    expect(ledger[0]["id"] == "LI2_HALF" && ledger[0]["verdict"] == "verified" &&
               ledger[0]["corrected"] == false,
           "ledger json schema");

    // table1 at the minimum precision, json schema + determinism
    auto t1 = run("table1 --prec-bits 128 --format json");
    expect(t1.exit_code == 0, "table1 exits 0");
    auto rep = nlohmann::json::parse(t1.out);
    expect(rep["rows"].size() == 4 && rep["rows"][0]["cells"].size() == 3 &&
               rep["rows"][0]["cells"][0].contains("abs_error") &&
               rep["rows"][0]["cells"][0].contains("pass") && rep.contains("reference"),
           "table1 json carries the BenchReport schema");
    auto t1b = run("table1 --prec-bits 128 --format json");
    expect(t1.out == t1b.out, "table1 json output is deterministic");

    if (failures) {
        std::cerr << failures << " cli checks failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
