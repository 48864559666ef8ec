#pragma once

#include <string>
#include <vector>

#include "zetalab/pbern.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

// Convergence comparison: rows n = 1..4, columns CLAUSEN_X6 / FINAL / BBP,
// every cell an absolute error against the same zeta(3) reference, with a
// pass flag marking agreement with the published magnitude within one order
// of magnitude.
struct BenchCell {
    MethodId method;
    double abs_error;       // measured
    double target_delta;    // comparison magnitude
    bool pass;              // within one order of magnitude of target
    double wall_ms;
};

struct BenchRow {
    long n;
    std::vector<BenchCell> cells;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::string reference_digits;  // zeta(3) decimal string
    long precision_bits;
};

BenchReport run_table1(PTable& table, long precision_bits);

std::string render_table1(const BenchReport& r, const std::string& format);  // md|csv|json

} // namespace zetalab
