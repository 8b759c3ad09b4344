// SPDX-License-Identifier: Apache-2.0
//
// The acceptance suite: ten criteria replayed over a parameter grid, each
// reported as one PASS/FAIL line. Shared by the `verify` command and the
// acceptance test binary.
#pragma once

#include "ulrich/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace ulrich {

// Deliberately corrupted reference values, used as negative controls: a
// suite run with a fault must fail.
enum class Fault { none, golden_value, moduli_closed_form, expected_lines };
Fault parse_fault(const std::string& name);  // ParseError on unknown names
std::vector<std::string> fault_names();

struct CriterionResult {
    int id = 0;
    std::string title;
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    bool exercised() const { return checks > 0; }  // false when no triple on the grid applies
    bool pass() const { return failures == 0; }
};

struct AcceptanceReport {
    GridSpec grid;
    long triples = 0;
    std::vector<CriterionResult> criteria;
    // Observations that are reported but not asserted, with the number of
    // triples on which each was seen.
    std::map<std::string, long> notes;
    double seconds = 0;
    bool all_pass() const;
};

AcceptanceReport run_acceptance(const GridSpec& grid, Fault fault = Fault::none, Exec exec = Exec::parallel);

// "[PASS] 1 line-bundle classification (231 checks)" or a FAIL line with the
// first failing check.
std::string format_line(const CriterionResult& c);

}  // namespace ulrich
