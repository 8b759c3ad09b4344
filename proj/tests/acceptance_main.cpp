// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run on the default grid (e in {0,1,2}, b <= 10, every
// admissible k, ranks <= 12): one PASS/FAIL line per criterion, then the
// recorded observations. Exit status 0 iff every criterion passes.
#include "ulrich/acceptance.hpp"

#include <cstdio>
#include <iostream>

int main() {
    using namespace ulrich;
    const GridSpec grid;
    const AcceptanceReport rep = run_acceptance(grid);
    std::cout << "acceptance grid " << grid_str(grid) << ", ranks <= " << grid.rank_max << ", " << rep.triples
              << " triples\n";
    for (const auto& c : rep.criteria) std::cout << format_line(c) << "\n";
    for (const auto& [text, n] : rep.notes) std::cout << "NOTE (" << n << " triples) " << text << "\n";
    // On the default grid every criterion must actually be exercised.
    bool exercised = true;
    for (const auto& c : rep.criteria)
        if (!c.exercised()) {
            std::cout << "[FAIL] criterion " << c.id << " ran no checks on the default grid\n";
            exercised = false;
        }
    const bool fast = rep.seconds < 60.0;
    std::printf("[%s] runtime %.2f s (limit 60 s)\n", fast ? "PASS" : "FAIL", rep.seconds);
    return rep.all_pass() && exercised && fast ? 0 : 1;
}
