// SPDX-License-Identifier: Apache-2.0
//
// Parameter grids of valid triples (e, b, k) and the per-triple sweep used
// by `scan`.
#pragma once

#include "ulrich/parallel.hpp"
#include "ulrich/ulrich.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ulrich {

struct IntRange {
    Int lo;
    Int hi;  // inclusive
};

struct GridSpec {
    IntRange e{Int(0), Int(2)};
    IntRange b{Int(2), Int(10)};
    std::optional<IntRange> k;  // all admissible k when absent
    int rank_max = 12;
};

// "lo..hi" or a single integer.
IntRange parse_range(const std::string& text);
// Comma-separated "e=0..2,b=2..10[,k=..]" overriding the defaults.
GridSpec parse_grid(const std::string& text);
std::string grid_str(const GridSpec& g);

// Valid triples in lexicographic order.
std::vector<ScrollParams> enumerate_triples(const GridSpec& g);

struct ScanRow {
    ScrollParams p;
    Int n, d, g;
    std::vector<std::string> ulrich_lines;         // names of certified Ulrich line bundles
    std::vector<std::string> indeterminate_lines;  // undecided candidates
    bool oracle_checked = false;
    bool oracle_agrees = true;
    Int rank2_dim = 0;
    std::vector<std::pair<int, Int>> moduli_dims;  // (r, dim) for applicable r <= rank_max
    bool ext_strict_all = true;
};

ScanRow scan_triple(const ScrollParams& p, int rank_max, bool with_oracle);
std::vector<ScanRow> scan_grid(const GridSpec& g, bool with_oracle, Exec exec);

}  // namespace ulrich
