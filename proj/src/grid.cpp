// SPDX-License-Identifier: Apache-2.0
#include "ulrich/grid.hpp"

#include "ulrich/errors.hpp"
#include "ulrich/moduli.hpp"

#include <algorithm>
#include <sstream>

namespace ulrich {

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        if (!parse_int(text, r.lo)) throw ParseError("bad range \"" + text + "\"");
        r.hi = r.lo;
    } else if (!parse_int(text.substr(0, dots), r.lo) || !parse_int(text.substr(dots + 2), r.hi)) {
        throw ParseError("bad range \"" + text + "\", expected lo..hi");
    }
    if (r.lo > r.hi) throw ParseError("empty range \"" + text + "\"");
    return r;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("bad grid item \"" + item + "\", expected name=lo..hi");
        const std::string name = item.substr(0, eq);
        const IntRange r = parse_range(item.substr(eq + 1));
        if (name == "e") {
            g.e = r;
        } else if (name == "b") {
            g.b = r;
        } else if (name == "k") {
            g.k = r;
        } else {
            throw ParseError("unknown grid axis \"" + name + "\" (expected e, b or k)");
        }
    }
    return g;
}

std::string grid_str(const GridSpec& g) {
    std::string s = "e=" + g.e.lo.str() + ".." + g.e.hi.str() + ",b=" + g.b.lo.str() + ".." + g.b.hi.str();
    if (g.k) s += ",k=" + g.k->lo.str() + ".." + g.k->hi.str();
    return s;
}

std::vector<ScrollParams> enumerate_triples(const GridSpec& g) {
    std::vector<ScrollParams> out;
    for (Int e = max0(g.e.lo); e <= g.e.hi; ++e)
        for (Int b = g.b.lo; b <= g.b.hi; ++b) {
            // b - e < k < 2b - 4e
            Int klo = b - e + 1, khi = 2 * b - 4 * e - 1;
            if (g.k) {
                klo = std::max(klo, g.k->lo);
                khi = std::min(khi, g.k->hi);
            }
            for (Int k = klo; k <= khi; ++k) {
                const ScrollParams p{e, b, k};
                if (validate_params(p).valid) out.push_back(p);
            }
        }
    return out;
}

ScanRow scan_triple(const ScrollParams& p, int rank_max, bool with_oracle) {
    ScanRow row;
    row.p = p;
    const ScrollInvariants inv = scroll_invariants(p);
    row.n = inv.n;
    row.d = inv.d;
    row.g = inv.g;
    const LineClassification cls = classify_ulrich_lines(p);
    for (const auto& L : cls.ulrich) row.ulrich_lines.push_back(line_name(L, p));
    for (const auto& L : cls.indeterminate) row.indeterminate_lines.push_back(L.str());
    if (with_oracle) {
        row.oracle_checked = true;
        row.oracle_agrees = cls.same_result(brute_scan_ulrich_lines(p, default_scan_bound(p)));
    }
    row.rank2_dim = rank2_report(p).moduli_dim;
    for (int r = p.e == 0 ? 1 : 2; r <= rank_max; ++r) {
        row.moduli_dims.emplace_back(r, moduli_dim(r, p));
        if (r >= ext_locus_min_rank(r, p)) row.ext_strict_all = row.ext_strict_all && check_ext_strict(r, p);
    }
    return row;
}

std::vector<ScanRow> scan_grid(const GridSpec& g, bool with_oracle, Exec exec) {
    const auto triples = enumerate_triples(g);
    return map_items<ScrollParams, ScanRow>(
        triples, [&](const ScrollParams& p) { return scan_triple(p, g.rank_max, with_oracle); }, exec);
}

}  // namespace ulrich
