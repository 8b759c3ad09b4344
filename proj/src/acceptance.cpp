// SPDX-License-Identifier: Apache-2.0
#include "ulrich/acceptance.hpp"

#include "ulrich/errors.hpp"
#include "ulrich/moduli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace ulrich {

namespace {

constexpr int kCriteria = 10;

const std::array<const char*, kCriteria> kTitles = {
    "line-bundle classification (solver = brute-force oracle)",
    "cohomology golden values",
    "Ext^1 tables among Ulrich line bundles",
    "rank-2 reports",
    "Euler pairings on F_e",
    "rank-3 construction data",
    "recursion = closed form, dim = 1 - chi, constant slope",
    "strictness inequalities and parity values",
    "surface correspondence",
    "property suites",
};

std::string show(const Int& x) { return x.str(); }
std::string show(const Rational& x) { return to_string(x); }
std::string show(const SurfaceDivisor& x) { return x.str(); }
std::string show(const ScrollDivisor& x) { return x.str(); }
std::string show(const CodimTwoClass& x) { return x.str(); }
std::string show(const CohInterval& x) { return x.str(); }
std::string show(bool x) { return x ? "true" : "false"; }
std::string show(const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
}
template <class T>
std::string show(const std::vector<T>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + show(v[i]);
    return s + "}";
}

// Results for one triple; merged in triple order afterwards.
struct Tally {
    std::array<CriterionResult, kCriteria> c;
    std::map<std::string, long> notes;
    std::string where;

    template <class T>
    void eq(int id, const T& got, const T& want, const std::string& what) {
        ok(id, got == want, [&] { return what + ": got " + show(got) + ", expected " + show(want); });
    }
    void ok(int id, bool cond, const std::function<std::string()>& what) {
        CriterionResult& r = c[id - 1];
        ++r.checks;
        if (!cond) {
            if (r.failures == 0) r.first_failure = where + " " + what();
            ++r.failures;
        }
    }
    void note(const std::string& text) { ++notes[text]; }
};

CohInterval exact4(const Int& h0, const Int& h1, const Int& h2, const Int& h3 = 0) {
    CohInterval c;
    c.lo = c.hi = {h0, h1, h2, h3};
    c.chi = h0 - h1 + h2 - h3;
    return c;
}

std::vector<std::string> names_of(const std::vector<ScrollDivisor>& v, const ScrollParams& p) {
    std::vector<std::string> out;
    for (const auto& L : v) out.push_back(line_name(L, p));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- criterion 1 ----------------------------------------------------------
void criterion_classification(Tally& t, const ScrollParams& p, Fault fault) {
    const LineClassification cls = classify_ulrich_lines(p);
    std::vector<std::string> want;
    for (const auto& n : expected_ulrich_lines(p))
        if (!(fault == Fault::expected_lines && n.name[0] == 'M')) want.push_back(n.name);
    std::sort(want.begin(), want.end());
    t.eq(1, names_of(cls.ulrich, p), want, "certified Ulrich line bundles");

    const LineClassification brute = brute_scan_ulrich_lines(p, default_scan_bound(p));
    t.ok(1, cls.same_result(brute), [&] {
        return "solver " + show(cls.ulrich) + show(cls.indeterminate) + " vs oracle " + show(brute.ulrich) +
               show(brute.indeterminate);
    });
    if (!cls.indeterminate.empty())
        t.note("line-bundle candidates left indeterminate by the engine (e = 0, 3 | k, (b,k) != (2t,3t))");

    const Rational mu = Rational(8 * p.b - p.k - 3);
    for (const auto& L : cls.ulrich) {
        const ScrollDivisor dual = ulrich_dual_line(L, p);
        t.ok(1, std::find(cls.ulrich.begin(), cls.ulrich.end(), dual) != cls.ulrich.end(),
             [&] { return "Ulrich dual of " + L.str() + " is not in the classified set"; });
        t.eq(1, slope(L, Int(1), p), mu, "slope of " + L.str());
    }
}

// ---- criterion 2 ----------------------------------------------------------
void criterion_golden(Tally& t, const ScrollParams& p, Fault fault) {
    if (p.e != 0) return;
    const SurfaceContext ctx = p.surface();
    const Int b = p.b;
    const Int off = fault == Fault::golden_value ? 1 : 0;
    t.eq(2, CohInterval::exact(cohomology_line({Int(3), -b}, ctx)), exact4(0, 4 * b - 4 + off, 0),
         "H^*(F_0, (3,-b))");
    t.eq(2, CohInterval::exact(cohomology_line({Int(-3), b}, ctx)), exact4(0, 2 * b + 2, 0), "H^*(F_0, (-3,b))");
    if (b % 2 == 0 && 2 * p.k == 3 * b) {
        const Int tt = b / 2;
        t.eq(2, cohomology(BundleExpr::sym_square_e({Int(-3), -4 * tt}), p), exact4(0, 6 * tt - 3, 0),
             "H^*(S^2 E(-3,-4t))");
        t.eq(2, cohomology(BundleExpr::scroll_line(Int(-2), {Int(3), 4 * tt}), p), exact4(0, b + 1, 0, 0),
             "H^*(X, -2xi + (3,4t))");
        t.eq(2, cohomology(BundleExpr::twisted_e({Int(-3), -tt}), p), exact4(0, 1, 0), "H^*(E(-3,-t))");
    }
}

// ---- criterion 3 ----------------------------------------------------------
void criterion_ext(Tally& t, const ScrollParams& p) {
    if (p.e != 0) return;
    const Ext1Table tab = ext1_table(p);
    const Int b = p.b;
    for (const auto& x : tab.entries)
        t.ok(3, x.h.is_exact(), [&] { return "Ext^1(" + x.from + "," + x.to + ") not exact: " + x.h.str(); });
    t.eq(3, ext1_value(tab, "L2", "L1"), Int(4 * b - 4), "Ext^1(L2,L1)");
    t.eq(3, ext1_value(tab, "L1", "L2"), Int(2 * b + 2), "Ext^1(L1,L2)");
    if (!tab.has_twist_comparison) return;
    t.eq(3, ext1_value(tab, "M2", "M1"), Int(3 * b - 3), "Ext^1(M2,M1)");
    t.eq(3, ext1_value(tab, "M1", "M2"), Int(b + 1), "Ext^1(M1,M2)");
    const std::vector<std::pair<std::string, std::string>> block = {
        {"M1", "L1"}, {"L1", "M2"}, {"M1", "L2"}, {"L2", "M2"},
        {"L1", "M1"}, {"M2", "L1"}, {"L2", "M1"}, {"M2", "L2"},
    };
    const std::vector<Int> want = {0, 0, 0, 0, 1, 5 * b - 5, 5 * b - 5, 1};
    std::vector<Int> got;
    for (const auto& [from, to] : block) got.push_back(ext1_value(tab, from, to));
    t.eq(3, got, want, "L-M block");
    // Chern classes of the non-split L-M extensions, by Whitney, against the stated values.
    for (const auto& x : tab.lm_extensions) {
        t.ok(3, x.ext1_dim > 0, [&] { return x.name + ": split only"; });
        t.eq(3, x.chern.c2, x.c2_reference, "c2(" + x.name + ")");
    }
    if (tab.ext_m2_l1_short_twist != tab.ext_m2_l1_computed)
        t.note("Ext^1(M2,L1): the twist E(0,-t) gives a different h^1 than E(0,-3t) = L1 - M2");
}

// ---- criterion 4 ----------------------------------------------------------
void criterion_rank2(Tally& t, const ScrollParams& p) {
    const RankTwoReport r = rank2_report(p);
    const Int &e = p.e, &b = p.b, &k = p.k;
    t.eq(4, r.chern.rank, Int(2), "rank");
    t.eq(4, r.chern.c1, ScrollDivisor{Int(2), {Int(1), b - e - 2}}, "c1");
    t.eq(4, r.chern.c2, CodimTwoClass{{Int(4), 2 * b - e - 2}, 2 * b - 3 * e - k - 1}, "c2");
    t.eq(4, r.moduli_dim, Int(6 * b - 9 * e - 3), "moduli dimension");
    t.eq(4, r.slope, Rational(8 * b - k - 12 * e - 3), "slope");
    t.eq(4, r.special, true, "special");
    if (e > 0) t.eq(4, r.pullback_status == UlrichStatus::ulrich, true, "H twisted by xi is Ulrich");
    if (e == 0 && b == 3) t.eq(4, r.moduli_dim, Int(15), "named instance (0,3,k)");
    if (e == 1 && b == 5) t.eq(4, r.moduli_dim, Int(18), "named instance (1,5,k)");
}

// ---- criterion 5 ----------------------------------------------------------
void criterion_pairings(Tally& t, const ScrollParams& p) {
    if (p.e == 0) return;
    const Int &e = p.e, &b = p.b;
    const SurfaceContext ctx = p.surface();
    const SurfaceDivisor a3 = c1_A3(p), h1 = c1_H1(p);
    t.eq(5, intersect(a3, h1, ctx), Int(64 * b - 96 * e - 45), "c1(A3).c1(H1)");
    const Int p32 = euler_pair_ulrich_surface(Int(3), a3, Int(2), h1, p);
    const Int p23 = euler_pair_ulrich_surface(Int(2), h1, Int(3), a3, p);
    t.eq(5, p32, Int(15 * e - 10 * b + 3), "chi(A3 (x) H1^dual)");
    t.eq(5, p23, Int(12 * e - 8 * b - 3), "chi(H1 (x) A3^dual)");
    t.eq(5, chi_rank2_endo_surface(p), Int(4 - 6 * b + 9 * e), "chi(H (x) H^dual)");

    // Independent evaluation through the resolution of A3 and the defining
    // sequence of H1; reported, not asserted.
    const Int res32 = chi_A3_H1dual_by_resolution(p), res23 = chi_H1_A3dual_by_resolution(p);
    const Int rr32 = euler_pair_riemann_roch(Int(3), a3, Int(2), h1, p);
    const Int rr23 = euler_pair_riemann_roch(Int(2), h1, Int(3), a3, p);
    if (res32 == rr32 && res23 == rr23 && (res32 != p32 || res23 != p23))
        t.note("mixed pairings: resolution/line-bundle evaluation equals the 2d-1 pairing, "
               "not the asserted 2d-2 pairing (differs by +6)");
    else if (res32 != rr32 || res23 != rr23)
        t.note("mixed pairings: resolution evaluation disagrees with both pairing formulas");
    const Int rr22 = euler_pair_riemann_roch(Int(2), h1, Int(2), h1, p);
    if (rr22 == chi_rank2_endo_surface(p)) t.note("2d-1 pairing reproduces chi(H (x) H^dual)");
}

// ---- criterion 6 ----------------------------------------------------------
void criterion_rank3(Tally& t, const ScrollParams& p) {
    if (p.e == 0) return;
    const Int &e = p.e, &b = p.b;
    const Rank3Resolution r = rank3_resolution_data(p);
    t.eq(6, r.gamma, Int(b - 3 * e + 3), "gamma");
    t.eq(6, r.delta, Int(b - 3 * e), "delta");
    t.eq(6, r.tau, Int(6), "tau");
    t.eq(6, r.rank, Int(3), "rank");
    t.eq(6, r.c1, SurfaceDivisor{Int(12), 4 * b - 3}, "c1(A3)");
    const AdmissiblePairCheck a = admissible_ulrich_pair_detail(Int(12), 4 * b - 3, p);
    t.ok(6, a.accepted(), [&] {
        return "admissible pair (12,4b-3) rejected: integral=" + show(a.integral_T) + " range=" + show(a.in_range) +
               " degree=" + show(a.degree_ok);
    });
    t.eq(6, moduli_dim(3, p), Int(2 * (6 * b - 9 * e - 4)), "dim M(3)");
    t.eq(6, c1_rank_r(3, p), ScrollDivisor{Int(3), {Int(3), b - 3}}, "c1(U3)");
}

// ---- criterion 7 ----------------------------------------------------------
void criterion_recursion(Tally& t, const ScrollParams& p, int rank_max, Fault fault) {
    const Rational mu(8 * p.b - p.k - 12 * p.e - 3);
    for (int r = p.e == 0 ? 1 : 2; r <= rank_max; ++r) {
        const std::string at = " at r=" + std::to_string(r);
        t.eq(7, c1_rank_r_recursive(r, p), c1_rank_r(r, p), "c1 recursion" + at);
        const Int chi = chi_self(r, p);
        t.eq(7, chi_self_recursive(r, p), chi, "chi recursion" + at);
        if (p.e == 0) t.eq(7, h1_Gr_tensor_Ldual_recursive(r, p), h1_Gr_tensor_Ldual(r, p), "h1 recursion" + at);
        if (r >= 2) {
            const Int off = (fault == Fault::moduli_closed_form && r == 3) ? 1 : 0;
            t.eq(7, moduli_dim(r, p) + off, Int(1 - chi), "dim = 1 - chi" + at);
        }
        t.eq(7, slope(c1_rank_r(r, p), Int(r), p), mu, "slope" + at);
        if (p.e > 0 && r % 2 == 1 && chi_self_riemann_roch(r, p) != chi)
            t.note("odd-rank dimensions (e > 0, r >= 5) with the 2d-1 pairing are lower by 12(h-1)");
    }
    if (p.e == 0) {
        t.eq(7, h1_Gr_tensor_Ldual(1, p), Int(4 * p.b - 4), "x_1");
        t.eq(7, h1_Gr_tensor_Ldual(2, p), Int(2 * p.b + 2), "x_2");
    }
}

// ---- criterion 8 ----------------------------------------------------------
void criterion_strict(Tally& t, const ScrollParams& p, int rank_max) {
    for (int r = 2; r <= rank_max; ++r) {
        const std::string at = " at r=" + std::to_string(r);
        if (p.e == 0) {
            const int h0 = h0_parity(r);
            t.eq(8, h0, r % 2 == 0 ? 0 : 1, "h0 parity" + at);
            const CohInterval iv = h0_parity_interval(r, p);
            t.ok(8, iv.lo[0] <= h0 && h0 <= iv.hi[0],
                 [&] { return "h0 parity " + std::to_string(h0) + " outside engine interval " + iv.str() + at; });
        }
        if (r < ext_locus_min_rank(r, p)) continue;
        const Int margin = ext_strict_margin(r, p);
        t.ok(8, margin > 0, [&] { return "extension locus not smaller" + at + ": margin " + margin.str(); });
        if (p.e == 0) t.eq(8, margin, ext_strict_margin_closed(r, p), "margin closed form" + at);
        if (p.e > 0 && r % 2 == 0) {
            const int h = r / 2;
            const Int ext = ext_space_dim_even(h, p);
            t.ok(8, ext > 0, [&] { return "extension space empty" + at; });
            t.eq(8, ext, Int((h - 1) * (6 * p.b - 9 * p.e - 4)), "extension space dimension" + at);
            t.eq(8, ext_locus_dim_bound(r, p), Int((h * h - h + 1) * (6 * p.b - 9 * p.e - 4) + 1), "even bound" + at);
        }
        if (p.e > 0 && r % 2 == 1) {
            const int h = (r - 1) / 2;
            const Int ext = ext_dim_next_odd(h, p);
            t.ok(8, ext > 0, [&] { return "odd extension space empty" + at; });
            t.eq(8, ext, ext_dim_next_odd_closed(h, p), "odd extension space closed form" + at);
            const Int rr_margin = moduli_dim_riemann_roch(r, p) -
                                  (ext_dim_next_odd_riemann_roch(h, p) - 1 + moduli_dim_riemann_roch(2 * h - 1, p) +
                                   moduli_dim_riemann_roch(2, p));
            if (rr_margin > 0) t.note("strictness also holds with the 2d-1 pairing (odd r, e > 0)");
            else t.note("strictness FAILS with the 2d-1 pairing (odd r, e > 0)");
        }
    }
}

// ---- criterion 9 ----------------------------------------------------------
void criterion_surface(Tally& t, const ScrollParams& p, int rank_max) {
    const Int bound = default_scan_bound(p);
    std::vector<SurfaceDivisor> want;
    if (p.e == 0) want = {{Int(2), 2 * p.b - 1}, {Int(5), p.b - 1}};
    t.eq(9, scan_ulrich_lines_surface(p, bound), want, "Ulrich line bundles on F_e");

    // Pointwise: xi + phi^*D is Ulrich on X iff D + c1 E is Ulrich on F_e.
    const Int box = p.b;
    for (Int a = -box; a <= box; ++a)
        for (Int bb = -box; bb <= box; ++bb) {
            const SurfaceDivisor D{a, bb};
            const bool on_x = is_ulrich_line_scroll({Int(1), D}, p).status == UlrichStatus::ulrich;
            const bool on_s = is_ulrich_line_surface(D + p.c1E(), p);
            t.ok(9, on_x == on_s, [&] { return "pointwise correspondence at D=" + D.str(); });
        }

    for (int r = p.e == 0 ? 1 : 2; r <= rank_max; ++r) {
        const std::string at = " at r=" + std::to_string(r);
        t.eq(9, scroll_to_surface_c1(r, p), surface_c1_closed_form(r, p), "c1(H_r)" + at);
        t.eq(9, surface_moduli_dim(r, p), moduli_dim(r, p), "surface moduli dimension" + at);
    }
    if (p.e == 0) t.eq(9, scroll_to_surface_c1(1, p), SurfaceDivisor{Int(5), p.b - 1}, "c1(H_1)");
    else t.eq(9, scroll_to_surface_c1(3, p), SurfaceDivisor{Int(12), 4 * p.b - 3}, "c1(H_3)");
}

// ---- criterion 10 ---------------------------------------------------------
void criterion_properties(Tally& t, const ScrollParams& p) {
    const SurfaceContext ctx = p.surface();
    const Int box = 6;
    for (Int a = -box; a <= box; ++a)
        for (Int bb = -box; bb <= box; ++bb) {
            const SurfaceDivisor D{a, bb};
            const CohVector h = cohomology_line(D, ctx);
            const CohVector s = cohomology_line(serre_dual(D, ctx), ctx);
            t.ok(10, h.h0 == s.h2 && h.h1 == s.h1 && h.h2 == s.h0, [&] { return "Serre duality at " + D.str(); });
            t.eq(10, h.chi(), chi_line(D, ctx), "Riemann-Roch at " + D.str());
            if (p.e == 0) {
                const CohVector kn{p1_h0(a) * p1_h0(bb), p1_h0(a) * p1_h1(bb) + p1_h1(a) * p1_h0(bb),
                                   p1_h1(a) * p1_h1(bb)};
                t.eq(10, h == kn, true, "Kunneth at " + D.str());
            }
        }

    // Extensions of line bundles: chi-additivity and interval soundness
    // against every admissible pair of connecting-map ranks.
    std::vector<SurfaceDivisor> pool;
    for (Int a = -3; a <= 3; a += 2)
        for (Int bb = -p.b; bb <= p.b; bb += std::max<long>(1, static_cast<long>(p.b / 3))) pool.push_back({a, bb});
    for (const auto& A : pool)
        for (const auto& B : pool) {
            const CohVector ha = cohomology_line(A, ctx), hb = cohomology_line(B, ctx);
            const CohInterval m = cohomology(BundleExpr::extension(BundleExpr::line(A), BundleExpr::line(B)), p);
            t.eq(10, m.chi, Int(ha.chi() + hb.chi()), "chi additivity");
            bool sound = true;
            const Int r0max = std::min(hb.h0, ha.h1), r1max = std::min(hb.h1, ha.h2);
            for (Int r0 = 0; r0 <= r0max && sound; ++r0)
                for (Int r1 = 0; r1 <= r1max && sound; ++r1) {
                    const std::array<Int, 3> x = {ha.h0 + hb.h0 - r0, ha.h1 - r0 + hb.h1 - r1, ha.h2 - r1 + hb.h2};
                    for (int i = 0; i < 3; ++i) sound = sound && m.lo[i] <= x[i] && x[i] <= m.hi[i];
                }
            t.ok(10, sound, [&] { return "interval " + m.str() + " misses an admissible outcome"; });
        }

    // Leray fast path agrees with the expression evaluator; duality involution.
    for (Int a = -4; a <= 2; ++a)
        for (Int al = -2; al <= 2; ++al)
            for (Int be = -p.b; be <= p.b; be += p.b) {
                const SurfaceDivisor D{al, be};
                t.eq(10, scroll_line_cohomology(a, D, p), cohomology(BundleExpr::scroll_line(a, D), p),
                     "Leray fast path at a=" + a.str() + " D=" + D.str());
                const ScrollDivisor L{a, D};
                t.eq(10, ulrich_dual_line(ulrich_dual_line(L, p), p), L, "duality involution");
            }

    // Whitney c2: symmetric, and the rank-2 classes match their closed forms.
    const ScrollDivisor x1{Int(1), {Int(2), Int(-1)}}, x2{Int(1), {Int(-1), p.b - 1}};
    const ChernData w12 = whitney_extension(line_chern(x1), line_chern(x2), p);
    t.eq(10, w12.c2, whitney_extension(line_chern(x2), line_chern(x1), p).c2, "Whitney symmetry");
    const CodimTwoClass w12_closed{{Int(4), 2 * p.b - 2}, 2 * p.b + 2 * p.e - p.k - 1};
    t.eq(10, w12.c2, w12_closed, "Whitney c2 of L1, L2");
    const ChernData pt = pullback_twist_rank2({Int(1), p.b - p.e - 2}, 2 * p.b - 3 * p.e - 1, p);
    t.eq(10, pt.c2, CodimTwoClass{{Int(4), 2 * p.b - p.e - 2}, 2 * p.b - 3 * p.e - p.k - 1}, "pullback-twist c2");
}

Tally check_triple(const ScrollParams& p, int rank_max, Fault fault) {
    Tally t;
    t.where = p.str();
    for (int i = 0; i < kCriteria; ++i) {
        t.c[i].id = i + 1;
        t.c[i].title = kTitles[i];
    }
    const std::vector<std::function<void()>> steps = {
        [&] { criterion_classification(t, p, fault); }, [&] { criterion_golden(t, p, fault); },
        [&] { criterion_ext(t, p); },                   [&] { criterion_rank2(t, p); },
        [&] { criterion_pairings(t, p); },              [&] { criterion_rank3(t, p); },
        [&] { criterion_recursion(t, p, rank_max, fault); },
        [&] { criterion_strict(t, p, rank_max); },      [&] { criterion_surface(t, p, rank_max); },
        [&] { criterion_properties(t, p); },
    };
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            steps[i]();
        } catch (const std::exception& ex) {
            const std::string msg = ex.what();
            t.ok(static_cast<int>(i + 1), false, [&] { return "exception: " + msg; });
        }
    }
    return t;
}

}  // namespace

Fault parse_fault(const std::string& name) {
    if (name == "none") return Fault::none;
    if (name == "golden_value") return Fault::golden_value;
    if (name == "moduli_closed_form") return Fault::moduli_closed_form;
    if (name == "expected_lines") return Fault::expected_lines;
    throw ParseError("unknown fault \"" + name + "\"");
}

std::vector<std::string> fault_names() { return {"none", "golden_value", "moduli_closed_form", "expected_lines"}; }

bool AcceptanceReport::all_pass() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
}

AcceptanceReport run_acceptance(const GridSpec& grid, Fault fault, Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    const auto triples = enumerate_triples(grid);
    const auto tallies = map_items<ScrollParams, Tally>(
        triples, [&](const ScrollParams& p) { return check_triple(p, grid.rank_max, fault); }, exec);

    AcceptanceReport rep;
    rep.grid = grid;
    rep.triples = static_cast<long>(triples.size());
    for (int i = 0; i < kCriteria; ++i) rep.criteria.push_back({i + 1, kTitles[i], 0, 0, {}});
    for (const Tally& t : tallies) {  // triple order, independent of scheduling
        for (int i = 0; i < kCriteria; ++i) {
            CriterionResult& dst = rep.criteria[i];
            const CriterionResult& src = t.c[i];
            dst.checks += src.checks;
            if (src.failures > 0 && dst.failures == 0) dst.first_failure = src.first_failure;
            dst.failures += src.failures;
        }
        for (const auto& [text, n] : t.notes) rep.notes[text] += n > 0 ? 1 : 0;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string format_line(const CriterionResult& c) {
    std::ostringstream os;
    os << (!c.pass() ? "[FAIL] " : c.exercised() ? "[PASS] " : "[SKIP] ") << c.id << " " << c.title << " (" << c.checks << " checks";
    if (c.failures) os << ", " << c.failures << " failed; first: " << c.first_failure;
    os << ")";
    return os.str();
}

}  // namespace ulrich
