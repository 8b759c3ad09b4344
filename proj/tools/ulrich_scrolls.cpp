// SPDX-License-Identifier: Apache-2.0
//
// ulrich-scrolls: command-line front end. Every command prints one report
// envelope {command, params, payload, engine_version} as a table (default),
// JSON or CSV.
//
// Exit codes: 0 ok, 1 verification failed, 2 invalid parameters or scope,
// 3 parse error, 4 generic model inapplicable, 5 solver/oracle disagreement.
#include "ulrich/acceptance.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/expr_parser.hpp"
#include "ulrich/grid.hpp"
#include "ulrich/moduli.hpp"
#include "ulrich/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ulrich;

namespace {

struct ParamFlags {
    std::string e, b, k;

    void attach(CLI::App* cmd) {
        cmd->add_option("--e", e, "invariant e >= 0 of F_e")->required();
        cmd->add_option("--b", b, "b in c1(E) = (3, b)")->required();
        cmd->add_option("--k", k, "k = c2(E)")->required();
    }
    ScrollParams get() const {
        ScrollParams p;
        if (!parse_int(e, p.e) || !parse_int(b, p.b) || !parse_int(k, p.k))
            throw ParseError("--e, --b and --k must be integers");
        return p;
    }
};

int emit(const Json& env, Format f) {
    std::cout << render(env, f);
    return 0;
}

Json invariants_payload(const ScrollParams& p) {
    const ScrollInvariants inv = scroll_invariants(p);
    return {{"n", int_json(inv.n)},
            {"d", int_json(inv.d)},
            {"g", int_json(inv.g)},
            {"assumptions", "ok"},
            {"c1E", to_json(p.c1E())},
            {"A", to_json(p.A())},
            {"B", to_json(p.B())},
            {"K_X", to_json(canonical_scroll(p))},
            {"ulrich_slope", int_json(8 * p.b - p.k - 12 * p.e - 3)}};
}

Json moduli_payload(int r, const ScrollParams& p) {
    Json j = to_json(family_descriptor(r, p));
    j["surface_c1"] = to_json(scroll_to_surface_c1(r, p));
    j["surface_moduli_dim"] = int_json(surface_moduli_dim(r, p));
    if (r >= ext_locus_min_rank(r, p)) {
        j["ext_locus_dim_bound"] = int_json(ext_locus_dim_bound(r, p));
        j["ext_strict"] = check_ext_strict(r, p);
    }
    if (p.e == 0) {
        j["h1_G_r_tensor_L_dual"] = int_json(h1_Gr_tensor_Ldual(r, p));
        if (r >= 2) j["h0_G_r-1_tensor_L_dual"] = h0_parity(r);
        j["h1_U_r-1_tensor_L_dual_lower_bound"] = int_json(h1_Ur_lower_bound(p));
    } else if (r % 2 == 1 && r >= 5) {
        const int h = (r - 1) / 2;
        j["ext_dim_next_odd"] = int_json(ext_dim_next_odd(h, p));
        j["ext_dim_next_odd_riemann_roch_pairing"] = int_json(ext_dim_next_odd_riemann_roch(h, p));
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ulrich bundles on 3-fold scrolls over Hirzebruch surfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "table";
    app.add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    bool serial = false;
    app.add_flag("--serial", serial, "run grid sweeps on the serial reference path");

    ParamFlags inv_flags, coh_flags, cls_flags, ext_flags, mod_flags, surf_flags;

    auto* inv = app.add_subcommand("invariants", "n, d, g and the assumption diagnostics");
    inv_flags.attach(inv);

    auto* coh = app.add_subcommand("coh", "cohomology of a bundle expression");
    coh_flags.attach(coh);
    std::string expr;
    coh->add_option("--expr", expr, "L(a,b) | xi^a*L(a,b) | E(a,b) | S2E(a,b) | IZ(a,b;l) | Ext[X -> Y]")
        ->required();

    auto* cls = app.add_subcommand("classify", "Ulrich line bundles: solver and brute-force oracle");
    cls_flags.attach(cls);
    std::string bound_text;
    cls->add_option("--bound", bound_text, "oracle box |alpha|,|beta| <= bound (default 3b)");

    auto* ext = app.add_subcommand("ext-table", "Ext^1 among the Ulrich line bundles (e = 0)");
    ext_flags.attach(ext);

    auto* mod = app.add_subcommand("moduli", "rank-r family descriptors");
    mod_flags.attach(mod);
    int rank = 0;
    int mod_rank_max = 12;
    mod->add_option("--rank", rank, "rank r (default: all r <= --rank-max)");
    mod->add_option("--rank-max", mod_rank_max, "largest rank when --rank is absent");

    auto* surf = app.add_subcommand("surface-ulrich", "Ulrich data on F_e w.r.t. (3, b)");
    surf_flags.attach(surf);
    int surf_rank_max = 12;
    surf->add_option("--rank-max", surf_rank_max, "largest rank");

    auto* scan = app.add_subcommand("scan", "sweep a grid of parameter triples");
    std::string scan_e = "0..2", scan_b = "2..10", scan_k;
    int scan_rank_max = 12;
    bool scan_oracle = false;
    scan->add_option("--e", scan_e, "inclusive range lo..hi");
    scan->add_option("--b", scan_b, "inclusive range lo..hi");
    scan->add_option("--k", scan_k, "inclusive range lo..hi (default: all admissible)");
    scan->add_option("--rank-max", scan_rank_max, "largest rank");
    scan->add_flag("--oracle", scan_oracle, "cross-check every classification by brute force");

    auto* ver = app.add_subcommand("verify", "replay the acceptance suite");
    std::string grid_text = "e=0..2,b=2..10", fault_text = "none";
    int ver_rank_max = 12;
    ver->add_option("--grid", grid_text, "e=lo..hi,b=lo..hi[,k=lo..hi]");
    ver->add_option("--rank-max", ver_rank_max, "largest rank");
    ver->add_option("--inject-fault", fault_text, "negative control: corrupt a reference value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::parse_error);
    }

    try {
        const Format fmt = parse_format(format);
        const Exec exec = serial ? Exec::serial : Exec::parallel;

        if (*inv) {
            const ScrollParams p = inv_flags.get();
            const ParamVerdict v = validate_params(p);
            if (v.valid) return emit(envelope("invariants", p, invariants_payload(p)), fmt);
            // Outside the assumptions: report the substituted values and the
            // violated bounds, then exit with the parameter error code.
            const ScrollInvariants raw = scroll_invariants_formula(p);
            emit(envelope("invariants", p,
                          {{"n", int_json(raw.n)},
                           {"d", int_json(raw.d)},
                           {"g", int_json(raw.g)},
                           {"assumptions", "violated"},
                           {"violated", v.violated}}),
                 fmt);
            std::cerr << "error: " << v.diagnostic << "\n";
            return static_cast<int>(ExitCode::invalid_params);
        }
        if (*coh) {
            const ScrollParams p = coh_flags.get();
            const BundleExpr x = parse_bundle_expr(expr);
            Json payload = to_json(cohomology(x, p));
            payload["expr"] = x.str();
            payload["rank"] = int_json(rank_of(x.on_scroll() ? x.inner() : x));
            return emit(envelope("coh", p, payload), fmt);
        }
        if (*cls) {
            const ScrollParams p = cls_flags.get();
            Int bound = default_scan_bound(p);
            if (!bound_text.empty() && !parse_int(bound_text, bound)) throw ParseError("--bound must be an integer");
            const LineClassification solver = classify_ulrich_lines(p);
            const LineClassification oracle = brute_scan_ulrich_lines(p, bound);
            const bool agree = solver.same_result(oracle);
            Json payload = {{"solver", to_json(solver, p)},
                            {"oracle", to_json(oracle, p)},
                            {"oracle_bound", int_json(bound)},
                            {"agree", agree},
                            {"count", solver.ulrich.size()}};
            // The oracle's candidate list is the whole box; report only its verdicts.
            payload["oracle"].erase("candidates");
            emit(envelope("classify", p, payload), fmt);
            if (!agree) {
                std::cerr << "error: solver and brute-force oracle disagree\n";
                return static_cast<int>(ExitCode::oracle_disagreement);
            }
            return 0;
        }
        if (*ext) {
            const ScrollParams p = ext_flags.get();
            return emit(envelope("ext-table", p, to_json(ext1_table(p))), fmt);
        }
        if (*mod) {
            const ScrollParams p = mod_flags.get();
            if (rank != 0) return emit(envelope("moduli", p, moduli_payload(rank, p)), fmt);
            Json all = Json::array();
            for (int r = p.e == 0 ? 1 : 2; r <= mod_rank_max; ++r) all.push_back(moduli_payload(r, p));
            return emit(envelope("moduli", p, {{"families", all}, {"rank2", to_json(rank2_report(p))}}), fmt);
        }
        if (*surf) {
            const ScrollParams p = surf_flags.get();
            Json lines = Json::array();
            for (const auto& d : scan_ulrich_lines_surface(p, default_scan_bound(p))) lines.push_back(to_json(d));
            Json fams = Json::array();
            for (int r = p.e == 0 ? 1 : 2; r <= surf_rank_max; ++r)
                fams.push_back({{"rank", r},
                                {"c1", to_json(scroll_to_surface_c1(r, p))},
                                {"moduli_dim", int_json(surface_moduli_dim(r, p))},
                                {"scroll_moduli_dim", int_json(moduli_dim(r, p))}});
            return emit(envelope("surface-ulrich", p,
                                 {{"polarization", to_json(p.c1E())},
                                  {"ulrich_lines", lines},
                                  {"scan_bound", int_json(default_scan_bound(p))},
                                  {"families", fams}}),
                        fmt);
        }
        if (*scan) {
            GridSpec g;
            g.e = parse_range(scan_e);
            g.b = parse_range(scan_b);
            if (!scan_k.empty()) g.k = parse_range(scan_k);
            g.rank_max = scan_rank_max;
            const auto rows = scan_grid(g, scan_oracle, exec);
            Json arr = Json::array();
            bool agree = true;
            for (const auto& r : rows) {
                arr.push_back(to_json(r));
                agree = agree && r.oracle_agrees;
            }
            emit(envelope("scan", std::nullopt, {{"grid", grid_str(g)}, {"rows", arr}}), fmt);
            return agree ? 0 : static_cast<int>(ExitCode::oracle_disagreement);
        }
        if (*ver) {
            GridSpec g = parse_grid(grid_text);
            g.rank_max = ver_rank_max;
            const AcceptanceReport rep = run_acceptance(g, parse_fault(fault_text), exec);
            if (fmt == Format::table) {
                std::cout << "grid " << grid_str(g) << ", ranks <= " << g.rank_max << ", " << rep.triples
                          << " triples\n";
                for (const auto& c : rep.criteria) std::cout << format_line(c) << "\n";
                for (const auto& [text, n] : rep.notes) std::cout << "NOTE (" << n << " triples) " << text << "\n";
            } else {
                emit(envelope("verify", std::nullopt, to_json(rep)), fmt);
            }
            if (!rep.all_pass()) {
                for (const auto& c : rep.criteria)
                    if (!c.pass()) {
                        std::cerr << "first failure: criterion " << c.id << ": " << c.first_failure << "\n";
                        break;
                    }
                return static_cast<int>(ExitCode::check_failed);
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::check_failed);
    }
    return 0;
}
