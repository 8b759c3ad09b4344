// SPDX-License-Identifier: Apache-2.0
#include "ulrich/report.hpp"

#include "ulrich/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ulrich {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "table") return Format::table;
    throw ParseError("unknown format \"" + name + "\" (expected json, csv or table)");
}

Json int_json(const Int& x) {
    static const Int limit = Int(1) << 53;
    if (abs(x) <= limit) return Json(static_cast<long long>(x));
    return Json(x.str());
}

Json rational_json(const Rational& q) {
    if (denominator(q) == 1) return int_json(numerator(q));
    return Json(to_string(q));
}

Json to_json(const ScrollParams& p) { return {{"e", int_json(p.e)}, {"b", int_json(p.b)}, {"k", int_json(p.k)}}; }

Json to_json(const SurfaceDivisor& d) { return {{"alpha", int_json(d.alpha)}, {"beta", int_json(d.beta)}}; }

Json to_json(const ScrollDivisor& x) { return {{"xi", int_json(x.a)}, {"D", to_json(x.D)}, {"str", x.str()}}; }

Json to_json(const CodimTwoClass& c) { return {{"xi_times", to_json(c.dxi)}, {"F", int_json(c.m)}, {"str", c.str()}}; }

Json to_json(const ChernData& c) {
    return {{"rank", int_json(c.rank)}, {"c1", to_json(c.c1)}, {"c2", to_json(c.c2)}};
}

Json to_json(const CohInterval& c) {
    Json h = Json::array(), lo = Json::array(), hi = Json::array();
    for (int i = 0; i < 4; ++i) {
        h.push_back(c.lo[i] == c.hi[i] ? int_json(c.lo[i]) : Json(c.lo[i].str() + ".." + c.hi[i].str()));
        lo.push_back(int_json(c.lo[i]));
        hi.push_back(int_json(c.hi[i]));
    }
    return {{"h", h}, {"lo", lo}, {"hi", hi}, {"chi", int_json(c.chi)}, {"indeterminate", !c.is_exact()}};
}

Json to_json(const UlrichVerdict& v) {
    Json w = Json::array();
    for (const auto& x : v.witnesses)
        w.push_back({{"twist", x.twist}, {"degree", x.degree}, {"lo", int_json(x.lo)}, {"hi", int_json(x.hi)}});
    return {{"status", to_string(v.status)}, {"witnesses", w}};
}

Json to_json(const LineClassification& c, const ScrollParams& p) {
    const auto list = [&](const std::vector<ScrollDivisor>& v) {
        Json a = Json::array();
        for (const auto& L : v) {
            Json j = to_json(L);
            j["name"] = line_name(L, p);
            a.push_back(j);
        }
        return a;
    };
    return {{"candidates", list(c.candidates)}, {"ulrich", list(c.ulrich)}, {"indeterminate", list(c.indeterminate)}};
}

Json to_json(const Ext1Table& t) {
    Json m = Json::array();
    for (const auto& row : t.matrix) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.is_exact() ? int_json(c.value(1)) : Json(c.lo[1].str() + ".." + c.hi[1].str()));
        m.push_back(r);
    }
    Json entries = Json::array();
    for (const auto& x : t.entries)
        entries.push_back({{"from", x.from},
                           {"to", x.to},
                           {"ext1", x.h.is_exact() ? int_json(x.h.value(1)) : Json(x.h.str())}});
    Json j = {{"names", t.names}, {"matrix", m}, {"entries", entries}};
    if (t.has_twist_comparison) {
        j["ext1_M2_L1_from_twist_E(0,-3t)"] = int_json(t.ext_m2_l1_computed);
        j["ext1_M2_L1_from_twist_E(0,-t)"] = int_json(t.ext_m2_l1_short_twist);
        Json ext = Json::array();
        for (const auto& x : t.lm_extensions)
            ext.push_back({{"name", x.name},
                           {"sub", x.sub},
                           {"quot", x.quot},
                           {"ext1_dim", int_json(x.ext1_dim)},
                           {"chern", to_json(x.chern)},
                           {"c2_reference", to_json(x.c2_reference)},
                           {"c2_matches_reference", x.chern.c2 == x.c2_reference}});
        j["lm_extensions"] = ext;
    }
    return j;
}

Json to_json(const RankTwoReport& r) {
    Json j = {{"chern", to_json(r.chern)},
              {"moduli_dim", int_json(r.moduli_dim)},
              {"slope", rational_json(r.slope)},
              {"special", r.special}};
    if (r.pullback_checked) j["pullback_twist_status"] = to_string(r.pullback_status);
    return j;
}

Json to_json(const FamilyDescriptor& f) {
    return {{"rank", f.r},
            {"parity", f.parity},
            {"c1", to_json(f.c1)},
            {"chi_self", int_json(f.chi_self)},
            {"moduli_dim", int_json(f.moduli_dim)},
            {"slope", rational_json(f.slope)},
            {"chi_self_riemann_roch_pairing", int_json(f.chi_self_riemann_roch)},
            {"moduli_dim_riemann_roch_pairing", int_json(f.moduli_dim_riemann_roch)}};
}

Json to_json(const ScanRow& r) {
    Json dims = Json::object();
    for (const auto& [rank, dim] : r.moduli_dims) dims[std::to_string(rank)] = int_json(dim);
    Json j = {{"params", to_json(r.p)},
              {"n", int_json(r.n)},
              {"d", int_json(r.d)},
              {"g", int_json(r.g)},
              {"ulrich_lines", r.ulrich_lines},
              {"indeterminate_lines", r.indeterminate_lines},
              {"rank2_dim", int_json(r.rank2_dim)},
              {"moduli_dims", dims},
              {"ext_strict_all", r.ext_strict_all}};
    if (r.oracle_checked) j["oracle_agrees"] = r.oracle_agrees;
    return j;
}

Json to_json(const AcceptanceReport& r) {
    Json crit = Json::array();
    for (const auto& c : r.criteria)
        crit.push_back({{"id", c.id},
                        {"title", c.title},
                        {"pass", c.pass()},
                        {"exercised", c.exercised()},
                        {"checks", c.checks},
                        {"failures", c.failures},
                        {"first_failure", c.first_failure}});
    Json notes = Json::object();
    for (const auto& [text, n] : r.notes) notes[text] = n;
    // Wall time is deliberately omitted to keep reports byte-identical.
    return {{"grid", grid_str(r.grid)},
            {"rank_max", r.grid.rank_max},
            {"triples", r.triples},
            {"criteria", crit},
            {"notes", notes},
            {"all_pass", r.all_pass()}};
}

Json envelope(const std::string& command, const std::optional<ScrollParams>& p, Json payload) {
    return {{"command", command},
            {"params", p ? to_json(*p) : Json(nullptr)},
            {"payload", std::move(payload)},
            {"engine_version", kEngineVersion}};
}

std::vector<std::pair<std::string, std::string>> flatten(const Json& j, const std::string& prefix) {
    std::vector<std::pair<std::string, std::string>> out;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto sub = flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            out.insert(out.end(), sub.begin(), sub.end());
        }
        if (j.empty()) out.emplace_back(prefix, "{}");
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto sub = flatten(j[i], prefix + "[" + std::to_string(i) + "]");
            out.insert(out.end(), sub.begin(), sub.end());
        }
        if (j.empty()) out.emplace_back(prefix, "[]");
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string s = "\"";
    for (char c : field) {
        if (c == '"') s += '"';
        s += c;
    }
    return s + "\"";
}

std::string render(const Json& env, Format f) {
    if (f == Format::json) return env.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("command", env.at("command").get<std::string>());
    const Json& params = env.at("params");
    if (!params.is_null()) {
        rows.emplace_back("params", "(" + params.at("e").dump() + "," + params.at("b").dump() + "," +
                                        params.at("k").dump() + ")");
    }
    for (auto& row : flatten(env.at("payload"))) rows.push_back(std::move(row));
    rows.emplace_back("engine_version", env.at("engine_version").get<std::string>());

    std::ostringstream os;
    if (f == Format::csv) {
        os << "key,value\r\n";
        for (const auto& [k, v] : rows) os << csv_escape(k) << "," << csv_escape(v) << "\r\n";
        return os.str();
    }
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    return os.str();
}

}  // namespace ulrich
