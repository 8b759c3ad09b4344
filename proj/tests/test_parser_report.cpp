// SPDX-License-Identifier: Apache-2.0
#include "ulrich/errors.hpp"
#include "ulrich/expr_parser.hpp"
#include "ulrich/report.hpp"

#include <doctest.h>

using namespace ulrich;

namespace {
ScrollParams P(int e, int b, int k) { return {Int(e), Int(b), Int(k)}; }
}  // namespace

TEST_CASE("bundle expressions round-trip through their string form") {
    for (const char* text : {"L(3,-4)", "E(-3,-2)", "S2E(-3,-8)", "IZ(2,0;5)", "xi^-2*L(3,8)", "xi*E(0,1)",
                             "Ext[L(0,0) -> L(1,-3)]", "Ext[Ext[L(1,2) -> E(0,0)] -> S2E(1,1)]"}) {
        CAPTURE(text);
        const BundleExpr x = parse_bundle_expr(text);
        CHECK(parse_bundle_expr(x.str()).str() == x.str());
    }
    CHECK(parse_bundle_expr("  L( 3 , -4 ) ").str() == parse_bundle_expr("L(3,-4)").str());
    CHECK(parse_bundle_expr("E()").str() == parse_bundle_expr("E(0,0)").str());
}

TEST_CASE("parsed expressions evaluate like hand-built ones") {
    const ScrollParams p = P(0, 4, 6);
    CHECK(cohomology(parse_bundle_expr("S2E(-3,-8)"), p) == cohomology(BundleExpr::sym_square_e({Int(-3), Int(-8)}), p));
    CHECK(cohomology(parse_bundle_expr("xi^-2*L(3,8)"), p) ==
          cohomology(BundleExpr::scroll_line(Int(-2), {Int(3), Int(8)}), p));
}

TEST_CASE("malformed expressions are parse errors") {
    for (const char* text : {"", "L(3)", "L(3,4", "Q(1,2)", "Lx(1,2)", "IZ(1,2;-1)", "Ext[L(0,0) L(1,1)]",
                             "L(1,2) junk", "xi^*L(0,0)", "L(a,b)"}) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_bundle_expr(text), ParseError);
    }
}

TEST_CASE("integers beyond 2^53 are emitted as strings") {
    const Int limit = Int(1) << 53;
    CHECK(int_json(limit).is_number_integer());
    CHECK(int_json(-limit).is_number_integer());
    CHECK(int_json(limit + 1).is_string());
    CHECK(int_json(limit + 1).get<std::string>() == Int(limit + 1).str());
    CHECK(int_json(-(limit + 1)).is_string());
}

TEST_CASE("JSON output parses back to the same document") {
    const ScrollParams p = P(1, 5, 5);
    Json payload = to_json(family_descriptor(5, p));
    payload["classification"] = to_json(classify_ulrich_lines(P(0, 4, 6)), P(0, 4, 6));
    const Json env = envelope("moduli", p, payload);
    CHECK(env.at("command") == "moduli");
    CHECK(env.at("engine_version") == kEngineVersion);
    CHECK(env.at("params").at("b") == 5);
    const std::string text = render(env, Format::json);
    CHECK(Json::parse(text) == env);
    CHECK(render(env, Format::json) == text);  // deterministic
}

TEST_CASE("CSV escaping and flattening") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
    const Json j = {{"a", {{"b", 1}}}, {"c", Json::array({2, "x,y"})}};
    const auto rows = flatten(j);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::pair<std::string, std::string>{"a.b", "1"});
    CHECK(rows[1].first == "c[0]");
    CHECK(rows[2] == std::pair<std::string, std::string>{"c[1]", "x,y"});
    const std::string csv = render(envelope("t", std::nullopt, j), Format::csv);
    CHECK(csv.rfind("key,value\r\n", 0) == 0);
    CHECK(csv.find("\"x,y\"") != std::string::npos);
}

TEST_CASE("format names") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("table") == Format::table);
    CHECK_THROWS_AS(parse_format("xml"), ParseError);
}
