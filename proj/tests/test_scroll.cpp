// SPDX-License-Identifier: Apache-2.0
#include "ulrich/errors.hpp"
#include "ulrich/scroll.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ulrich;

namespace {
ScrollParams P(int e, int b, int k) { return {Int(e), Int(b), Int(k)}; }
}  // namespace

TEST_CASE("parameter validation names the violated bound") {
    CHECK(validate_params(P(0, 4, 5)).valid);
    CHECK(validate_params(P(0, 2, 3)).valid);  // minimal (2t, 3t) case
    const ParamVerdict v = validate_params(P(1, 4, 5));
    CHECK_FALSE(v.valid);
    CHECK(std::find(v.violated.begin(), v.violated.end(), "b >= 3e + 2") != v.violated.end());
    CHECK_FALSE(validate_params(P(0, 4, 4)).valid);
    CHECK_FALSE(validate_params(P(0, 4, 8)).valid);
    CHECK_FALSE(validate_params(P(-1, 4, 5)).valid);
    CHECK_THROWS_AS(scroll_invariants(P(1, 4, 5)), InvalidParams);
}

TEST_CASE("the two strict inequalities force b >= 3e + 2") {
    for (int e = 0; e <= 6; ++e)
        for (int b = 0; b <= 40; ++b)
            for (int k = -5; k <= 90; ++k) {
                const ScrollParams p = P(e, b, k);
                if (p.b - p.e < p.k && p.k < 2 * p.b - 4 * p.e) CHECK(b >= 3 * e + 2);
            }
}

TEST_CASE("invariants n, d, g") {
    const ScrollInvariants a = scroll_invariants(P(0, 4, 5));
    CHECK(a.n == 15);
    CHECK(a.d == 19);
    CHECK(a.g == 6);
    CHECK(scroll_invariants_formula(P(1, 5, 10)).d == 11);  // outside the assumptions
    CHECK(scroll_invariants(P(1, 5, 5)).d == 16);
}

TEST_CASE("canonical class and special rank-2 class") {
    for (int e = 0; e <= 2; ++e)
        for (int b = 3 * e + 2; b <= 12; ++b)
            for (int k = b - e + 1; k < 2 * b - 4 * e; ++k) {
                const ScrollParams p = P(e, b, k);
                CHECK(canonical_scroll(p) == ScrollDivisor{Int(-2), {Int(1), Int(b - e - 2)}});
                const ScrollDivisor kx4 = canonical_scroll(p) + ScrollDivisor{Int(4), {}};
                CHECK(kx4 == ScrollDivisor{Int(2), {Int(1), Int(b - e - 2)}});
            }
}

TEST_CASE("intersection numbers on X") {
    const ScrollParams p = P(1, 6, 7);
    const ScrollDivisor xi{Int(1), {}};
    // xi^3 = c1(E)^2 - c2(E) = deg X
    CHECK(degree_codim2_times_div(mult_div_div(xi, xi, p), xi, p) == scroll_invariants(p).d);
    // xi^2 . phi^*f = c1(E) . f = 3, xi . phi^*f . phi^*C = 1
    const ScrollDivisor f{Int(0), {Int(0), Int(1)}}, c{Int(0), {Int(1), Int(0)}};
    CHECK(degree_codim2_times_div(mult_div_div(xi, xi, p), f, p) == 3);
    CHECK(degree_codim2_times_div(mult_div_div(xi, f, p), c, p) == 1);
    CHECK(degree_codim2_times_div(mult_div_div(f, f, p), xi, p) == 0);
    // symmetry of the triple product
    const ScrollDivisor x{Int(2), {Int(-1), Int(3)}}, y{Int(1), {Int(4), Int(-2)}}, z{Int(-1), {Int(2), Int(5)}};
    const Int xyz = degree_codim2_times_div(mult_div_div(x, y, p), z, p);
    CHECK(degree_codim2_times_div(mult_div_div(y, z, p), x, p) == xyz);
    CHECK(degree_codim2_times_div(mult_div_div(z, x, p), y, p) == xyz);
}

TEST_CASE("slope and Ulrich dual of line bundles") {
    const ScrollParams p = P(0, 4, 6);
    const ScrollDivisor L1{Int(1), {Int(2), Int(-1)}}, L2{Int(1), {Int(-1), Int(3)}};
    CHECK(slope(L1, Int(1), p) == Rational(8 * 4 - 6 - 3));
    CHECK(ulrich_dual_line(L1, p) == L2);
    CHECK(ulrich_dual_line(L2, p) == L1);
    CHECK_THROWS(slope(L1, Int(0), p));
}

TEST_CASE("Whitney c2 of 0 -> L1 -> F -> L2 -> 0 at e = 0") {
    for (int b = 2; b <= 10; ++b)
        for (int k = b + 1; k < 2 * b; ++k) {
            const ScrollParams p = P(0, b, k);
            const ChernData f = whitney_extension(line_chern({Int(1), {Int(2), Int(-1)}}),
                                                  line_chern({Int(1), {Int(-1), Int(b - 1)}}), p);
            CHECK(f.rank == 2);
            CHECK(f.c1 == ScrollDivisor{Int(2), {Int(1), Int(b - 2)}});
            CHECK(f.c2 == CodimTwoClass{{Int(4), Int(2 * b - 2)}, Int(2 * b - k - 1)});
        }
}
