// SPDX-License-Identifier: Apache-2.0
#include "ulrich/acceptance.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/report.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace ulrich;

TEST_CASE("default grid enumerates every valid triple") {
    const auto t = enumerate_triples(GridSpec{});
    CHECK(t.size() == 72);
    for (const auto& p : t) CHECK(validate_params(p).valid);
    // (e, b) pairs with no admissible k contribute nothing
    CHECK(enumerate_triples(GridSpec{{Int(1), Int(1)}, {Int(2), Int(4)}, std::nullopt, 12}).empty());
    // k restriction
    const auto only = enumerate_triples(GridSpec{{Int(0), Int(0)}, {Int(4), Int(4)}, IntRange{Int(6), Int(6)}, 12});
    REQUIRE(only.size() == 1);
    CHECK(only[0] == ScrollParams{Int(0), Int(4), Int(6)});
}

TEST_CASE("grid and range syntax") {
    const GridSpec g = parse_grid("e=0..1,b=3..7,k=5..6");
    CHECK(g.e.hi == 1);
    CHECK(g.b.lo == 3);
    REQUIRE(g.k.has_value());
    CHECK(g.k->hi == 6);
    CHECK(parse_grid(grid_str(g)).b.hi == 7);
    CHECK(parse_range("4").lo == 4);
    for (const char* bad : {"e=0..", "e=2..1", "x=0..1", "e0..1", "e=a..b"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_grid(bad), ParseError);
    }
}

TEST_CASE("serial and parallel sweeps produce identical output") {
    const GridSpec g{{Int(0), Int(2)}, {Int(2), Int(9)}, std::nullopt, 8};
    const auto s = scan_grid(g, true, Exec::serial);
    const auto q = scan_grid(g, true, Exec::parallel);
    REQUIRE(s.size() == q.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(to_json(s[i]) == to_json(q[i]));
    for (const auto& r : s) CHECK(r.oracle_agrees);

    AcceptanceReport a = run_acceptance(g, Fault::none, Exec::serial);
    AcceptanceReport b = run_acceptance(g, Fault::none, Exec::parallel);
    a.seconds = b.seconds = 0;
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("worker exceptions propagate") {
    CHECK_THROWS_AS(for_each_index(
                        50, [](std::size_t i) { if (i == 17) throw ScopeError("boom"); }, Exec::parallel),
                    ScopeError);
}

TEST_CASE("thread cap follows the environment") {
#ifdef _OPENMP
    ::setenv("ULRICH_SCROLLS_THREADS", "1", 1);
    CHECK(thread_cap() == 1);
    ::setenv("ULRICH_SCROLLS_THREADS", "3", 1);
    CHECK(thread_cap() == 3);
    ::setenv("ULRICH_SCROLLS_THREADS", "junk", 1);
    CHECK(thread_cap() >= 1);
    ::unsetenv("ULRICH_SCROLLS_THREADS");
#endif
    CHECK(thread_cap() >= 1);
}

TEST_CASE("negative controls turn their criterion red") {
    // e = 0 only: every criterion is green there, so a red result is the fault.
    const GridSpec g{{Int(0), Int(0)}, {Int(2), Int(7)}, std::nullopt, 6};
    CHECK(run_acceptance(g, Fault::none, Exec::parallel).all_pass());
    for (const auto& name : fault_names()) {
        if (name == "none") continue;
        CAPTURE(name);
        const AcceptanceReport r = run_acceptance(g, parse_fault(name), Exec::parallel);
        CHECK_FALSE(r.all_pass());
    }
    CHECK_THROWS_AS(parse_fault("no_such_fault"), ParseError);
}
