// SPDX-License-Identifier: Apache-2.0
//
// Numerical intersection ring of the 3-fold scroll X = P(E) over F_e, with
// c1(E) = (3, b) and c2(E) = k. Divisors are a*xi + phi^*(D); codimension-2
// classes are kept in the normal form xi.phi^*(D) + m F, F the phi-fibre.
#pragma once

#include "ulrich/hirzebruch.hpp"

#include <string>
#include <vector>

namespace ulrich {

struct ScrollParams {
    Int e;
    Int b;
    Int k;

    SurfaceContext surface() const { return SurfaceContext(e); }
    SurfaceDivisor c1E() const { return {Int(3), b}; }
    // 0 -> A -> E -> B -> 0.
    SurfaceDivisor A() const { return {Int(2), 2 * b - k - 2 * e}; }
    SurfaceDivisor B() const { return {Int(1), k - b + 2 * e}; }

    bool operator==(const ScrollParams&) const = default;
    std::string str() const;  // "(e,b,k)"
};

struct ParamVerdict {
    bool valid = true;
    std::vector<std::string> violated;  // names of violated bounds
    std::string diagnostic;             // human-readable summary
};

ParamVerdict validate_params(const ScrollParams& p);
// Throws InvalidParams carrying the diagnostic when p is not admissible.
void require_valid(const ScrollParams& p);

struct ScrollInvariants {
    Int n;  // embedding dimension
    Int d;  // degree xi^3
    Int g;  // sectional genus
};

ScrollInvariants scroll_invariants(const ScrollParams& p);
// The same substitution without the validity check, for diagnostics on
// triples outside the standing assumptions.
ScrollInvariants scroll_invariants_formula(const ScrollParams& p);

struct ScrollDivisor {
    Int a = 0;
    SurfaceDivisor D;

    ScrollDivisor() = default;
    ScrollDivisor(Int a_value, SurfaceDivisor d) : a(std::move(a_value)), D(std::move(d)) {}

    ScrollDivisor operator+(const ScrollDivisor& o) const { return {a + o.a, D + o.D}; }
    ScrollDivisor operator-(const ScrollDivisor& o) const { return {a - o.a, D - o.D}; }
    ScrollDivisor operator-() const { return {-a, -D}; }
    friend ScrollDivisor operator*(const Int& s, const ScrollDivisor& x) { return {s * x.a, s * x.D}; }

    bool operator==(const ScrollDivisor& o) const { return a == o.a && D == o.D; }
    std::strong_ordering operator<=>(const ScrollDivisor& o) const;

    std::string str() const;  // "a*xi+(alpha,beta)"
};

struct CodimTwoClass {
    SurfaceDivisor dxi;  // coefficient class of xi.phi^*(-)
    Int m = 0;           // coefficient of F

    CodimTwoClass operator+(const CodimTwoClass& o) const { return {dxi + o.dxi, m + o.m}; }
    bool operator==(const CodimTwoClass& o) const { return dxi == o.dxi && m == o.m; }
    std::string str() const;
};

struct ChernData {
    Int rank = 1;
    ScrollDivisor c1;
    CodimTwoClass c2;
    bool operator==(const ChernData& o) const { return rank == o.rank && c1 == o.c1 && c2 == o.c2; }
};

ChernData line_chern(const ScrollDivisor& L);

ScrollDivisor canonical_scroll(const ScrollParams& p);
CodimTwoClass mult_div_div(const ScrollDivisor& x1, const ScrollDivisor& x2, const ScrollParams& p);
Int degree_codim2_times_div(const CodimTwoClass& c, const ScrollDivisor& x, const ScrollParams& p);
Rational slope(const ScrollDivisor& c1, const Int& rank, const ScrollParams& p);
ScrollDivisor ulrich_dual_line(const ScrollDivisor& L, const ScrollParams& p);
ChernData whitney_extension(const ChernData& sub, const ChernData& quot, const ScrollParams& p);

// Chern data of xi (x) phi^*(V) for a rank-2 bundle V on F_e with the given
// c1 and c2 (c2 as an integer on the surface).
ChernData pullback_twist_rank2(const SurfaceDivisor& c1V, const Int& c2V, const ScrollParams& p);

}  // namespace ulrich
