// SPDX-License-Identifier: Apache-2.0
//
// Divisor arithmetic and line-bundle cohomology on the Hirzebruch surface F_e.
// A class alpha*C + beta*f is written (alpha, beta); C^2 = -e, f^2 = 0, C.f = 1.
#pragma once

#include "ulrich/number.hpp"

#include <compare>
#include <string>

namespace ulrich {

struct SurfaceContext {
    Int e;
    explicit SurfaceContext(Int e_value);
};

struct SurfaceDivisor {
    Int alpha = 0;
    Int beta = 0;

    SurfaceDivisor() = default;
    SurfaceDivisor(Int a, Int b) : alpha(std::move(a)), beta(std::move(b)) {}

    SurfaceDivisor operator+(const SurfaceDivisor& o) const { return {alpha + o.alpha, beta + o.beta}; }
    SurfaceDivisor operator-(const SurfaceDivisor& o) const { return {alpha - o.alpha, beta - o.beta}; }
    SurfaceDivisor operator-() const { return {-alpha, -beta}; }
    friend SurfaceDivisor operator*(const Int& s, const SurfaceDivisor& d) { return {s * d.alpha, s * d.beta}; }

    bool operator==(const SurfaceDivisor& o) const { return alpha == o.alpha && beta == o.beta; }
    std::strong_ordering operator<=>(const SurfaceDivisor& o) const;

    std::string str() const;  // "(alpha,beta)"
};

struct CohVector {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;

    Int chi() const { return h0 - h1 + h2; }
    bool is_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }
    bool operator==(const CohVector&) const = default;
};

// h^0 and h^1 of O(d) on P^1.
Int p1_h0(const Int& d);
Int p1_h1(const Int& d);

Int intersect(const SurfaceDivisor& d1, const SurfaceDivisor& d2, const SurfaceContext& ctx);
SurfaceDivisor canonical_surface(const SurfaceContext& ctx);
Int chi_line(const SurfaceDivisor& d, const SurfaceContext& ctx);

// Exact h^i(F_e, O(D)). For alpha >= 0 the pushforward to P^1 splits as
// the sum of O(beta - i e), i = 0..alpha, summed in closed form so that
// arbitrarily large coefficients stay cheap. alpha = -1 is acyclic, and
// alpha <= -2 goes through Serre duality.
CohVector cohomology_line(const SurfaceDivisor& d, const SurfaceContext& ctx);

SurfaceDivisor serre_dual(const SurfaceDivisor& d, const SurfaceContext& ctx);

}  // namespace ulrich
