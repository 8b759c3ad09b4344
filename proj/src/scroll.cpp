// SPDX-License-Identifier: Apache-2.0
#include "ulrich/scroll.hpp"

#include "ulrich/errors.hpp"

#include <stdexcept>

namespace ulrich {

std::string ScrollParams::str() const { return "(" + e.str() + "," + b.str() + "," + k.str() + ")"; }

ParamVerdict validate_params(const ScrollParams& p) {
    ParamVerdict v;
    if (p.e < 0) v.violated.push_back("e >= 0");
    if (!(p.b - p.e < p.k)) v.violated.push_back("b - e < k");
    if (!(p.k < 2 * p.b - 4 * p.e)) v.violated.push_back("k < 2b - 4e");
    // Implied by the two strict inequalities over the integers; reported
    // separately because it is the bound most users trip over.
    if (p.b < 3 * p.e + 2) v.violated.push_back("b >= 3e + 2");
    v.valid = v.violated.empty();
    if (v.valid) {
        v.diagnostic = "ok";
    } else {
        v.diagnostic = "invalid parameters " + p.str() + ": violated ";
        for (std::size_t i = 0; i < v.violated.size(); ++i) {
            if (i) v.diagnostic += ", ";
            v.diagnostic += v.violated[i];
        }
    }
    return v;
}

void require_valid(const ScrollParams& p) {
    const ParamVerdict v = validate_params(p);
    if (!v.valid) throw InvalidParams(v.diagnostic);
}

ScrollInvariants scroll_invariants_formula(const ScrollParams& p) {
    return {4 * p.b - p.k - 6 * p.e + 4, 6 * p.b - 9 * p.e - p.k, 2 * p.b - 3 * p.e - 2};
}

ScrollInvariants scroll_invariants(const ScrollParams& p) {
    require_valid(p);
    return scroll_invariants_formula(p);
}

std::strong_ordering ScrollDivisor::operator<=>(const ScrollDivisor& o) const {
    if (a != o.a) return a < o.a ? std::strong_ordering::less : std::strong_ordering::greater;
    return D <=> o.D;
}

std::string ScrollDivisor::str() const { return a.str() + "*xi+" + D.str(); }

std::string CodimTwoClass::str() const { return "xi*" + dxi.str() + (m < 0 ? "" : "+") + m.str() + "*F"; }

ChernData line_chern(const ScrollDivisor& L) { return {Int(1), L, {}}; }

ScrollDivisor canonical_scroll(const ScrollParams& p) {
    require_valid(p);
    const SurfaceContext ctx = p.surface();
    return {Int(-2), canonical_surface(ctx) + p.c1E()};
}

CodimTwoClass mult_div_div(const ScrollDivisor& x1, const ScrollDivisor& x2, const ScrollParams& p) {
    require_valid(p);
    const SurfaceContext ctx = p.surface();
    // xi^2 = xi.phi^*c1(E) - k F, phi^*D1.phi^*D2 = (D1.D2) F.
    CodimTwoClass out;
    out.dxi = (x1.a * x2.a) * p.c1E() + x1.a * x2.D + x2.a * x1.D;
    out.m = -x1.a * x2.a * p.k + intersect(x1.D, x2.D, ctx);
    return out;
}

Int degree_codim2_times_div(const CodimTwoClass& c, const ScrollDivisor& x, const ScrollParams& p) {
    require_valid(p);
    const SurfaceContext ctx = p.surface();
    // xi.(xi.phi^*D) = c1(E).D, xi.F = 1, phi^*D'.(xi.phi^*D) = D'.D, phi^*D'.F = 0.
    return x.a * (intersect(p.c1E(), c.dxi, ctx) + c.m) + intersect(x.D, c.dxi, ctx);
}

Rational slope(const ScrollDivisor& c1, const Int& rank, const ScrollParams& p) {
    if (rank < 1) throw std::invalid_argument("slope: rank must be at least 1");
    const ScrollDivisor xi{Int(1), {}};
    const Int deg = degree_codim2_times_div(mult_div_div(xi, xi, p), c1, p);
    return Rational(deg, rank);
}

ScrollDivisor ulrich_dual_line(const ScrollDivisor& L, const ScrollParams& p) {
    return -L + canonical_scroll(p) + ScrollDivisor{Int(4), {}};
}

ChernData whitney_extension(const ChernData& sub, const ChernData& quot, const ScrollParams& p) {
    ChernData out;
    out.rank = sub.rank + quot.rank;
    out.c1 = sub.c1 + quot.c1;
    out.c2 = sub.c2 + quot.c2 + mult_div_div(sub.c1, quot.c1, p);
    return out;
}

ChernData pullback_twist_rank2(const SurfaceDivisor& c1V, const Int& c2V, const ScrollParams& p) {
    const ScrollDivisor xi{Int(1), {}};
    const ScrollDivisor pull{Int(0), c1V};
    ChernData out;
    out.rank = 2;
    out.c1 = ScrollDivisor{Int(2), c1V};
    // c2(V (x) M) = c2(V) + c1(V).M + M^2 for rank 2.
    out.c2 = mult_div_div(xi, xi, p) + mult_div_div(xi, pull, p) + CodimTwoClass{{}, c2V};
    return out;
}

}  // namespace ulrich
