// SPDX-License-Identifier: Apache-2.0
#include "ulrich/hirzebruch.hpp"

#include <stdexcept>

namespace ulrich {

SurfaceContext::SurfaceContext(Int e_value) : e(std::move(e_value)) {
    if (e < 0) throw std::invalid_argument("Hirzebruch invariant e must be non-negative");
}

std::strong_ordering SurfaceDivisor::operator<=>(const SurfaceDivisor& o) const {
    if (alpha != o.alpha) return alpha < o.alpha ? std::strong_ordering::less : std::strong_ordering::greater;
    if (beta != o.beta) return beta < o.beta ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string SurfaceDivisor::str() const { return "(" + alpha.str() + "," + beta.str() + ")"; }

Int p1_h0(const Int& d) { return max0(d + 1); }
Int p1_h1(const Int& d) { return max0(-d - 1); }

Int intersect(const SurfaceDivisor& d1, const SurfaceDivisor& d2, const SurfaceContext& ctx) {
    return -ctx.e * d1.alpha * d2.alpha + d1.alpha * d2.beta + d2.alpha * d1.beta;
}

SurfaceDivisor canonical_surface(const SurfaceContext& ctx) { return {Int(-2), -(ctx.e + 2)}; }

Int chi_line(const SurfaceDivisor& d, const SurfaceContext& ctx) {
    // alpha(alpha+1) is always even, so the division is exact.
    return (d.alpha + 1) * (d.beta + 1) - ctx.e * exact_div(d.alpha * (d.alpha + 1), 2, "chi_line");
}

SurfaceDivisor serre_dual(const SurfaceDivisor& d, const SurfaceContext& ctx) {
    return canonical_surface(ctx) - d;
}

namespace {

// Sum over i = 0..alpha of h^0 resp. h^1 of O(beta - i e) on P^1, alpha >= 0.
CohVector pushforward_sum(const Int& alpha, const Int& beta, const Int& e) {
    CohVector out;
    if (e == 0) {
        out.h0 = (alpha + 1) * p1_h0(beta);
        out.h1 = (alpha + 1) * p1_h1(beta);
        return out;
    }
    // Summands with beta - i e >= 0 contribute beta - i e + 1 to h^0.
    if (beta >= 0) {
        Int last = floor_div(beta, e);
        if (last > alpha) last = alpha;
        const Int count = last + 1;
        out.h0 = count * (beta + 1) - e * exact_div(last * count, 2, "pushforward h0");
    }
    // Summands with beta - i e <= -2 contribute i e - beta - 1 to h^1.
    Int first = ceil_div(beta + 2, e);
    if (first < 0) first = 0;
    if (first <= alpha) {
        const Int count = alpha - first + 1;
        out.h1 = e * exact_div((first + alpha) * count, 2, "pushforward h1") - count * (beta + 1);
    }
    return out;
}

}  // namespace

CohVector cohomology_line(const SurfaceDivisor& d, const SurfaceContext& ctx) {
    if (d.alpha >= 0) return pushforward_sum(d.alpha, d.beta, ctx.e);
    if (d.alpha == -1) return {};
    // Serre duality: h^i(D) = h^{2-i}(K - D); the dual has alpha >= 0.
    const CohVector dual = cohomology_line(serre_dual(d, ctx), ctx);
    return {dual.h2, dual.h1, dual.h0};
}

}  // namespace ulrich
