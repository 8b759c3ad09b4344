// SPDX-License-Identifier: Apache-2.0
#include "ulrich/moduli.hpp"

#include "ulrich/errors.hpp"

#include <algorithm>

namespace ulrich {

namespace {

void require_rank(int r, const ScrollParams& p) {
    require_valid(p);
    if (r < 1) throw ScopeError("rank must be at least 1; got " + std::to_string(r));
    if (r == 1 && p.e != 0) throw ScopeError("no Ulrich line bundles exist on the scroll for e > 0");
}

void require_e_zero(const ScrollParams& p, const char* what) {
    require_valid(p);
    if (p.e != 0) throw ScopeError(std::string(what) + " is defined for e = 0 only");
}

void require_e_positive(const ScrollParams& p, const char* what) {
    require_valid(p);
    if (p.e == 0) throw ScopeError(std::string(what) + " is defined for e > 0 only");
}

Int half(int x, const char* what) { return exact_div(Int(x), Int(2), what); }

// L_{eps} at e = 0 as scroll line bundles.
ScrollDivisor line_eps(int eps, const ScrollParams& p) {
    return eps == 1 ? ScrollDivisor{Int(1), {Int(2), Int(-1)}} : ScrollDivisor{Int(1), {Int(-1), p.b - 1}};
}

// Surface class of the rank-2 block: c1(U_2) = 2 xi + (1, b-e-2).
SurfaceDivisor block2(const ScrollParams& p) { return {Int(1), p.b - p.e - 2}; }

// 6b - 9e - 4 = -c.
Int c_prime(const ScrollParams& p) { return 6 * p.b - 9 * p.e - 4; }

// chi(X (x) Y^dual) for line bundles on X; the a-parts cancel, so this is
// chi on F_e of the surface difference.
Int chi_lines(const ScrollDivisor& x, const ScrollDivisor& y, const ScrollParams& p) {
    const ScrollDivisor d = x - y;
    return euler_characteristic(BundleExpr::scroll_line(d.a, d.D), p);
}

struct OddPairings {
    Int c;   // chi(U_2 (x) U_2^dual)
    Int p3;  // chi(U_3 (x) U_2^dual)
    Int q3;  // chi(U_2 (x) U_3^dual)
    Int x1;  // chi(U_3 (x) U_3^dual)
};

OddPairings odd_pairings(const ScrollParams& p, bool riemann_roch) {
    const SurfaceDivisor h1 = c1_H1(p);
    const SurfaceDivisor a3 = c1_A3(p);
    const auto pair = riemann_roch ? euler_pair_riemann_roch : euler_pair_ulrich_surface;
    OddPairings o;
    o.c = chi_rank2_endo_surface(p);
    o.p3 = pair(Int(3), a3, Int(2), h1, p);
    o.q3 = pair(Int(2), h1, Int(3), a3, p);
    // The rank-3 self pairing is taken from Riemann-Roch in both variants;
    // it reproduces dim M(3) = 2(6b - 9e - 4).
    o.x1 = euler_pair_riemann_roch(Int(3), a3, Int(3), a3, p);
    return o;
}

// Odd e > 0 recursion: returns (X_h, P_h, Q_h) for U_{2h+1}.
struct OddState {
    Int x, pp, qq;
};

OddState odd_recursion(int h, const OddPairings& o) {
    OddState s{o.x1, o.p3, o.q3};
    for (int j = 2; j <= h; ++j) {
        // 0 -> U_{2j-1} -> U_{2j+1} -> U_2 -> 0
        const Int x = s.x + s.pp + (s.qq + o.c);
        s = {x, s.pp + o.c, s.qq + o.c};
    }
    return s;
}

Int chi_self_e_positive_recursive(int r, const ScrollParams& p, bool riemann_roch) {
    if (r % 2 == 0) {
        const int h = r / 2;
        const Int c = chi_rank2_endo_surface(p);
        Int chi = c;
        for (int j = 2; j <= h; ++j) chi += (j - 1) * c + j * c;
        return chi;
    }
    return odd_recursion((r - 1) / 2, odd_pairings(p, riemann_roch)).x;
}

}  // namespace

int epsilon(int r) {
    if (r < 1) throw ScopeError("epsilon: r must be at least 1");
    return r % 2 == 1 ? 1 : 2;
}

ScrollDivisor c1_rank_r(int r, const ScrollParams& p) {
    require_rank(r, p);
    const SurfaceDivisor unit = block2(p);
    if (r % 2 == 0) return {Int(r), half(r, "c1 even") * unit};
    return {Int(r), SurfaceDivisor{Int(3), p.b - 3} + half(r - 3, "c1 odd") * unit};
}

ScrollDivisor c1_rank_r_recursive(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (p.e == 0) {
        ScrollDivisor c1;
        for (int i = 1; i <= r; ++i) c1 = c1 + line_eps(epsilon(i), p);
        return c1;
    }
    const ScrollDivisor u2{Int(2), block2(p)};
    const ScrollDivisor u3{Int(3), c1_A3(p) - Int(3) * p.c1E()};
    if (r % 2 == 0) return Int(r / 2) * u2;
    return u3 + Int((r - 1) / 2 - 1) * u2;
}

Int chi_self(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (p.e == 0) {
        const Int c0 = 4 - 6 * p.b;
        if (r % 2 == 0) return exact_div(Int(r) * r, 4, "chi even") * c0;
        return exact_div(Int(r) * r - 1, 4, "chi odd") * c0 + 1;
    }
    const Int c = 4 + 9 * p.e - 6 * p.b;
    if (r % 2 == 0) {
        const Int h = r / 2;
        return h * h * c;
    }
    const Int h = (r - 1) / 2;
    return 1 + 9 * (h - 1) * (3 * p.e - 2 * p.b) + ((h - 1) * (h - 1) + 2) * c;
}

Int chi_self_recursive(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (p.e != 0) return chi_self_e_positive_recursive(r, p, false);
    // chi(G_{s+1} (x) G_{s+1}^dual) = chi(G_s (x) G_s^dual)
    //     + chi(G_s (x) L^dual) + chi(L (x) G_{s+1}^dual),  L = L_{eps_{s+1}}.
    Int chi = 1;
    for (int s = 1; s < r; ++s) {
        const ScrollDivisor L = line_eps(epsilon(s + 1), p);
        for (int i = 1; i <= s; ++i) chi += chi_lines(line_eps(epsilon(i), p), L, p);
        for (int i = 1; i <= s + 1; ++i) chi += chi_lines(L, line_eps(epsilon(i), p), p);
    }
    return chi;
}

Int moduli_dim(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (r == 1) return 0;
    return 1 - chi_self(r, p);
}

Int chi_self_riemann_roch(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (p.e == 0) return chi_self_recursive(r, p);
    return chi_self_e_positive_recursive(r, p, true);
}

Int moduli_dim_riemann_roch(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (r == 1) return 0;
    return 1 - chi_self_riemann_roch(r, p);
}

Int h1_Gr_tensor_Ldual(int r, const ScrollParams& p) {
    require_e_zero(p, "h1(G_r (x) L^dual)");
    if (r < 1) throw ScopeError("h1(G_r (x) L^dual): r must be at least 1");
    if (r % 2 == 1) return 2 * Int(r + 1) * (p.b - 1) - half(r - 1, "h1 odd");
    return Int(r) * (p.b + 1) - half(r - 2, "h1 even");
}

Int h1_Gr_tensor_Ldual_recursive(int r, const ScrollParams& p) {
    require_e_zero(p, "h1(G_r (x) L^dual)");
    if (r < 1) throw ScopeError("h1(G_r (x) L^dual): r must be at least 1");
    const auto h1_diff = [&](int eps_a, int eps_b) {
        const ScrollDivisor d = line_eps(eps_a, p) - line_eps(eps_b, p);
        return scroll_line_cohomology(d.a, d.D, p).value(1);
    };
    // x_1 = h^1(L1 - L2); x_2 from 0 -> O -> G_2 (x) L1^dual -> L2 - L1 -> 0.
    const Int x1 = h1_diff(1, 2);
    const ScrollDivisor d21 = line_eps(2, p) - line_eps(1, p);
    const Int x2 = cohomology(BundleExpr::extension(BundleExpr::line({}), BundleExpr::line(d21.D)), p).value(1);
    if (r == 1) return x1;
    Int prev = x1, cur = x2;
    for (int s = 2; s < r; ++s) {
        // x_{s+1} = h^1(L_{eps_{s+1}} - L_{eps_{s+2}}) + x_{s-1} - 1
        const Int next = h1_diff(epsilon(s + 1), epsilon(s + 2)) + prev - 1;
        prev = cur;
        cur = next;
    }
    return cur;
}

int h0_parity(int r) {
    if (r < 2) throw ScopeError("h0 parity: r must be at least 2");
    return r % 2 == 0 ? 0 : 1;
}

CohInterval h0_parity_interval(int r, const ScrollParams& p) {
    require_e_zero(p, "h0(G_{r-1} (x) L^dual)");
    if (r < 2) throw ScopeError("h0 parity: r must be at least 2");
    const ScrollDivisor L = line_eps(epsilon(r), p);
    const auto piece = [&](int i) { return BundleExpr::line((line_eps(epsilon(i), p) - L).D); };
    BundleExpr g = piece(1);
    for (int i = 2; i <= r - 1; ++i) g = BundleExpr::extension(g, piece(i));
    return cohomology(g, p);
}

Int h1_Ur_lower_bound(const ScrollParams& p) {
    require_e_zero(p, "h1(U_{r-1} (x) L^dual)");
    return std::min(Int(4 * p.b - 5), Int(2 * p.b + 1));
}

int ext_locus_min_rank(int r, const ScrollParams& p) {
    if (p.e == 0) return 2;
    return r % 2 == 0 ? 4 : 5;
}

Int ext_locus_dim_bound(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (r < ext_locus_min_rank(r, p))
        throw ScopeError("extension-locus bound needs r >= " + std::to_string(ext_locus_min_rank(r, p)));
    if (p.e == 0) return -chi_self(r - 1, p) + h1_Gr_tensor_Ldual(r - 1, p);
    if (r % 2 == 0) {
        const int h = r / 2;
        return moduli_dim(2 * h - 2, p) + moduli_dim(2, p) + ext_space_dim_even(h, p) - 1;
    }
    const int h = (r - 1) / 2;
    return ext_dim_next_odd(h, p) - 1 + moduli_dim(2 * h - 1, p) + moduli_dim(2, p);
}

Int ext_strict_margin(int r, const ScrollParams& p) { return moduli_dim(r, p) - ext_locus_dim_bound(r, p); }

bool check_ext_strict(int r, const ScrollParams& p) { return ext_strict_margin(r, p) > 0; }

Int ext_strict_margin_closed(int r, const ScrollParams& p) {
    require_e_zero(p, "closed extension margin");
    if (r < 2) throw ScopeError("extension-locus bound needs r >= 2");
    if (r % 2 == 0) return Int(r) * p.b + 2 + half(r - 2, "margin even");
    return Int(r - 1) * (2 * p.b - 3) + half(r - 3, "margin odd");
}

Int ext_space_dim_even(int h, const ScrollParams& p) {
    require_e_positive(p, "dim Ext^1(U_2, U_{2h-2})");
    if (h < 2) throw ScopeError("dim Ext^1(U_2, U_{2h-2}) needs h >= 2");
    // -chi(U_2 (x) U_{2h-2}^dual) = -(h-1) c; the other groups vanish.
    return -Int(h - 1) * chi_rank2_endo_surface(p);
}

Int ext_dim_next_odd(int h, const ScrollParams& p) {
    require_e_positive(p, "dim Ext^1(U_2, U_{2h-1})");
    if (h < 2) throw ScopeError("dim Ext^1(U_2, U_{2h-1}) needs h >= 2");
    return -odd_recursion(h - 1, odd_pairings(p, false)).qq;
}

Int ext_dim_next_odd_closed(int h, const ScrollParams& p) {
    require_e_positive(p, "dim Ext^1(U_2, U_{2h-1})");
    if (h < 2) throw ScopeError("dim Ext^1(U_2, U_{2h-1}) needs h >= 2");
    return Int(h - 2) * c_prime(p) + 8 * p.b - 12 * p.e + 3;
}

Int ext_dim_next_odd_riemann_roch(int h, const ScrollParams& p) {
    require_e_positive(p, "dim Ext^1(U_2, U_{2h-1})");
    if (h < 2) throw ScopeError("dim Ext^1(U_2, U_{2h-1}) needs h >= 2");
    return -odd_recursion(h - 1, odd_pairings(p, true)).qq;
}

FamilyDescriptor family_descriptor(int r, const ScrollParams& p) {
    FamilyDescriptor f;
    f.r = r;
    f.parity = r % 2 == 0 ? "even" : "odd";
    f.c1 = c1_rank_r(r, p);
    f.chi_self = chi_self(r, p);
    f.moduli_dim = moduli_dim(r, p);
    f.slope = slope(f.c1, Int(r), p);
    f.chi_self_riemann_roch = chi_self_riemann_roch(r, p);
    f.moduli_dim_riemann_roch = moduli_dim_riemann_roch(r, p);
    return f;
}

SurfaceDivisor scroll_to_surface_c1(int r, const ScrollParams& p) {
    return c1_rank_r(r, p).D + Int(r) * p.c1E();
}

SurfaceDivisor surface_c1_closed_form(int r, const ScrollParams& p) {
    require_rank(r, p);
    const SurfaceDivisor unit = block2(p);
    if (r % 2 == 0) return SurfaceDivisor{Int(3 * r), Int(r) * p.b} + half(r, "surface c1 even") * unit;
    return SurfaceDivisor{Int(3 * (r + 1)), Int(r + 1) * p.b - 3} + half(r - 3, "surface c1 odd") * unit;
}

Int surface_moduli_dim(int r, const ScrollParams& p) {
    require_rank(r, p);
    if (r == 1) return 0;
    const SurfaceDivisor c1 = scroll_to_surface_c1(r, p);
    return 1 - euler_pair_riemann_roch(Int(r), c1, Int(r), c1, p);
}

}  // namespace ulrich
