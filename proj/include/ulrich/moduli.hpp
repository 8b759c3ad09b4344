// SPDX-License-Identifier: Apache-2.0
//
// Rank-r Ulrich families on the scroll X: first Chern classes, Euler
// characteristics chi(U_r (x) U_r^dual), moduli dimensions, h^1 values and the
// dimension bounds for the loci of non-trivial extensions.
//
// Every quantity is available in closed form and through the recursion that
// builds U_r from smaller pieces; the two routes are compared by the tests.
// Families are handled as (rank, c1, chi) descriptors only.
//
// e = 0: G_r is the iterated extension of L_{eps_1}, ..., L_{eps_r} with
//        eps_i = 1 (i odd), 2 (i even), L1 = xi + (2,-1), L2 = xi + (-1,b-1).
// e > 0: U_{2h} is built from h copies of the rank-2 bundle U_2, and
//        U_{2h+1} from U_3 and h - 1 copies of U_2.
#pragma once

#include "ulrich/ulrich.hpp"

#include <string>

namespace ulrich {

int epsilon(int r);

// c1(U_r). ScopeError for r < 1, or r = 1 with e > 0 (no Ulrich line bundles).
ScrollDivisor c1_rank_r(int r, const ScrollParams& p);
ScrollDivisor c1_rank_r_recursive(int r, const ScrollParams& p);

// chi(U_r (x) U_r^dual) in closed form and by the block recursion. The e > 0
// odd recursion uses the pairing euler_pair_ulrich_surface for its cross
// terms.
Int chi_self(int r, const ScrollParams& p);
Int chi_self_recursive(int r, const ScrollParams& p);
// 1 - chi_self for r >= 2; 0 for the singleton family r = 1 at e = 0.
Int moduli_dim(int r, const ScrollParams& p);

// The same quantities with every cross term taken from
// euler_pair_riemann_roch (equivalently, computed on F_e through the
// correspondence U_r = xi (x) phi^*(H_r(-c1 E))). Differs from chi_self only
// for odd r >= 5 with e > 0, by 12(h - 1).
Int chi_self_riemann_roch(int r, const ScrollParams& p);
Int moduli_dim_riemann_roch(int r, const ScrollParams& p);

// e = 0: x_r = h^1(G_r (x) L_{eps_{r+1}}^dual).
Int h1_Gr_tensor_Ldual(int r, const ScrollParams& p);
Int h1_Gr_tensor_Ldual_recursive(int r, const ScrollParams& p);
// h^0(G_{r-1} (x) L_{eps_r}^dual): 0 for r even, 1 for r odd (r >= 2).
int h0_parity(int r);
// The engine interval for the same group, from the iterated extension.
CohInterval h0_parity_interval(int r, const ScrollParams& p);
// Lower bound for h^1(U_{r-1} (x) L^dual) at e = 0; not an exact value.
Int h1_Ur_lower_bound(const ScrollParams& p);

// First rank at which the extension-locus bound applies: 2 (e = 0),
// 4 (e > 0, r even), 5 (e > 0, r odd).
int ext_locus_min_rank(int r, const ScrollParams& p);
// Upper bound for the dimension of the locus of U_r that are non-trivial
// extensions; ScopeError below ext_locus_min_rank.
Int ext_locus_dim_bound(int r, const ScrollParams& p);
Int ext_strict_margin(int r, const ScrollParams& p);  // moduli_dim - bound
bool check_ext_strict(int r, const ScrollParams& p);
// e = 0 closed form of the margin: r b + 2 + (r-2)/2 (even),
// (r-1)(2b-3) + (r-3)/2 (odd).
Int ext_strict_margin_closed(int r, const ScrollParams& p);

// e > 0: dim Ext^1(U_2, U_{2h-2}) = (h-1)(6b-9e-4), h >= 2.
Int ext_space_dim_even(int h, const ScrollParams& p);
// e > 0: dim Ext^1(U_2, U_{2h-1}) = -chi(U_2 (x) U_{2h-1}^dual), h >= 2.
Int ext_dim_next_odd(int h, const ScrollParams& p);
Int ext_dim_next_odd_closed(int h, const ScrollParams& p);  // (h-2)(6b-9e-4) + 8b-12e+3
Int ext_dim_next_odd_riemann_roch(int h, const ScrollParams& p);

struct FamilyDescriptor {
    int r = 1;
    std::string parity;
    ScrollDivisor c1;
    Int chi_self = 0;
    Int moduli_dim = 0;
    Rational slope;
    Int chi_self_riemann_roch = 0;
    Int moduli_dim_riemann_roch = 0;
};

FamilyDescriptor family_descriptor(int r, const ScrollParams& p);

// Surface side: U_r = xi (x) phi^*(H_r (x) O(-c1 E)) with H_r Ulrich on F_e
// w.r.t. (3, b); c1(H_r) = (surface part of c1(U_r)) + r c1(E).
SurfaceDivisor scroll_to_surface_c1(int r, const ScrollParams& p);
SurfaceDivisor surface_c1_closed_form(int r, const ScrollParams& p);
// 1 - chi(H_r (x) H_r^dual) computed on F_e (Riemann-Roch pairing of Ulrich
// bundles); 0 for r = 1.
Int surface_moduli_dim(int r, const ScrollParams& p);

}  // namespace ulrich
