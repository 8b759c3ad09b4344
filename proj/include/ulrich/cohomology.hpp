// SPDX-License-Identifier: Apache-2.0
//
// Cohomology of symbolic bundle expressions on F_e and on the scroll X.
//
// Long exact sequences are not assumed to split: every extension node
// propagates per-degree intervals [lo, hi] over all admissible ranks of the
// connecting maps, and the exact Euler characteristic is carried alongside.
// Callers that only need "everything vanishes" or "something survives" read
// hi == 0 or lo > 0; anything else is reported as indeterminate.
#pragma once

#include "ulrich/scroll.hpp"

#include <array>
#include <memory>
#include <string>

namespace ulrich {

class BundleExpr {
public:
    enum class Kind {
        line,          // O(D) on F_e
        extension,     // 0 -> sub -> M -> quot -> 0 on F_e
        twisted_e,     // E (x) O(D)
        sym_square_e,  // S^2 E (x) O(D)
        ideal_twist,   // I_Z (x) O(D), Z general of the given length
        scroll_twist,  // O(a xi) (x) phi^*(surface expression) on X
    };

    static BundleExpr line(SurfaceDivisor d);
    // `locally_free` asserts that the middle term is a vector bundle even
    // when the quotient is an ideal twist (Serre-correspondence extensions).
    // Extensions of locally free sheaves are detected automatically.
    static BundleExpr extension(BundleExpr sub, BundleExpr quot, bool locally_free = false);
    static BundleExpr twisted_e(SurfaceDivisor d);
    static BundleExpr sym_square_e(SurfaceDivisor d);
    static BundleExpr ideal_twist(SurfaceDivisor d, Int length);
    static BundleExpr scroll_twist(Int a, BundleExpr surface_part);
    static BundleExpr scroll_line(Int a, SurfaceDivisor d);

    Kind kind() const;
    const SurfaceDivisor& divisor() const;  // line, twisted_e, sym_square_e, ideal_twist
    const Int& length() const;              // ideal_twist
    const Int& xi_power() const;            // scroll_twist
    const BundleExpr& sub() const;          // extension
    const BundleExpr& quot() const;         // extension
    const BundleExpr& inner() const;        // scroll_twist
    bool locally_free_flag() const;         // extension

    bool on_scroll() const { return kind() == Kind::scroll_twist; }
    std::string str() const;

private:
    struct Node;
    explicit BundleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Structural helpers for surface expressions.
Int rank_of(const BundleExpr& surface_expr);
bool is_locally_free(const BundleExpr& surface_expr);
SurfaceDivisor c1_of(const BundleExpr& surface_expr, const ScrollParams& p);
// V (x) O(D).
BundleExpr twist(const BundleExpr& surface_expr, const SurfaceDivisor& d);
// S^m E (x) V for m in {0, 1, 2}, written as a filtration by twists of V.
BundleExpr tensor_sym_power(int m, const BundleExpr& surface_expr, const ScrollParams& p);

struct CohInterval {
    std::array<Int, 4> lo{};
    std::array<Int, 4> hi{};
    Int chi = 0;

    static CohInterval exact(const CohVector& v);
    bool is_exact() const;
    bool all_zero() const;      // hi == 0 in every degree
    bool some_nonzero() const;  // lo > 0 in some degree
    // The exact value in degree i; throws std::logic_error when undetermined.
    Int value(int i) const;
    // Shift degrees up by one (Leray through R^1): h^i <- h^{i-1}.
    CohInterval shifted_up() const;
    std::string str() const;
    bool operator==(const CohInterval&) const = default;
};

// Interval propagation through 0 -> A -> M -> B -> 0, followed by tightening
// against the exact Euler characteristic.
CohInterval extension_interval(const CohInterval& sub, const CohInterval& quot);
// Sharpen each degree using chi and the other degrees' bounds (sound).
void tighten_with_chi(CohInterval& c);

struct EvalOptions {
    // For rank-2 locally free nodes M, intersect with the interval implied by
    // Serre duality h^i(M) = h^{2-i}(M (x) O(K - c1 M)), one level deep.
    bool rank2_duality = true;
};

CohInterval cohomology(const BundleExpr& expr, const ScrollParams& p, const EvalOptions& opts = {});
// Exact Euler characteristic; never refuses (the chi rule for ideal twists
// holds without any generic-position assumption).
Int euler_characteristic(const BundleExpr& expr, const ScrollParams& p);

// Generic ideal twist: h^0 = max(h^0(D) - l, 0), h^2 = h^2(D),
// chi = chi(D) - l. Refuses with ModelInapplicable unless h^1(D) = 0 or
// h^0(D) = 0.
CohVector cohomology_ideal_twist(const SurfaceDivisor& d, const Int& length, const SurfaceContext& ctx);

// Leray reduction of O(a xi + phi^*D) without building an expression tree;
// used by the exhaustive scans. Agrees with cohomology(scroll_line(a, D)).
CohInterval scroll_line_cohomology(const Int& a, const SurfaceDivisor& d, const ScrollParams& p);

// dim Ext^1(L, M) = h^1(X, M - L) as an interval.
CohInterval ext1_dim_lines(const ScrollDivisor& L, const ScrollDivisor& M, const ScrollParams& p);

// The rank-2 bundle on F_e obtained from a general Z of length 2b - 3e:
// 0 -> O(0,-1) -> H -> I_Z (x) O(1, b-1-e) -> 0.
BundleExpr rank2_surface_bundle(const ScrollParams& p);
// chi(H (x) H^dual) assembled from the two pieces of H^dual (x) [the
// sequence above]: chi(I_Z (x) H(0,1)) + chi(H(-1, 1+e-b)).
struct EndoChiParts {
    Int ideal_part;      // chi(I_Z (x) H(0,1)) = chi(H(0,1)) - 2 l
    Int extension_part;  // chi(H(-1, 1+e-b))
    Int total;
};
EndoChiParts chi_rank2_endo_parts(const ScrollParams& p);
Int chi_rank2_endo_surface(const ScrollParams& p);

}  // namespace ulrich
