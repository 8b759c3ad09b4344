// SPDX-License-Identifier: Apache-2.0
#include "ulrich/cohomology.hpp"

#include "ulrich/errors.hpp"

#include <stdexcept>
#include <vector>

namespace ulrich {

struct BundleExpr::Node {
    Kind kind;
    SurfaceDivisor d;
    Int a = 0;
    Int length = 0;
    bool locally_free = false;
    std::vector<BundleExpr> children;  // extension: {sub, quot}; scroll_twist: {inner}

    explicit Node(Kind k, SurfaceDivisor divisor = {}) : kind(k), d(std::move(divisor)) {}
};

BundleExpr BundleExpr::line(SurfaceDivisor d) {
    return BundleExpr(std::make_shared<const Node>(Kind::line, std::move(d)));
}

BundleExpr BundleExpr::extension(BundleExpr sub, BundleExpr quot, bool locally_free) {
    if (sub.on_scroll() || quot.on_scroll()) {
        throw std::invalid_argument("extension nodes are formed on F_e; twist by xi afterwards");
    }
    Node n(Kind::extension);
    n.locally_free = locally_free;
    n.children = {std::move(sub), std::move(quot)};
    return BundleExpr(std::make_shared<const Node>(std::move(n)));
}

BundleExpr BundleExpr::twisted_e(SurfaceDivisor d) {
    return BundleExpr(std::make_shared<const Node>(Kind::twisted_e, std::move(d)));
}

BundleExpr BundleExpr::sym_square_e(SurfaceDivisor d) {
    return BundleExpr(std::make_shared<const Node>(Kind::sym_square_e, std::move(d)));
}

BundleExpr BundleExpr::ideal_twist(SurfaceDivisor d, Int length) {
    if (length < 0) throw std::invalid_argument("ideal twist length must be non-negative");
    Node n(Kind::ideal_twist, std::move(d));
    n.length = std::move(length);
    return BundleExpr(std::make_shared<const Node>(std::move(n)));
}

BundleExpr BundleExpr::scroll_twist(Int a, BundleExpr surface_part) {
    if (surface_part.on_scroll()) throw std::invalid_argument("scroll twists do not nest");
    Node n(Kind::scroll_twist);
    n.a = std::move(a);
    n.children = {std::move(surface_part)};
    return BundleExpr(std::make_shared<const Node>(std::move(n)));
}

BundleExpr BundleExpr::scroll_line(Int a, SurfaceDivisor d) {
    return scroll_twist(std::move(a), line(std::move(d)));
}

BundleExpr::Kind BundleExpr::kind() const { return node_->kind; }
const SurfaceDivisor& BundleExpr::divisor() const { return node_->d; }
const Int& BundleExpr::length() const { return node_->length; }
const Int& BundleExpr::xi_power() const { return node_->a; }
bool BundleExpr::locally_free_flag() const { return node_->locally_free; }

const BundleExpr& BundleExpr::sub() const {
    if (kind() != Kind::extension) throw std::logic_error("sub() on a non-extension node");
    return node_->children[0];
}

const BundleExpr& BundleExpr::quot() const {
    if (kind() != Kind::extension) throw std::logic_error("quot() on a non-extension node");
    return node_->children[1];
}

const BundleExpr& BundleExpr::inner() const {
    if (kind() != Kind::scroll_twist) throw std::logic_error("inner() on a non-scroll node");
    return node_->children[0];
}

std::string BundleExpr::str() const {
    const auto d = [&] { return divisor().alpha.str() + "," + divisor().beta.str(); };
    switch (kind()) {
        case Kind::line: return "L(" + d() + ")";
        case Kind::twisted_e: return "E(" + d() + ")";
        case Kind::sym_square_e: return "S2E(" + d() + ")";
        case Kind::ideal_twist: return "IZ(" + d() + ";" + length().str() + ")";
        case Kind::extension: return "Ext[" + sub().str() + " -> " + quot().str() + "]";
        case Kind::scroll_twist: return "xi^" + xi_power().str() + "*" + inner().str();
    }
    return "?";
}

Int rank_of(const BundleExpr& x) {
    switch (x.kind()) {
        case BundleExpr::Kind::line:
        case BundleExpr::Kind::ideal_twist: return 1;
        case BundleExpr::Kind::twisted_e: return 2;
        case BundleExpr::Kind::sym_square_e: return 3;
        case BundleExpr::Kind::extension: return rank_of(x.sub()) + rank_of(x.quot());
        case BundleExpr::Kind::scroll_twist: return rank_of(x.inner());
    }
    return 0;
}

bool is_locally_free(const BundleExpr& x) {
    switch (x.kind()) {
        case BundleExpr::Kind::line:
        case BundleExpr::Kind::twisted_e:
        case BundleExpr::Kind::sym_square_e: return true;
        case BundleExpr::Kind::ideal_twist: return x.length() == 0;
        case BundleExpr::Kind::extension:
            return x.locally_free_flag() || (is_locally_free(x.sub()) && is_locally_free(x.quot()));
        case BundleExpr::Kind::scroll_twist: return is_locally_free(x.inner());
    }
    return false;
}

SurfaceDivisor c1_of(const BundleExpr& x, const ScrollParams& p) {
    switch (x.kind()) {
        case BundleExpr::Kind::line:
        case BundleExpr::Kind::ideal_twist: return x.divisor();
        case BundleExpr::Kind::twisted_e: return p.c1E() + Int(2) * x.divisor();
        case BundleExpr::Kind::sym_square_e: return Int(3) * p.c1E() + Int(3) * x.divisor();
        case BundleExpr::Kind::extension: return c1_of(x.sub(), p) + c1_of(x.quot(), p);
        case BundleExpr::Kind::scroll_twist: break;
    }
    throw std::invalid_argument("c1_of expects a surface expression");
}

BundleExpr twist(const BundleExpr& x, const SurfaceDivisor& d) {
    switch (x.kind()) {
        case BundleExpr::Kind::line: return BundleExpr::line(x.divisor() + d);
        case BundleExpr::Kind::twisted_e: return BundleExpr::twisted_e(x.divisor() + d);
        case BundleExpr::Kind::sym_square_e: return BundleExpr::sym_square_e(x.divisor() + d);
        case BundleExpr::Kind::ideal_twist: return BundleExpr::ideal_twist(x.divisor() + d, x.length());
        case BundleExpr::Kind::extension:
            return BundleExpr::extension(twist(x.sub(), d), twist(x.quot(), d), x.locally_free_flag());
        case BundleExpr::Kind::scroll_twist: break;
    }
    throw std::invalid_argument("twist expects a surface expression");
}

BundleExpr tensor_sym_power(int m, const BundleExpr& x, const ScrollParams& p) {
    const SurfaceDivisor A = p.A();
    const SurfaceDivisor B = p.B();
    const bool lf = is_locally_free(x);
    switch (m) {
        case 0: return x;
        case 1:
            if (x.kind() == BundleExpr::Kind::line) return BundleExpr::twisted_e(x.divisor());
            return BundleExpr::extension(twist(x, A), twist(x, B), lf);
        case 2:
            if (x.kind() == BundleExpr::Kind::line) return BundleExpr::sym_square_e(x.divisor());
            // Filtration quotients of S^2 E: 2A, A+B, 2B.
            return BundleExpr::extension(
                BundleExpr::extension(twist(x, Int(2) * A), twist(x, A + B), lf), twist(x, Int(2) * B), lf);
        default: break;
    }
    throw ScopeError("only S^0, S^1 and S^2 of E are supported (got S^" + std::to_string(m) + ")");
}

// ---------------------------------------------------------------------------
// Intervals

CohInterval CohInterval::exact(const CohVector& v) {
    CohInterval c;
    c.lo = {v.h0, v.h1, v.h2, Int(0)};
    c.hi = c.lo;
    c.chi = v.chi();
    return c;
}

bool CohInterval::is_exact() const { return lo == hi; }

bool CohInterval::all_zero() const {
    for (const auto& h : hi)
        if (h != 0) return false;
    return true;
}

bool CohInterval::some_nonzero() const {
    for (const auto& l : lo)
        if (l > 0) return true;
    return false;
}

Int CohInterval::value(int i) const {
    if (lo[i] != hi[i]) {
        throw std::logic_error("h^" + std::to_string(i) + " is undetermined: " + lo[i].str() + ".." + hi[i].str());
    }
    return lo[i];
}

CohInterval CohInterval::shifted_up() const {
    if (lo[3] != 0 || hi[3] != 0) throw std::logic_error("cannot shift a class with h^3 != 0");
    CohInterval c;
    for (int i = 3; i >= 1; --i) {
        c.lo[i] = lo[i - 1];
        c.hi[i] = hi[i - 1];
    }
    c.chi = -chi;
    return c;
}

std::string CohInterval::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += lo[i] == hi[i] ? lo[i].str() : lo[i].str() + ".." + hi[i].str();
    }
    return s + ")";
}

void tighten_with_chi(CohInterval& c) {
    static const int sign[4] = {1, -1, 1, -1};
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < 4; ++i) {
            // sign_i x_i = chi - sum_{j != i} sign_j x_j.
            Int rmin = c.chi, rmax = c.chi;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                if (sign[j] > 0) {
                    rmin -= c.hi[j];
                    rmax -= c.lo[j];
                } else {
                    rmin += c.lo[j];
                    rmax += c.hi[j];
                }
            }
            Int lo = sign[i] > 0 ? rmin : -rmax;
            Int hi = sign[i] > 0 ? rmax : -rmin;
            if (lo > c.lo[i]) {
                c.lo[i] = lo;
                changed = true;
            }
            if (hi < c.hi[i]) {
                c.hi[i] = hi;
                changed = true;
            }
            if (c.lo[i] > c.hi[i]) throw std::logic_error("inconsistent cohomology interval " + c.str());
        }
    }
}

CohInterval extension_interval(const CohInterval& a, const CohInterval& b) {
    // h^i(M) = (h^i(A) - r_{i-1}) + (h^i(B) - r_i) with r_i the rank of the
    // connecting map H^i(B) -> H^{i+1}(A), 0 <= r_i <= min(h^i B, h^{i+1} A).
    CohInterval m;
    for (int i = 0; i < 4; ++i) {
        const Int cut_a = i > 0 ? b.hi[i - 1] : Int(0);
        const Int cut_b = i < 3 ? a.hi[i + 1] : Int(0);
        m.lo[i] = max0(a.lo[i] - cut_a) + max0(b.lo[i] - cut_b);
        m.hi[i] = a.hi[i] + b.hi[i];
    }
    m.chi = a.chi + b.chi;
    tighten_with_chi(m);
    return m;
}

// ---------------------------------------------------------------------------
// Evaluation

CohVector cohomology_ideal_twist(const SurfaceDivisor& d, const Int& length, const SurfaceContext& ctx) {
    if (length < 0) throw std::invalid_argument("ideal twist length must be non-negative");
    const CohVector base = cohomology_line(d, ctx);
    if (length == 0) return base;
    if (base.h0 > 0 && base.h1 > 0) {
        throw ModelInapplicable("generic ideal-twist model needs h^1(D) = 0 or h^0(D) = 0; D = " + d.str() +
                                " has h^0 = " + base.h0.str() + ", h^1 = " + base.h1.str());
    }
    CohVector out;
    out.h0 = max0(base.h0 - length);
    out.h2 = base.h2;
    const Int chi = base.chi() - length;
    out.h1 = out.h0 + out.h2 - chi;
    return out;
}

namespace {

CohInterval eval_surface(const BundleExpr& x, const ScrollParams& p, const EvalOptions& opts);

CohInterval duality_refine(const BundleExpr& x, CohInterval c, const ScrollParams& p) {
    const SurfaceContext ctx = p.surface();
    const BundleExpr dual = twist(x, canonical_surface(ctx) - c1_of(x, p));
    const CohInterval d = eval_surface(dual, p, EvalOptions{false});
    for (int i = 0; i <= 2; ++i) {
        if (d.lo[2 - i] > c.lo[i]) c.lo[i] = d.lo[2 - i];
        if (d.hi[2 - i] < c.hi[i]) c.hi[i] = d.hi[2 - i];
    }
    tighten_with_chi(c);
    return c;
}

CohInterval eval_surface(const BundleExpr& x, const ScrollParams& p, const EvalOptions& opts) {
    const SurfaceContext ctx = p.surface();
    switch (x.kind()) {
        case BundleExpr::Kind::line: return CohInterval::exact(cohomology_line(x.divisor(), ctx));
        case BundleExpr::Kind::ideal_twist:
            return CohInterval::exact(cohomology_ideal_twist(x.divisor(), x.length(), ctx));
        case BundleExpr::Kind::twisted_e: {
            const BundleExpr A = BundleExpr::line(p.A() + x.divisor());
            const BundleExpr B = BundleExpr::line(p.B() + x.divisor());
            return eval_surface(BundleExpr::extension(A, B), p, opts);
        }
        case BundleExpr::Kind::sym_square_e: {
            const SurfaceDivisor& D = x.divisor();
            const BundleExpr f1 = BundleExpr::extension(BundleExpr::line(Int(2) * p.A() + D),
                                                        BundleExpr::line(p.A() + p.B() + D));
            return eval_surface(BundleExpr::extension(f1, BundleExpr::line(Int(2) * p.B() + D)), p, opts);
        }
        case BundleExpr::Kind::extension: {
            CohInterval c = extension_interval(eval_surface(x.sub(), p, opts), eval_surface(x.quot(), p, opts));
            if (opts.rank2_duality && !c.is_exact() && rank_of(x) == 2 && is_locally_free(x)) {
                c = duality_refine(x, c, p);
            }
            return c;
        }
        case BundleExpr::Kind::scroll_twist: break;
    }
    throw std::logic_error("eval_surface reached a scroll node");
}

// Leray: returns the surface expression and whether degrees shift by one,
// or nullopt-like (acyclic) for a = -1.
struct LerayImage {
    bool acyclic = false;
    bool shift = false;
    BundleExpr surface = BundleExpr::line({});
};

LerayImage leray(const Int& a, const BundleExpr& v, const ScrollParams& p) {
    LerayImage out;
    if (a >= 0 && a <= 2) {
        out.surface = tensor_sym_power(static_cast<int>(a), v, p);
    } else if (a == -1) {
        out.acyclic = true;
    } else if (a <= -2 && a >= -4) {
        // R^1 phi_* O(a xi) = S^m E (x) det(E)^{-m-1}, m = -a - 2.
        const int m = static_cast<int>(-a - 2);
        out.surface = tensor_sym_power(m, twist(v, Int(-(m + 1)) * p.c1E()), p);
        out.shift = true;
    } else {
        throw ScopeError("xi-twists outside [-4, 2] need S^m E with m > 2, which is not supported (a = " +
                         a.str() + ")");
    }
    return out;
}

}  // namespace

CohInterval cohomology(const BundleExpr& x, const ScrollParams& p, const EvalOptions& opts) {
    require_valid(p);
    if (!x.on_scroll()) return eval_surface(x, p, opts);
    const LerayImage img = leray(x.xi_power(), x.inner(), p);
    if (img.acyclic) return CohInterval{};
    const CohInterval c = eval_surface(img.surface, p, opts);
    return img.shift ? c.shifted_up() : c;
}

Int euler_characteristic(const BundleExpr& x, const ScrollParams& p) {
    const SurfaceContext ctx = p.surface();
    switch (x.kind()) {
        case BundleExpr::Kind::line: return chi_line(x.divisor(), ctx);
        case BundleExpr::Kind::ideal_twist: return chi_line(x.divisor(), ctx) - x.length();
        case BundleExpr::Kind::twisted_e:
            return chi_line(p.A() + x.divisor(), ctx) + chi_line(p.B() + x.divisor(), ctx);
        case BundleExpr::Kind::sym_square_e: {
            const SurfaceDivisor& D = x.divisor();
            return chi_line(Int(2) * p.A() + D, ctx) + chi_line(p.A() + p.B() + D, ctx) +
                   chi_line(Int(2) * p.B() + D, ctx);
        }
        case BundleExpr::Kind::extension: return euler_characteristic(x.sub(), p) + euler_characteristic(x.quot(), p);
        case BundleExpr::Kind::scroll_twist: {
            const LerayImage img = leray(x.xi_power(), x.inner(), p);
            if (img.acyclic) return 0;
            const Int c = euler_characteristic(img.surface, p);
            return img.shift ? Int(-c) : c;
        }
    }
    return 0;
}

CohInterval scroll_line_cohomology(const Int& a, const SurfaceDivisor& d, const ScrollParams& p) {
    const SurfaceContext ctx = p.surface();
    const SurfaceDivisor A = p.A();
    const SurfaceDivisor B = p.B();
    const auto line = [&](const SurfaceDivisor& x) { return CohInterval::exact(cohomology_line(x, ctx)); };
    const auto e_twist = [&](const SurfaceDivisor& x) { return extension_interval(line(A + x), line(B + x)); };
    const auto s2_twist = [&](const SurfaceDivisor& x) {
        return extension_interval(extension_interval(line(Int(2) * A + x), line(A + B + x)), line(Int(2) * B + x));
    };
    if (a == 0) return line(d);
    if (a == 1) return e_twist(d);
    if (a == 2) return s2_twist(d);
    if (a == -1) return CohInterval{};
    if (a == -2) return line(d - p.c1E()).shifted_up();
    if (a == -3) return e_twist(d - Int(2) * p.c1E()).shifted_up();
    if (a == -4) return s2_twist(d - Int(3) * p.c1E()).shifted_up();
    throw ScopeError("xi-twists outside [-4, 2] are not supported (a = " + a.str() + ")");
}

CohInterval ext1_dim_lines(const ScrollDivisor& L, const ScrollDivisor& M, const ScrollParams& p) {
    const ScrollDivisor diff = M - L;
    return cohomology(BundleExpr::scroll_line(diff.a, diff.D), p);
}

BundleExpr rank2_surface_bundle(const ScrollParams& p) {
    const Int length = 2 * p.b - 3 * p.e;
    return BundleExpr::extension(BundleExpr::line({Int(0), Int(-1)}),
                                 BundleExpr::ideal_twist({Int(1), p.b - 1 - p.e}, length),
                                 /*locally_free=*/true);
}

EndoChiParts chi_rank2_endo_parts(const ScrollParams& p) {
    require_valid(p);
    const Int length = 2 * p.b - 3 * p.e;
    const BundleExpr H = rank2_surface_bundle(p);
    EndoChiParts parts;
    // H^dual = H(-c1 H); tensoring the defining sequence of H with H^dual
    // gives H^dual(0,-1) -> H (x) H^dual -> I_Z (x) H^dual(1, b-1-e).
    parts.ideal_part = euler_characteristic(twist(H, {Int(0), Int(1)}), p) - rank_of(H) * length;
    parts.extension_part = euler_characteristic(twist(H, {Int(-1), 1 + p.e - p.b}), p);
    parts.total = parts.ideal_part + parts.extension_part;
    return parts;
}

Int chi_rank2_endo_surface(const ScrollParams& p) { return chi_rank2_endo_parts(p).total; }

}  // namespace ulrich
