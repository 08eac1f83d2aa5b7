#include "qwalk/elim.hpp"

#include <map>
#include <tuple>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// Sparse trivariate term list: (x exponent, y exponent, t exponent) -> coeff.
using Terms3 = std::map<std::tuple<long, long, long>, mpz_class>;

using PolyT = IntPoly;          // Z[t]
using PolyVT = Poly<PolyT>;     // Z[t][v]   (v = inner elimination variable)
using PolyWVT = Poly<PolyVT>;   // Z[t][v][w] (w = outer elimination variable)

// Assemble the term list as a polynomial in `outer` (x if x_outer else y),
// with coefficients in the other variable over Z[t].
PolyWVT assemble(const Terms3& terms, bool x_outer) {
    long dw = 0, dv = 0, dt = 0;
    for (const auto& [e, c] : terms) {
        long i = std::get<0>(e), j = std::get<1>(e), k = std::get<2>(e);
        long w = x_outer ? i : j, v = x_outer ? j : i;
        dw = std::max(dw, w);
        dv = std::max(dv, v);
        dt = std::max(dt, k);
    }
    std::vector<PolyVT> wc(static_cast<size_t>(dw) + 1);
    for (long w = 0; w <= dw; ++w) {
        std::vector<PolyT> vc(static_cast<size_t>(dv) + 1);
        for (long v = 0; v <= dv; ++v) {
            std::vector<mpz_class> tc(static_cast<size_t>(dt) + 1, 0);
            bool any = false;
            for (const auto& [e, c] : terms) {
                long i = std::get<0>(e), j = std::get<1>(e), k = std::get<2>(e);
                if ((x_outer ? i : j) == w && (x_outer ? j : i) == v) {
                    tc[static_cast<size_t>(k)] = c;
                    any = true;
                }
            }
            if (any) vc[static_cast<size_t>(v)] = PolyT(std::move(tc));
        }
        wc[static_cast<size_t>(w)] = PolyVT(std::move(vc));
    }
    return PolyWVT(std::move(wc));
}

Terms3 laurent_with_t_cleared(std::map<std::pair<long, long>, mpz_class> base,
                              const std::map<std::pair<long, long>, mpz_class>& tpart,
                              long tpow) {
    // base + t^tpow * tpart, with negative x/y exponents cleared jointly.
    long mi = 0, mj = 0;
    for (const auto& [e, c] : base) {
        mi = std::min(mi, e.first);
        mj = std::min(mj, e.second);
    }
    for (const auto& [e, c] : tpart) {
        mi = std::min(mi, e.first);
        mj = std::min(mj, e.second);
    }
    Terms3 out;
    for (const auto& [e, c] : base) out[{e.first - mi, e.second - mj, 0}] += c;
    for (const auto& [e, c] : tpart) out[{e.first - mi, e.second - mj, tpow}] += c;
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

Terms3 from_laurent(const LaurentPoly2& p) {
    Terms3 out;
    for (const auto& [e, c] : p.numerator_terms()) out[{e.first, e.second, 0}] = c;
    return out;
}

std::map<std::pair<long, long>, mpz_class> laurent_product(
    const std::map<std::pair<long, long>, mpz_class>& a,
    const std::map<std::pair<long, long>, mpz_class>& b) {
    std::map<std::pair<long, long>, mpz_class> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    return out;
}

inline bool is_scalar(const mpz_class&) { return true; }
template <class R>
bool is_scalar(const Poly<R>& p) {
    return p.degree() < 0 || (p.degree() == 0 && is_scalar(p.lc()));
}

// One elimination level. When an operand does not involve the eliminated
// variable it already lives in the subring and survives as its own
// constraint; a blind resultant of two constant polynomials would be 1
// and lose the t-dependence. p is checked first since it carries t.
//
// A common zero escapes the resultant only when both leading coefficients
// vanish under specialization. Adjoining one operand's leading coefficient
// as an extra factor closes that gap: if it vanishes at the point the
// factor does, and if not the degree is preserved and the resultant
// specializes to (a unit times) the resultant of the specialized pair,
// which vanishes at the common zero. Spurious roots are discarded later
// by certified root matching. Only f's lc is adjoined; p is shared
// between the two elimination branches and a shared factor would make
// the outer resultant vanish identically.
template <class L>
L elim_step(const Poly<L>& f, const Poly<L>& p) {
    if (p.degree() == 0) return p.lc();
    if (f.degree() == 0) return f.lc();
    L r = resultant(f, p);
    if (ring::is_zero(r) || is_scalar(f.lc())) return r;
    return r * f.lc();
}

IntPoly content_vt(const PolyVT& p) {
    IntPoly g;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) g = gcd(g, c);
    return g;
}

PolyVT primitive_vt(const PolyVT& p) {
    if (p.is_zero()) return p;
    IntPoly g = content_vt(p);
    if (g.degree() == 0 && g.lc() == 1) return p;
    std::vector<IntPoly> c(p.coeffs());
    for (auto& x : c)
        if (!x.is_zero()) x = ring::divexact(x, g);
    return PolyVT(std::move(c));
}

// Primitive PRS gcd over Z[t][v]; the content gcd is dropped (the callers
// only ever need the part that is nonconstant in v).
PolyVT gcd_vt(PolyVT a, PolyVT b) {
    a = primitive_vt(a);
    b = primitive_vt(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyVT r = primitive_vt(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// The cleared numerators can pick up a pure power of the remaining
// variable; its zero locus (x = 0 or y = 0) cannot hold the critical
// point, which is strictly positive, but as a factor shared by both
// intermediate resultants it would annihilate the outer resultant.
PolyVT strip_var_power(PolyVT r) {
    int val = 0;
    while (val <= r.degree() && r.coeff(val).is_zero()) ++val;
    if (val == 0 || r.is_zero()) return r;
    std::vector<IntPoly> c(r.coeffs().begin() + val, r.coeffs().end());
    return PolyVT(std::move(c));
}

// E(t) = Res_second(Res_first(A, P), Res_first(B, P)). The generic
// resultant always eliminates the outermost nesting level, so choosing
// x_outer selects which variable goes first. With pair_with_critical the
// second operand of the outer resultant is Res_first(A, B) instead, which
// is free of t; that sidesteps step sets symmetric under x <-> y, where
// the two partial resultants share a factor and their resultant vanishes
// identically. use_b swaps which partial carries t in that mode.
IntPoly double_resultant(const Terms3& a, const Terms3& b, const Terms3& p,
                         bool x_outer, bool pair_with_critical = false,
                         bool use_b = false) {
    PolyWVT A = assemble(a, x_outer);
    PolyWVT B = assemble(b, x_outer);
    PolyWVT P = assemble(p, x_outer);
    if (A.is_zero() || B.is_zero() || P.is_zero()) return IntPoly();
    PolyVT r1 = strip_var_power(elim_step(use_b ? B : A, P));
    PolyVT r2 = strip_var_power(elim_step(use_b ? A : B, P));
    if (r1.is_zero() || r2.is_zero()) return IntPoly();
    if (!pair_with_critical) return elim_step(r1, r2);  // in Z[t]
    PolyVT D = strip_var_power(elim_step(A, B));  // free of t
    if (D.is_zero()) return IntPoly();
    // r1 may share a t-free factor g with D. Split it off: at the common
    // zero either g vanishes, and then r2 still ties the zero to t, or the
    // cofactor does and the resultant with D covers it. The product of the
    // two branch eliminants annihilates t either way.
    IntPoly acc{std::vector<mpz_class>{1}};
    while (true) {
        IntPoly e = elim_step(r1, D);
        if (!ring::is_zero(e)) return acc * e;
        PolyVT g = gcd_vt(r1, D);
        if (g.degree() <= 0) return IntPoly();
        r1 = ring::divexact(r1, g);
        IntPoly e2 = elim_step(g, r2);
        if (ring::is_zero(e2) || r1.is_zero()) return IntPoly();
        acc = acc * e2;
    }
}

IntPoly finalize(IntPoly e, std::string* provenance) {
    if (e.is_zero()) return e;
    // Reduce a pure power of t to multiplicity one (t = 0 may be a genuine
    // root of the c eliminant; squarefree_part needs multiplicity 1 anyway).
    int val = 0;
    while (sgn(e.coeff(val)) == 0) ++val;
    if (val > 1) {
        std::vector<mpz_class> c(e.coeffs().begin() + (val - 1), e.coeffs().end());
        e = IntPoly(std::move(c));
        *provenance += "; reduced t^" + std::to_string(val) + " to t";
    }
    if (e.degree() == 0) return IntPoly();
    mpz_class cont = content(e);
    if (cont != 1) *provenance += "; stripped content " + cont.get_str();
    return squarefree_part(e);
}

// Substitute y = x: (i, j, k) collapses to coefficient of x^(i+j) t^k.
PolyVT restrict_diagonal(const Terms3& terms) {
    long dv = 0, dt = 0;
    for (const auto& [e, c] : terms) {
        dv = std::max(dv, std::get<0>(e) + std::get<1>(e));
        dt = std::max(dt, std::get<2>(e));
    }
    std::vector<std::vector<mpz_class>> tc(
        static_cast<size_t>(dv) + 1,
        std::vector<mpz_class>(static_cast<size_t>(dt) + 1, 0));
    for (const auto& [e, c] : terms)
        tc[static_cast<size_t>(std::get<0>(e) + std::get<1>(e))]
          [static_cast<size_t>(std::get<2>(e))] += c;
    std::vector<PolyT> vc;
    vc.reserve(tc.size());
    for (auto& row : tc) vc.emplace_back(std::move(row));
    return PolyVT(std::move(vc));
}

Eliminant eliminate(const StepSet& s, const Terms3& ptarget, ElimTarget target) {
    if (is_half_plane_confined(s))
        throw HalfPlaneConfined("eliminant: step set confined to a half-plane");
    LaurentPoly2 chi = char_poly(s);
    Terms3 a = from_laurent(chi.dx());
    Terms3 b = from_laurent(chi.dy());
    if (s == s.transposed()) {
        // Symmetric step set: the positive critical point is unique, so it
        // lies on the diagonal x = y and one univariate resultant suffices.
        // This also sidesteps the x <-> y symmetry of the full system,
        // under which the two partial resultants share a factor and the
        // double resultant often vanishes identically.
        PolyVT U = strip_var_power(restrict_diagonal(a));
        PolyVT V = strip_var_power(restrict_diagonal(ptarget));
        if (!U.is_zero() && !V.is_zero()) {
            std::string prov = "restricted to the diagonal x = y";
            IntPoly e = finalize(elim_step(U, V), &prov);
            if (!e.is_zero() && e.degree() > 0) return {e, target, prov};
        }
    }
    for (bool pair_crit : {false, true}) {
        for (bool x_outer : {false, true}) {
            for (bool use_b : {false, true}) {
                std::string prov = x_outer ? "order: eliminate x then y"
                                           : "order: eliminate y then x";
                if (pair_crit)
                    prov += use_b ? "; paired chi_y with the critical resultant"
                                  : "; paired chi_x with the critical resultant";
                IntPoly e = finalize(
                    double_resultant(a, b, ptarget, x_outer, pair_crit, use_b),
                    &prov);
                if (!e.is_zero() && e.degree() > 0) return {e, target, prov};
                if (!pair_crit) break;  // use_b is symmetric without pairing
            }
        }
    }
    throw DegenerateElimination(
        "eliminant: double resultant vanishes under every elimination order");
}

}  // namespace

Eliminant eliminant_rho(const StepSet& s) {
    LaurentPoly2 chi = char_poly(s);
    // numer(t - chi): t * x^a y^b - x^a y^b * chi
    std::map<std::pair<long, long>, mpz_class> neg_chi;
    for (const auto& [e, c] : chi.terms()) neg_chi[e] = -c;
    std::map<std::pair<long, long>, mpz_class> tmon{{{0, 0}, mpz_class(1)}};
    Terms3 pt = laurent_with_t_cleared(neg_chi, tmon, 1);
    return eliminate(s, pt, ElimTarget::rho);
}

Eliminant eliminant_c(const StepSet& s) {
    LaurentPoly2 chi = char_poly(s);
    LaurentPoly2 cxx = chi.dx().dx(), cxy = chi.dx().dy(), cyy = chi.dy().dy();
    if (cxx.is_zero() || cyy.is_zero())
        throw ZeroHessianTerm("eliminant_c: a pure second partial is identically zero");
    // numer(t^2 - cxy^2/(cxx*cyy)) = t^2 * cxx * cyy - cxy^2, cleared.
    auto prod = laurent_product(cxx.terms(), cyy.terms());
    auto cxy2 = laurent_product(cxy.terms(), cxy.terms());
    for (auto& [e, c] : cxy2) c = -c;
    Terms3 pc = laurent_with_t_cleared(cxy2, prod, 2);
    return eliminate(s, pc, ElimTarget::c);
}

}  // namespace qwalk
