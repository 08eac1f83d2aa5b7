#include "qwalk/numsolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>

#include "qwalk/errors.hpp"

namespace qwalk {

mpfr_prec_t precision_cap() {
    if (const char* env = std::getenv("QWALK_PRECISION_CAP")) {
        long v = std::atol(env);
        if (v >= 64) return static_cast<mpfr_prec_t>(v);
    }
    return kDefaultPrecCap;
}

Interval eval_intpoly(const IntPoly& p, const Interval& x) {
    Interval acc(x.prec());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + Interval(mpq_class(p.coeff(i)), x.prec());
    return acc;
}

Interval eval_bipoly(const BiPoly& p, const Interval& x, const Interval& y) {
    Interval acc(std::max(x.prec(), y.prec()));
    for (int j = p.degree(); j >= 0; --j)
        acc = acc * y + eval_intpoly(p.coeff(j), x);
    return acc;
}

Interval eval_laurent(const LaurentPoly2& p, const Interval& x, const Interval& y) {
    Interval acc(std::max(x.prec(), y.prec()));
    for (const auto& [e, c] : p.terms()) {
        Interval term = Interval(mpq_class(c), acc.prec());
        if (e.first != 0) term = term * x.pow(e.first);
        if (e.second != 0) term = term * y.pow(e.second);
        acc = acc + term;
    }
    return acc;
}

AlgebraicNumber AlgebraicNumber::refined(const mpq_class& max_width) const {
    RootInterval r = refine_root(annihilator, {lo, hi}, max_width);
    return {annihilator, r.lo, r.hi};
}

Interval AlgebraicNumber::to_interval(mpfr_prec_t prec) const {
    return Interval(lo, hi, prec);
}

namespace {

// Double-precision Newton on the convex map (u,v) -> chi(e^u, e^v),
// seeded at the origin, with step halving on gradient-norm increase.
std::pair<double, double> newton_seed(const StepSet& s) {
    auto grad = [&](double u, double v, double* g, double* h) {
        g[0] = g[1] = 0;
        if (h) h[0] = h[1] = h[2] = 0;
        for (const auto& st : s.steps()) {
            double w = std::exp(st.dx * u + st.dy * v);
            g[0] += st.dx * w;
            g[1] += st.dy * w;
            if (h) {
                h[0] += st.dx * st.dx * w;
                h[1] += st.dx * st.dy * w;
                h[2] += st.dy * st.dy * w;
            }
        }
    };
    double u = 0, v = 0;
    double g[2], h[3];
    for (int it = 0; it < 200; ++it) {
        grad(u, v, g, h);
        double norm = std::hypot(g[0], g[1]);
        if (norm < 1e-14) break;
        double det = h[0] * h[2] - h[1] * h[1];
        if (det <= 0) throw PrecisionExhausted("newton_seed: singular Hessian");
        double du = -(h[2] * g[0] - h[1] * g[1]) / det;
        double dv = -(-h[1] * g[0] + h[0] * g[1]) / det;
        double step = 1.0;
        for (int k = 0; k < 60; ++k) {
            double g2[2];
            grad(u + step * du, v + step * dv, g2, nullptr);
            if (std::hypot(g2[0], g2[1]) < norm) break;
            step /= 2;
        }
        u += step * du;
        v += step * dv;
    }
    return {u, v};
}

struct Box {
    Interval x, y;
};

// One interval Newton step for the system (chi_x, chi_y) = 0 on box B.
// Returns the contracted box and sets *contracts when K(B) is strictly
// inside B.
Box newton_step(const Partials& P, const Box& B, mpfr_prec_t prec,
                bool* contracts) {
    BiPoly fx = P.chi_x, fy = P.chi_y;
    // Jacobian entries over the whole box.
    auto dx_of = [](const BiPoly& p) {
        std::vector<IntPoly> c;
        c.reserve(static_cast<size_t>(p.degree()) + 1);
        for (int j = 0; j <= p.degree(); ++j) c.push_back(p.coeff(j).derivative());
        return BiPoly(std::move(c));
    };
    Interval j11 = eval_bipoly(dx_of(fx), B.x, B.y);
    Interval j12 = eval_bipoly(fx.derivative(), B.x, B.y);
    Interval j21 = eval_bipoly(dx_of(fy), B.x, B.y);
    Interval j22 = eval_bipoly(fy.derivative(), B.x, B.y);
    Interval det = j11 * j22 - j12 * j21;
    if (det.contains_zero())
        throw PrecisionExhausted("interval Newton: Jacobian may be singular");

    Interval mx(B.x.mid_q(), prec), my(B.y.mid_q(), prec);
    Interval f1 = eval_bipoly(fx, mx, my);
    Interval f2 = eval_bipoly(fy, mx, my);
    Interval dxn = (j22 * f1 - j12 * f2) / det;
    Interval dyn = (j11 * f2 - j21 * f1) / det;
    Box K{mx - dxn, my - dyn};
    *contracts = K.x.strictly_inside(B.x) && K.y.strictly_inside(B.y);
    Box out;
    if (!K.x.intersect(B.x, &out.x) || !K.y.intersect(B.y, &out.y))
        throw PrecisionExhausted("interval Newton: empty intersection");
    return out;
}

}  // namespace

CriticalPoint solve_critical_point(const StepSet& s, mpfr_prec_t bits) {
    if (is_half_plane_confined(s))
        throw HalfPlaneConfined("solve_critical_point: step set confined to a half-plane");
    auto [u, v] = newton_seed(s);
    double x_hat = std::exp(u), y_hat = std::exp(v);
    Partials P = partials(char_poly(s));

    double target_width = std::ldexp(1.0, static_cast<int>(-bits / 2));
    for (double delta = 1e-8; delta < 0.5; delta *= 1e4) {
        mpq_class qx(x_hat), qy(y_hat), qd(delta);
        Box B{Interval(qx - qd, qx + qd, bits), Interval(qy - qd, qy + qd, bits)};
        bool certified = false;
        try {
            for (int it = 0; it < 2000; ++it) {
                bool contracts = false;
                Box Bn = newton_step(P, B, bits, &contracts);
                certified = certified || contracts;
                bool done = certified && Bn.x.width() <= target_width &&
                            Bn.y.width() <= target_width;
                bool stalled = !contracts && Bn.x.width() >= B.x.width() &&
                               Bn.y.width() >= B.y.width() && it > 4;
                B = Bn;
                if (done) return {B.x, B.y, true};
                if (stalled) break;
            }
        } catch (const PrecisionExhausted&) {
            // widen / retry
        }
    }
    throw PrecisionExhausted("solve_critical_point: certification failed at " +
                             std::to_string(bits) + " bits");
}

Interval eval_rho(const StepSet& s, const CriticalPoint& cp) {
    return eval_laurent(char_poly(s), cp.x0, cp.y0);
}

Interval eval_c(const StepSet& s, const CriticalPoint& cp) {
    Partials P = partials(char_poly(s));
    Interval num = eval_laurent(P.chi_xy, cp.x0, cp.y0);
    Interval dxx = eval_laurent(P.chi_xx, cp.x0, cp.y0);
    Interval dyy = eval_laurent(P.chi_yy, cp.x0, cp.y0);
    if (dxx.contains_zero() || dyy.contains_zero())
        throw ZeroHessianTerm("eval_c: pure second partial not bounded away from 0");
    Interval c = num / (dxx * dyy).sqrt();
    Interval clamp = Interval(-1, 1, c.prec());
    Interval out(c.prec());
    if (!c.intersect(clamp, &out))
        throw DomainError("eval_c: enclosure disjoint from [-1,1]");
    return out;
}

Interval alpha_from_c(const Interval& c) {
    Interval ac = (-c).acos();
    if (ac.contains_zero())
        throw DomainError("alpha_from_c: arccos(-c) not bounded away from 0");
    Interval pi = Interval::pi(c.prec());
    Interval one = Interval::point(1, c.prec());
    return -(one + pi / ac);
}

namespace {

// Number of sign variations in the coefficients of (x+1)^n p(1/(x+1)),
// the Descartes test for the open interval (0,1).
int variations_01(const IntPoly& p) {
    int n = p.degree();
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = p.coeff(n - i);
    // Taylor shift by 1 in place.
    for (int i = 0; i <= n; ++i)
        for (int j = n - 1; j >= i; --j)
            c[static_cast<size_t>(j)] += c[static_cast<size_t>(j) + 1];
    int var = 0, last = 0;
    for (const auto& x : c) {
        int sg = sgn(x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++var;
        last = sg;
    }
    return var;
}

IntPoly half_left(const IntPoly& p) {  // 2^n p(x/2)
    int n = p.degree();
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned>(n - i));
        c[static_cast<size_t>(i)] = p.coeff(i) * f;
    }
    return IntPoly(std::move(c));
}

IntPoly taylor_shift_1(const IntPoly& p) {  // p(x+1)
    int n = p.degree();
    std::vector<mpz_class> c(p.coeffs());
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j)
            c[static_cast<size_t>(j)] += c[static_cast<size_t>(j) + 1];
    return IntPoly(std::move(c));
}

// Isolate roots of q in the open unit interval, mapping to global
// [a, a+len] coordinates.
void isolate_01(const IntPoly& q, const mpq_class& a, const mpq_class& len,
                std::vector<RootInterval>& out) {
    struct Node {
        IntPoly p;
        mpq_class a, len;
    };
    std::deque<Node> stack{{q, a, len}};
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        int var = variations_01(nd.p);
        if (var == 0) continue;
        if (var == 1) {
            out.push_back({nd.a, nd.a + nd.len});
            continue;
        }
        IntPoly left = half_left(nd.p);
        IntPoly right = taylor_shift_1(left);
        mpq_class half = nd.len / 2;
        mpq_class mid = nd.a + half;
        if (sgn(right.coeff(0)) == 0) {
            out.push_back({mid, mid});
            // strip the root at the midpoint
            std::vector<mpz_class> c(right.coeffs().begin() + 1,
                                     right.coeffs().end());
            right = IntPoly(std::move(c));
        }
        stack.push_back({std::move(left), nd.a, half});
        stack.push_back({std::move(right), mid, half});
    }
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw DivisionByZeroPoly("isolate_real_roots: zero polynomial");
    IntPoly q = squarefree_part(p);
    std::vector<RootInterval> out;
    if (q.degree() == 0) return out;
    // Root at zero.
    if (sgn(q.coeff(0)) == 0) {
        out.push_back({0, 0});
        std::vector<mpz_class> c(q.coeffs().begin() + 1, q.coeffs().end());
        q = IntPoly(std::move(c));
    }
    // Cauchy bound rounded to a power of two.
    mpz_class maxc = 0;
    for (const auto& c : q.coeffs()) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    mpz_class an = abs(q.lc());
    mpz_class bound = 2;
    while (bound * an < maxc + an) bound *= 2;
    bound *= 2;
    mpq_class B(bound);

    // Positive roots: roots of q(B x) in (0,1).
    IntPoly qb = scale_variable(q, bound);
    std::vector<RootInterval> pos;
    isolate_01(qb, 0, B, pos);
    // Negative roots: positive roots of q(-x), mirrored.
    std::vector<mpz_class> negc(q.coeffs());
    for (size_t i = 1; i < negc.size(); i += 2) negc[i] = -negc[i];
    IntPoly qneg = scale_variable(IntPoly(std::move(negc)), bound);
    std::vector<RootInterval> neg;
    isolate_01(qneg, 0, B, neg);
    for (auto& r : neg) out.push_back({-r.hi, -r.lo});
    for (auto& r : pos) out.push_back(r);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const IntPoly& p, RootInterval r, const mpq_class& w) {
    if (r.lo == r.hi) return r;
    // The interval endpoints may themselves be (other) roots of p; the sign
    // just inside a simple root endpoint is read off the derivative.
    int slo = sign_at(p, r.lo);
    if (slo == 0) slo = sign_at(p.derivative(), r.lo);
    while (r.hi - r.lo > w) {
        mpq_class mid = (r.lo + r.hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            r.lo = mid;
        else
            r.hi = mid;
    }
    return r;
}

AlgebraicNumber match_root(const IntPoly& p, const Interval& target) {
    if (p.is_zero()) throw DivisionByZeroPoly("match_root: zero polynomial");
    IntPoly q = squarefree_part(p);
    std::vector<RootInterval> roots = isolate_real_roots(q);
    mpq_class tlo = target.lo_q(), thi = target.hi_q();
    mpq_class width = thi - tlo;
    if (sgn(width) <= 0) width = mpq_class(1, 1000000);
    for (int pass = 0; pass < 64; ++pass) {
        std::vector<RootInterval> inside, overlapping;
        for (const auto& r : roots) {
            if (r.hi < tlo || r.lo > thi) continue;
            overlapping.push_back(r);
            if (r.lo >= tlo && r.hi <= thi) inside.push_back(r);
        }
        if (overlapping.empty())
            throw NoMatchingRoot("match_root: target excludes every real root");
        if (overlapping.size() == 1 && inside.size() == 1)
            return {q, inside[0].lo, inside[0].hi};
        // Shrink all overlapping root intervals and retry.
        width /= 1024;
        for (auto& r : roots) r = refine_root(q, r, width);
    }
    throw AmbiguousRoot("match_root: target too wide to separate roots");
}

}  // namespace qwalk
