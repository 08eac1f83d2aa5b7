#pragma once

// Certified numerics: the positive critical point of the characteristic
// polynomial, interval values of rho, c and alpha, and exact real root
// isolation for integer polynomials.

#include <vector>

#include "qwalk/interval.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

inline constexpr mpfr_prec_t kDefaultStartPrec = 64;
inline constexpr mpfr_prec_t kDefaultPrecCap = 4096;

// Reads QWALK_PRECISION_CAP, falling back to the 4096-bit default.
mpfr_prec_t precision_cap();

struct CriticalPoint {
    Interval x0;
    Interval y0;
    bool certified = false;
};

// A real algebraic number: squarefree annihilator plus an isolating
// interval with dyadic rational endpoints. Refinement returns new values.
struct AlgebraicNumber {
    IntPoly annihilator;
    mpq_class lo;
    mpq_class hi;

    AlgebraicNumber refined(const mpq_class& max_width) const;
    Interval to_interval(mpfr_prec_t prec) const;
};

// Interval evaluation helpers (x-enclosure must be positive when negative
// exponents occur).
Interval eval_laurent(const LaurentPoly2& p, const Interval& x, const Interval& y);
Interval eval_bipoly(const BiPoly& p, const Interval& x, const Interval& y);
Interval eval_intpoly(const IntPoly& p, const Interval& x);

// Unique positive solution of d(chi)/dx = d(chi)/dy = 0, certified by an
// interval Newton contraction; enclosure widths <= 2^(-bits/2).
CriticalPoint solve_critical_point(const StepSet& s, mpfr_prec_t bits);

Interval eval_rho(const StepSet& s, const CriticalPoint& cp);
Interval eval_c(const StepSet& s, const CriticalPoint& cp);

// alpha = -1 - pi/arccos(-c)
Interval alpha_from_c(const Interval& c);

struct RootInterval {
    mpq_class lo;
    mpq_class hi;  // lo == hi for an exact rational root
};

// Disjoint isolating intervals for all real roots of p, ascending.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

// Refine [lo,hi] (sign change or exact point) by bisection until width <= w.
RootInterval refine_root(const IntPoly& p, RootInterval r, const mpq_class& w);

// The unique root of squarefree p inside target; throws NoMatchingRoot or
// AmbiguousRoot (the latter when target is too wide to decide).
AlgebraicNumber match_root(const IntPoly& p, const Interval& target);

}  // namespace qwalk
