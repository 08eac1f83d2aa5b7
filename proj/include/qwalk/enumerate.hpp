#pragma once

// Dynamic-programming enumeration of quarter-plane walks: exact big-integer
// excursion counts, a renormalized floating backend for asymptotic fitting,
// periodicity detection, and the reweighted-walk probability identity.

#include <vector>

#include "qwalk/interval.hpp"
#include "qwalk/numsolve.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

inline constexpr long kExactCap = 400;
inline constexpr long kFloatCap = 5000;

struct ExcursionSeq {
    std::vector<mpz_class> terms;  // e_0 .. e_N
    int period = 1;                // 1 or 2
};

// Exact excursion counts e_0..e_n_max (verdict-grade).
ExcursionSeq count_excursions(const StepSet& s, long n_max);

// Scaled counts f(0,0,n)/rho_hat^n in double precision (fit-grade only).
std::vector<double> count_excursions_float(const StepSet& s, long n_max,
                                           double rho_hat);

// 2 iff every step changes x+y parity; cross-validated against the gcd of
// the nonzero indices of the excursion sequence.
int detect_period(const StepSet& s);

// Enclosure of P[walk of the Cramer-reweighted step distribution is at the
// origin after n steps without leaving the quarter plane].
Interval weighted_excursion_prob(const StepSet& s, const CriticalPoint& cp,
                                 long n);

// Both components of the reweighted drift; each must contain 0.
std::pair<Interval, Interval> drift_check(const StepSet& s,
                                          const CriticalPoint& cp);

}  // namespace qwalk
