#pragma once

// Arithmetic certification that arccos(c)/pi is irrational, via a gcd sweep
// against cyclotomic polynomials of the double-cover transform of c's
// eliminant, and the assembled non-D-finiteness verdict.

#include <optional>
#include <string>
#include <vector>

#include "qwalk/elim.hpp"
#include "qwalk/numsolve.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

struct IrrationalityCertificate {
    enum class Method { CyclotomicSweep, RationalWitness, Inconclusive };

    Method method = Method::Inconclusive;
    long degree_bound = 0;            // deg of the swept polynomial R
    std::vector<unsigned> checked_N;  // every N with phi(N) <= deg R
    std::vector<unsigned> flagged_N;  // N with nonconstant gcd(R, Phi_N)
    IntPoly transformed_poly;         // R(x)
    std::optional<mpq_class> witness;    // arccos(c)/pi when rational
    std::optional<unsigned> witness_N;   // root-of-unity order
    std::string note;
};

// N values whose cyclotomic polynomial shares a nonconstant factor with
// chebyshev_double_cover(E). An empty result certifies that no root of E
// is of the form cos(k*pi/m).
std::vector<unsigned> rootofunity_sweep(const IntPoly& E);

// Decides whether arccos(c)/pi is irrational. c must be a root of E_c.poly
// with an isolating interval inside (-1, 1).
IrrationalityCertificate certify_alpha_irrational(const Eliminant& E_c,
                                                  const AlgebraicNumber& c);

struct Hypotheses {
    bool half_plane_confined = false;
    std::optional<std::pair<long, long>> half_plane_witness;
    bool small_step = false;
    int period = 0;
    bool integer_sequence = true;        // e_n are integers by construction
    bool exponentially_bounded = true;   // e_n <= |S|^n
};

struct Verdict {
    enum class Conclusion { NotDFinite, NoConclusion, HypothesisFailed };

    Conclusion conclusion = Conclusion::HypothesisFailed;
    Hypotheses hypotheses;
    IrrationalityCertificate certificate;
    std::optional<AlgebraicNumber> rho;
    std::optional<AlgebraicNumber> c;
    std::optional<Interval> alpha;
    std::optional<Eliminant> elim_rho;
    std::optional<Eliminant> elim_c;
    std::optional<CriticalPoint> critical_point;
    mpfr_prec_t precision_used = 0;
    std::string diagnostic;
};

// Full pipeline: half-plane check, critical point, eliminants, root
// matching, irrationality certificate. Retries with doubled precision up
// to the cap; PrecisionExhausted surfaces as an Inconclusive certificate.
Verdict non_dfinite_verdict(const StepSet& s,
                            mpfr_prec_t start_bits = kDefaultStartPrec);

// 2 * min{l >= 1 : l/(alpha+1) integer} = 2*|numerator of alpha+1|.
mpz_class group_order_from_alpha(const mpq_class& alpha);

}  // namespace qwalk
