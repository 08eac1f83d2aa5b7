#include "qwalk/irrational.hpp"

#include <numeric>

#include "qwalk/enumerate.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// True iff the single root of squarefree p isolated by [lo,hi] is also a
// root of g, where g divides p. Endpoints of a proper isolator are never
// roots of p, so a sign change decides; a point isolator is evaluated.
bool isolator_holds_root_of(const IntPoly& g, const mpq_class& lo,
                            const mpq_class& hi) {
    if (g.degree() < 1) return false;
    if (lo == hi) return sign_at(g, lo) == 0;
    return sign_at(g, lo) * sign_at(g, hi) < 0;
}

// arccos(c)/pi as an exact reduced rational 2k/N, gcd(k, N) = 1, found by
// interval separation of the finitely many candidates.
mpq_class locate_witness_fraction(const AlgebraicNumber& c, unsigned N) {
    std::vector<mpq_class> cand;
    for (unsigned k = 1; 2 * k < N; ++k)
        if (std::gcd(k, N) == 1) {
            mpq_class r(2 * k, N);
            r.canonicalize();
            cand.push_back(r);
        }
    if (N <= 2) cand.clear();
    if (cand.empty())
        throw DomainError("locate_witness_fraction: no candidate fractions");

    AlgebraicNumber a = c;
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t bits = kDefaultStartPrec; bits <= cap; bits *= 2) {
        mpq_class w(mpz_class(1), mpz_class(1) << (bits / 2));
        a = a.refined(w);
        Interval r_enc = a.to_interval(bits).acos() / Interval::pi(bits);
        std::vector<mpq_class> inside;
        for (const auto& r : cand)
            if (r_enc.contains(r)) inside.push_back(r);
        if (inside.size() == 1) return inside[0];
        if (inside.empty())
            throw DomainError(
                "locate_witness_fraction: enclosure excludes all candidates");
    }
    throw PrecisionExhausted("locate_witness_fraction: candidates not separated");
}

}  // namespace

std::vector<unsigned> rootofunity_sweep(const IntPoly& E) {
    if (E.degree() < 0) throw DomainError("rootofunity_sweep: zero polynomial");
    IntPoly R = chebyshev_double_cover(E);
    std::vector<unsigned> flagged;
    for (unsigned N : cyclotomic_candidates(static_cast<unsigned>(R.degree())))
        if (gcd(R, cyclotomic(N)).degree() > 0) flagged.push_back(N);
    return flagged;
}

IrrationalityCertificate certify_alpha_irrational(const Eliminant& E_c,
                                                  const AlgebraicNumber& c) {
    IrrationalityCertificate cert;
    cert.transformed_poly = chebyshev_double_cover(E_c.poly);
    cert.degree_bound = cert.transformed_poly.degree();
    cert.checked_N =
        cyclotomic_candidates(static_cast<unsigned>(cert.degree_bound));
    try {
        cert.flagged_N = rootofunity_sweep(E_c.poly);
        if (cert.flagged_N.empty()) {
            cert.method = IrrationalityCertificate::Method::CyclotomicSweep;
            cert.note = "no cyclotomic factor in the double cover";
            return cert;
        }
        // The eliminant may carry spurious factors tangent to roots of
        // unity; decide per flagged order whether c itself is affected.
        AlgebraicNumber a = c;
        for (unsigned N : cert.flagged_N) {
            if (N <= 2) continue;  // candidate values +-1, excluded by c in (-1,1)
            IntPoly q = canonical(scale_variable(minpoly_two_cos(N), 2));
            IntPoly g = gcd(E_c.poly, q);
            if (isolator_holds_root_of(g, a.lo, a.hi)) {
                cert.method = IrrationalityCertificate::Method::RationalWitness;
                cert.witness_N = N;
                cert.witness = locate_witness_fraction(a, N);
                cert.note = "c = cos(pi*" + cert.witness->get_str() +
                            "), root of unity order " + std::to_string(N);
                return cert;
            }
        }
        cert.method = IrrationalityCertificate::Method::CyclotomicSweep;
        cert.note = "flagged orders separated from c by exact root location";
        return cert;
    } catch (const PrecisionExhausted& e) {
        cert.method = IrrationalityCertificate::Method::Inconclusive;
        cert.note = e.what();
        return cert;
    }
}

mpz_class group_order_from_alpha(const mpq_class& alpha) {
    mpq_class ap1 = alpha + 1;
    ap1.canonicalize();
    if (ap1 == 0) throw DomainError("group_order_from_alpha: alpha = -1");
    return 2 * abs(ap1.get_num());
}

Verdict non_dfinite_verdict(const StepSet& s, mpfr_prec_t start_bits) {
    Verdict v;
    v.hypotheses.small_step = s.small_step();
    if (auto hw = is_half_plane_confined(s)) {
        v.conclusion = Verdict::Conclusion::HypothesisFailed;
        v.hypotheses.half_plane_confined = true;
        v.hypotheses.half_plane_witness = hw;
        v.diagnostic = "step set confined to the half-plane " +
                       std::to_string(hw->first) + "*x+" +
                       std::to_string(hw->second) + "*y >= 0";
        return v;
    }
    v.hypotheses.period = detect_period(s);

    Eliminant er = eliminant_rho(s);
    Eliminant ec = eliminant_c(s);
    v.elim_rho = er;
    v.elim_c = ec;

    mpfr_prec_t cap = precision_cap();
    if (start_bits < 2) start_bits = kDefaultStartPrec;
    std::string last_error;
    for (mpfr_prec_t bits = start_bits; bits <= cap; bits *= 2) {
        try {
            CriticalPoint cp = solve_critical_point(s, bits);
            Interval rho_i = eval_rho(s, cp);
            Interval c_i = eval_c(s, cp);
            AlgebraicNumber rho = match_root(er.poly, rho_i);
            AlgebraicNumber c = match_root(ec.poly, c_i);
            Interval alpha = alpha_from_c(c_i);
            v.critical_point = cp;
            v.rho = rho;
            v.c = c;
            v.alpha = alpha;
            v.precision_used = bits;
            v.certificate = certify_alpha_irrational(ec, c);
            switch (v.certificate.method) {
                case IrrationalityCertificate::Method::CyclotomicSweep:
                    v.conclusion = Verdict::Conclusion::NotDFinite;
                    break;
                case IrrationalityCertificate::Method::RationalWitness:
                    v.conclusion = Verdict::Conclusion::NoConclusion;
                    v.diagnostic =
                        "arccos(c)/pi rational; the irrationality criterion "
                        "does not apply";
                    break;
                case IrrationalityCertificate::Method::Inconclusive:
                    v.conclusion = Verdict::Conclusion::NoConclusion;
                    v.diagnostic = "precision exhausted: " + v.certificate.note;
                    break;
            }
            return v;
        } catch (const PrecisionExhausted& e) {
            last_error = e.what();
        } catch (const AmbiguousRoot& e) {
            last_error = e.what();
        } catch (const DomainError& e) {
            last_error = e.what();
        }
    }
    v.conclusion = Verdict::Conclusion::NoConclusion;
    v.certificate.method = IrrationalityCertificate::Method::Inconclusive;
    v.certificate.note = last_error;
    v.diagnostic = "precision cap reached: " + last_error;
    return v;
}

}  // namespace qwalk
