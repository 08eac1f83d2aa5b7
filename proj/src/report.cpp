#include "qwalk/report.hpp"

#include <algorithm>
#include <sstream>

#include "qwalk/elim.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/fixtures.hpp"

namespace qwalk {

namespace {

using nlohmann::ordered_json;

std::string conclusion_name(Verdict::Conclusion c) {
    switch (c) {
        case Verdict::Conclusion::NotDFinite: return "NotDFinite";
        case Verdict::Conclusion::NoConclusion: return "NoConclusion";
        case Verdict::Conclusion::HypothesisFailed: return "HypothesisFailed";
    }
    return "?";
}

std::string method_name(IrrationalityCertificate::Method m) {
    switch (m) {
        case IrrationalityCertificate::Method::CyclotomicSweep:
            return "CyclotomicSweep";
        case IrrationalityCertificate::Method::RationalWitness:
            return "RationalWitness";
        case IrrationalityCertificate::Method::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

ordered_json algebraic_json(const AlgebraicNumber& a) {
    return ordered_json{{"annihilator", format_poly(a.annihilator)},
                        {"isolator", {a.lo.get_str(), a.hi.get_str()}},
                        {"decimal", a.to_interval(128).decimal(10)}};
}

ordered_json interval_json(const Interval& v) {
    return ordered_json{{"enclosure", {v.lo_q().get_str(), v.hi_q().get_str()}},
                        {"decimal", v.decimal(10)}};
}

ordered_json certificate_json(const IrrationalityCertificate& cert) {
    ordered_json j;
    j["method"] = method_name(cert.method);
    j["degree_bound"] = cert.degree_bound;
    j["checked_N"] = cert.checked_N;
    j["flagged_N"] = cert.flagged_N;
    j["transformed_poly"] = cert.transformed_poly.degree() >= 0
                                ? format_poly(cert.transformed_poly, "x")
                                : "";
    if (cert.witness)
        j["witness"] = cert.witness->get_str();
    else
        j["witness"] = nullptr;
    if (cert.witness_N)
        j["witness_N"] = *cert.witness_N;
    else
        j["witness_N"] = nullptr;
    j["note"] = cert.note;
    return j;
}

// numeric parts of a tag filter entry like "23", "7*" or "(40, 42)"
std::vector<long> filter_numbers(const std::string& entry) {
    std::vector<long> out;
    long cur = -1;
    for (char ch : entry) {
        if (ch >= '0' && ch <= '9')
            cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
        else if (cur >= 0) {
            out.push_back(cur);
            cur = -1;
        }
    }
    if (cur >= 0) out.push_back(cur);
    return out;
}

bool tag_selected(const std::string& tag, const std::vector<std::string>& filter) {
    if (filter.empty()) return true;
    long n = std::stol(tag);
    for (const auto& entry : filter)
        for (long m : filter_numbers(entry))
            if (m == n) return true;
    return false;
}

}  // namespace

bool matches_decimal(const Interval& v, const std::string& printed) {
    std::string digits;
    long frac = 0;
    bool seen_dot = false, neg = false;
    for (char ch : printed) {
        if (ch == '-')
            neg = true;
        else if (ch == '.')
            seen_dot = true;
        else if (ch >= '0' && ch <= '9') {
            digits += ch;
            if (seen_dot) ++frac;
        } else if (ch != '+' && ch != ' ')
            throw ParseError("matches_decimal: bad decimal '" + printed + "'");
    }
    if (digits.empty()) throw ParseError("matches_decimal: empty decimal");
    mpz_class num(digits, 10);
    if (neg) num = -num;
    mpz_class den = 1;
    for (long i = 0; i < frac; ++i) den *= 10;
    mpq_class val(num, den);
    val.canonicalize();
    mpq_class half_ulp(1, 2 * den);
    half_ulp.canonicalize();
    return v.lo_q() >= val - half_ulp && v.hi_q() <= val + half_ulp;
}

ClassificationReport classify(const StepSet& s, const ClassifyOptions& opt) {
    ClassificationReport r{.steps = s};
    LaurentPoly2 chi = char_poly(s);
    r.chi = chi.format();
    r.singular = s.small_step() && is_singular(s);
    try {
        long n_max = std::clamp<long>(opt.max_n, 8, kExactCap);
        r.excursions = count_excursions(s, n_max);
        r.verdict = non_dfinite_verdict(s, opt.precision);
        if (opt.fit_n > 0 && r.verdict.rho) {
            double rho_mid = r.verdict.rho->to_interval(128).mid_d();
            auto seq = count_excursions_float(s, opt.fit_n, rho_mid);
            r.fit = fit_asymptotics(seq, rho_mid, rho_mid,
                                    r.verdict.hypotheses.period);
        }
        if (s.small_step()) {
            std::vector<mpz_class> prefix(r.excursions.terms.begin(),
                                          r.excursions.terms.begin() + 9);
            const auto& recovered = recover_fixture_stepsets();
            for (const Fixture& f : fixtures())
                if (f.sequence == prefix) {
                    auto it = recovered.find(f.tag);
                    if (it != recovered.end() && it->second == s) {
                        r.matched_tag = f.tag;
                        break;
                    }
                    if (!r.matched_tag) r.matched_tag = f.tag;
                }
        }
    } catch (const Error& e) {
        r.failure = e.what();
    }
    return r;
}

ordered_json ClassificationReport::to_json() const {
    ordered_json j;
    j["schema"] = "1";
    j["steps"] = steps.format();
    j["chi"] = chi;
    j["singular"] = singular;
    if (verdict.hypotheses.half_plane_witness)
        j["half_plane"] = {verdict.hypotheses.half_plane_witness->first,
                           verdict.hypotheses.half_plane_witness->second};
    else
        j["half_plane"] = nullptr;
    j["period"] = verdict.hypotheses.period;
    ordered_json ex = ordered_json::array();
    for (const auto& t : excursions.terms) ex.push_back(t.get_str());
    j["excursions"] = ex;
    j["rho"] = verdict.rho ? algebraic_json(*verdict.rho) : ordered_json(nullptr);
    j["c"] = verdict.c ? algebraic_json(*verdict.c) : ordered_json(nullptr);
    j["alpha"] = verdict.alpha ? interval_json(*verdict.alpha) : ordered_json(nullptr);
    j["eliminant_rho"] = verdict.elim_rho
                             ? ordered_json(format_poly(verdict.elim_rho->poly))
                             : ordered_json(nullptr);
    j["eliminant_c"] = verdict.elim_c
                           ? ordered_json(format_poly(verdict.elim_c->poly))
                           : ordered_json(nullptr);
    j["certificate"] = certificate_json(verdict.certificate);
    j["verdict"] = conclusion_name(verdict.conclusion);
    if (fit) {
        j["asymptotic_fit"] = ordered_json{{"alpha_hat", fit->alpha_hat},
                                           {"K_hat", fit->K_hat},
                                           {"n_used", fit->n_used},
                                           {"period", fit->period},
                                           {"residual", fit->residual},
                                           {"certified", false}};
    } else
        j["asymptotic_fit"] = nullptr;
    j["matched_tag"] = matched_tag ? ordered_json(*matched_tag) : ordered_json(nullptr);
    j["failure"] = failure ? ordered_json(*failure) : ordered_json(nullptr);
    j["precision_used"] = static_cast<long>(verdict.precision_used);
    return j;
}

std::string ClassificationReport::to_text() const {
    std::ostringstream os;
    os << "steps:    " << steps.format() << "\n";
    os << "chi:      " << chi << "\n";
    os << "singular: " << (singular ? "yes" : "no") << "\n";
    if (verdict.hypotheses.half_plane_witness)
        os << "half-plane witness: (" << verdict.hypotheses.half_plane_witness->first
           << "," << verdict.hypotheses.half_plane_witness->second << ")\n";
    if (verdict.hypotheses.period) os << "period:   " << verdict.hypotheses.period << "\n";
    os << "excursions:";
    for (const auto& t : excursions.terms) os << " " << t.get_str();
    os << "\n";
    if (verdict.rho)
        os << "rho:      " << verdict.rho->to_interval(128).decimal(10)
           << "  (root of " << format_poly(verdict.rho->annihilator) << ")\n";
    if (verdict.c)
        os << "c:        " << verdict.c->to_interval(128).decimal(10)
           << "  (root of " << format_poly(verdict.c->annihilator) << ")\n";
    if (verdict.alpha) os << "alpha:    " << verdict.alpha->decimal(10) << "\n";
    os << "certificate: " << method_name(verdict.certificate.method);
    if (verdict.certificate.witness)
        os << " (arccos(c)/pi = " << verdict.certificate.witness->get_str() << ")";
    os << "\n";
    if (fit)
        os << "alpha_hat: " << fit->alpha_hat << " (n = " << fit->n_used
           << ", not certified)\n";
    if (matched_tag) os << "matched tag: " << *matched_tag << "\n";
    if (failure) os << "failure:  " << *failure << "\n";
    os << "verdict:  " << conclusion_name(verdict.conclusion) << "\n";
    return os.str();
}

int ClassificationReport::exit_code() const {
    if (failure) return 3;
    if (verdict.conclusion == Verdict::Conclusion::HypothesisFailed) return 2;
    if (verdict.certificate.method == IrrationalityCertificate::Method::Inconclusive)
        return 3;
    return 0;
}

TableCheck check_tables(int table, const std::vector<std::string>& tags) {
    if (table != 1 && table != 2)
        throw DomainError("check_tables: table must be 1 or 2");
    TableCheck res;
    const auto& recovered = recover_fixture_stepsets();
    for (const Fixture& f : fixtures()) {
        if (!tag_selected(f.tag, tags)) continue;
        ++res.checked;
        try {
            const StepSet& s = recovered.at(f.tag);
            if (table == 1) {
                if (count_excursions(s, 8).terms != f.sequence)
                    throw Error("sequence mismatch");
                int period = detect_period(s);
                if (period != (f.periodic ? 2 : 1)) throw Error("period mismatch");
                CriticalPoint cp = solve_critical_point(s, 128);
                if (!matches_decimal(eval_rho(s, cp), f.rho_decimal))
                    throw Error("rho decimal mismatch");
                Interval alpha = alpha_from_c(eval_c(s, cp));
                if (!matches_decimal(-alpha, f.alpha_decimal))
                    throw Error("alpha decimal mismatch");
            } else {
                Eliminant er = eliminant_rho(s);
                Eliminant ec = eliminant_c(s);
                if (!divides(f.mu_rho, er.poly))
                    throw Error("mu_rho does not divide the rho eliminant");
                if (!divides(f.mu_c, ec.poly))
                    throw Error("mu_c does not divide the c eliminant");
                CriticalPoint cp = solve_critical_point(s, 128);
                match_root(f.mu_rho, eval_rho(s, cp));
                match_root(canonical(f.mu_c), eval_c(s, cp));
            }
            ++res.passed;
        } catch (const std::exception& e) {
            res.failures.push_back(f.tag + ": " + e.what());
        }
    }
    return res;
}

}  // namespace qwalk
