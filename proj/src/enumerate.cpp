#include "qwalk/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

long max_step_extent(const StepSet& s) {
    long m = 1;
    for (const auto& st : s.steps())
        m = std::max({m, std::abs(st.dx), std::abs(st.dy)});
    return m;
}

}  // namespace

ExcursionSeq count_excursions(const StepSet& s, long n_max) {
    if (n_max < 0) throw DomainError("count_excursions: negative n_max");
    if (n_max > kExactCap)
        throw CapExceeded("count_excursions: exact mode capped at " +
                          std::to_string(kExactCap));
    long ext = max_step_extent(s);
    long side = n_max * ext + 1;
    std::vector<mpz_class> cur(static_cast<size_t>(side * side));
    std::vector<mpz_class> next(cur.size());
    auto at = [side](std::vector<mpz_class>& g, long i, long j) -> mpz_class& {
        return g[static_cast<size_t>(i * side + j)];
    };
    cur[0] = 1;
    ExcursionSeq out;
    out.terms.push_back(1);
    for (long n = 1; n <= n_max; ++n) {
        long lim = std::min(side - 1, n * ext);
        for (long i = 0; i <= lim; ++i)
            for (long j = 0; j <= lim; ++j) {
                mpz_class& v = at(next, i, j);
                v = 0;
                for (const auto& st : s.steps()) {
                    long pi = i - st.dx, pj = j - st.dy;
                    if (pi >= 0 && pj >= 0 && pi < side && pj < side)
                        v += at(cur, pi, pj);
                }
            }
        std::swap(cur, next);
        out.terms.push_back(cur[0]);
    }
    bool all_odd_zero = true;
    for (size_t n = 1; n < out.terms.size(); n += 2)
        if (sgn(out.terms[n]) != 0) all_odd_zero = false;
    out.period = (all_odd_zero && out.terms.size() > 2) ? 2 : 1;
    return out;
}

std::vector<double> count_excursions_float(const StepSet& s, long n_max,
                                           double rho_hat) {
    if (n_max < 0) throw DomainError("count_excursions_float: negative n_max");
    if (n_max > kFloatCap)
        throw CapExceeded("count_excursions_float: float mode capped at " +
                          std::to_string(kFloatCap));
    if (!(rho_hat > 0)) throw DomainError("count_excursions_float: rho_hat <= 0");
    long ext = max_step_extent(s);
    // States with max(i,j) > (n_max - n) * ext cannot return by step n_max.
    long side = (n_max / 2 + 1) * ext + 1;
    std::vector<double> cur(static_cast<size_t>(side * side), 0.0);
    std::vector<double> next(cur.size(), 0.0);
    auto idx = [side](long i, long j) { return static_cast<size_t>(i * side + j); };
    cur[0] = 1.0;
    std::vector<double> out;
    out.push_back(1.0);
    double inv_rho = 1.0 / rho_hat;
    for (long n = 1; n <= n_max; ++n) {
        long lim = std::min(side - 1, std::min(n, n_max - n) * ext);
        for (long i = 0; i <= lim; ++i)
            for (long j = 0; j <= lim; ++j) {
                double v = 0;
                for (const auto& st : s.steps()) {
                    long pi = i - st.dx, pj = j - st.dy;
                    if (pi >= 0 && pj >= 0 && pi < side && pj < side)
                        v += cur[idx(pi, pj)];
                }
                next[idx(i, j)] = v * inv_rho;
            }
        // clear rows beyond the reachable band
        for (long i = lim + 1; i < side; ++i)
            std::fill(next.begin() + static_cast<long>(idx(i, 0)),
                      next.begin() + static_cast<long>(idx(i, 0)) + side, 0.0);
        for (long i = 0; i <= lim; ++i)
            std::fill(next.begin() + static_cast<long>(idx(i, lim + 1)),
                      next.begin() + static_cast<long>(idx(i, 0)) + side, 0.0);
        std::swap(cur, next);
        out.push_back(cur[0]);
    }
    return out;
}

int detect_period(const StepSet& s) {
    if (is_half_plane_confined(s))
        throw HalfPlaneConfined("detect_period: step set confined to a half-plane");
    // Period 2 iff some parity functional is odd on every step, i.e. the
    // reachable lattice is bipartite.
    auto odd = [](long v) { return (v % 2 + 2) % 2 == 1; };
    bool parity = false;
    for (int which = 0; which < 3 && !parity; ++which)
        parity = std::all_of(s.steps().begin(), s.steps().end(),
                             [&](const Step& st) {
                                 long v = which == 0   ? st.dx
                                          : which == 1 ? st.dy
                                                       : st.dx + st.dy;
                                 return odd(v);
                             });
    int structural = parity ? 2 : 1;
    ExcursionSeq seq = count_excursions(s, 16);
    long g = 0;
    for (size_t n = 1; n < seq.terms.size(); ++n)
        if (sgn(seq.terms[n]) != 0) g = std::gcd(g, static_cast<long>(n));
    int empirical = (g == 0) ? structural : (g % 2 == 0 ? 2 : 1);
    if (empirical != structural)
        throw PeriodMismatch("detect_period: structural and gcd tests disagree");
    return structural;
}

Interval weighted_excursion_prob(const StepSet& s, const CriticalPoint& cp,
                                 long n) {
    if (n < 0 || n > kExactCap)
        throw CapExceeded("weighted_excursion_prob: n outside [0, cap]");
    mpfr_prec_t prec = std::max(cp.x0.prec(), static_cast<mpfr_prec_t>(64));
    Interval rho = eval_rho(s, cp);
    // Per-step probabilities x0^dx * y0^dy / rho.
    std::vector<Interval> w;
    w.reserve(s.size());
    for (const auto& st : s.steps())
        w.push_back(cp.x0.pow(st.dx) * cp.y0.pow(st.dy) / rho);
    long ext = max_step_extent(s);
    long side = n * ext + 1;
    std::vector<Interval> cur(static_cast<size_t>(side * side), Interval(prec));
    std::vector<Interval> next = cur;
    auto idx = [side](long i, long j) { return static_cast<size_t>(i * side + j); };
    cur[0] = Interval::point(1, prec);
    for (long step = 1; step <= n; ++step) {
        long lim = std::min(side - 1, step * ext);
        for (long i = 0; i <= lim; ++i)
            for (long j = 0; j <= lim; ++j) {
                Interval v(prec);
                for (size_t k = 0; k < s.steps().size(); ++k) {
                    long pi = i - s.steps()[k].dx, pj = j - s.steps()[k].dy;
                    if (pi >= 0 && pj >= 0 && pi < side && pj < side)
                        v = v + cur[idx(pi, pj)] * w[k];
                }
                next[idx(i, j)] = v;
            }
        std::swap(cur, next);
    }
    return cur[0];
}

std::pair<Interval, Interval> drift_check(const StepSet& s,
                                          const CriticalPoint& cp) {
    mpfr_prec_t prec = cp.x0.prec();
    Interval rho = eval_rho(s, cp);
    Interval ex(prec), ey(prec);
    for (const auto& st : s.steps()) {
        Interval w = cp.x0.pow(st.dx) * cp.y0.pow(st.dy) / rho;
        ex = ex + w * Interval::point(st.dx, prec);
        ey = ey + w * Interval::point(st.dy, prec);
    }
    return {ex, ey};
}

}  // namespace qwalk
