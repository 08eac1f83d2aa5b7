#include "qwalk/asymptotics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

AsymptoticFit fit_asymptotics(const std::vector<double>& seq, double rho,
                              double rho_hat, int period) {
    if (period != 1 && period != 2)
        throw DomainError("fit_asymptotics: period must be 1 or 2");
    if (!(rho > 0) || !(rho_hat > 0))
        throw DomainError("fit_asymptotics: rho must be positive");
    long N = static_cast<long>(seq.size()) - 1;
    std::vector<long> cls;
    long nonzero = 0;
    for (long n = period; n <= N; n += period) {
        cls.push_back(n);
        if (seq[static_cast<size_t>(n)] > 0) ++nonzero;
    }
    if (nonzero < 64)
        throw InsufficientTerms("fit_asymptotics: need >= 64 nonzero terms, got " +
                                std::to_string(nonzero));
    double drift = std::log(rho_hat) - std::log(rho);
    auto L = [&](long n) {
        double v = seq[static_cast<size_t>(n)];
        if (!(v > 0))
            throw NonPositiveTerm("fit_asymptotics: nonpositive term at n = " +
                                  std::to_string(n));
        return std::log(v) + static_cast<double>(n) * drift;
    };
    auto snap = [&](long n) { return std::max<long>(period, (n / period) * period); };
    long m = cls.back();
    long m2 = snap(m / 2);
    long m4 = snap(m / 4);
    if (m4 <= 0 || m2 <= m4 || m <= m2)
        throw InsufficientTerms("fit_asymptotics: sequence too short for halving");
    double a1 = (L(m) - L(m2)) / (std::log((double)m) - std::log((double)m2));
    double a2 = (L(m2) - L(m4)) / (std::log((double)m2) - std::log((double)m4));

    AsymptoticFit fit;
    fit.period = period;
    fit.n_used = m;
    fit.residual = a1 - a2;
    fit.alpha_hat = 2 * a1 - a2;
    double acc = 0;
    long cnt = 0;
    for (long n : cls)
        if (n >= m - m / 10 && seq[static_cast<size_t>(n)] > 0) {
            acc += L(n) - fit.alpha_hat * std::log((double)n);
            ++cnt;
        }
    fit.K_hat = cnt ? std::exp(acc / cnt) : 0;
    return fit;
}

}  // namespace qwalk
