#pragma once

// Empirical fit of the polynomial correction exponent in
// e_n ~ K * rho^n * n^alpha, used as a diagnostic cross-check of the
// certified alpha. Never verdict-bearing.

#include <vector>

namespace qwalk {

struct AsymptoticFit {
    double alpha_hat = 0;
    double K_hat = 0;
    long n_used = 0;
    int period = 1;
    double residual = 0;  // size of the Richardson correction applied
};

// seq holds float-mode DP output e_n / rho_hat^n; rho is the certified
// interval midpoint (as double, the residual discrepancy rho/rho_hat is
// corrected inside). Fits on the residue class n = 0 mod period.
AsymptoticFit fit_asymptotics(const std::vector<double>& seq, double rho,
                              double rho_hat, int period);

}  // namespace qwalk
