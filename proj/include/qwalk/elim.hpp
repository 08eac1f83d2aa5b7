#pragma once

// Double-resultant elimination producing squarefree integer polynomials
// that annihilate the growth constant rho and the correlation coefficient c.
// Spurious factors are expected; downstream root matching discards them.

#include <string>

#include "qwalk/intpoly.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

enum class ElimTarget { rho, c };

struct Eliminant {
    IntPoly poly;          // squarefree, primitive, positive leading coefficient
    ElimTarget target;
    std::string provenance;  // elimination order used, factors stripped
};

Eliminant eliminant_rho(const StepSet& s);
Eliminant eliminant_c(const StepSet& s);

}  // namespace qwalk
