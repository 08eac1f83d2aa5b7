#pragma once

// Step sets, their characteristic Laurent polynomial, and the structural
// predicates that gate the classification pipeline.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/intpoly.hpp"

namespace qwalk {

struct Step {
    long dx = 0;
    long dy = 0;
    auto operator<=>(const Step&) const = default;
};

class StepSet {
  public:
    explicit StepSet(std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }
    size_t size() const { return steps_.size(); }
    bool small_step() const { return small_step_; }

    StepSet transposed() const;
    std::string format() const;

    auto operator<=>(const StepSet&) const = default;

  private:
    std::vector<Step> steps_;  // sorted lexicographically, no duplicates
    bool small_step_ = false;
};

// Bivariate Laurent polynomial: (i, j) exponent pair -> nonzero coefficient.
class LaurentPoly2 {
  public:
    LaurentPoly2() = default;
    explicit LaurentPoly2(std::map<std::pair<long, long>, mpz_class> terms);

    const std::map<std::pair<long, long>, mpz_class>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly2 dx() const;  // partial derivative in x
    LaurentPoly2 dy() const;

    // Multiply by x^a y^b with a, b large enough to clear negative exponents,
    // yielding an ordinary polynomial given as exponent->coefficient terms.
    std::map<std::pair<long, long>, mpz_class> numerator_terms() const;

    std::string format() const;

  private:
    std::map<std::pair<long, long>, mpz_class> terms_;
};

// "(dx,dy),(dx,dy),..." with integer coordinates.
StepSet parse_stepset(const std::string& text);

LaurentPoly2 char_poly(const StepSet& s);

struct Partials {
    BiPoly chi_x;  // numer(d chi/dx), outer variable y, inner x; canonical
    BiPoly chi_y;  // numer(d chi/dy)
    LaurentPoly2 chi_xx;
    LaurentPoly2 chi_xy;
    LaurentPoly2 chi_yy;
};

Partials partials(const LaurentPoly2& chi);

// Canonicalized numerator of a Laurent polynomial as a BiPoly
// (outer variable y, coefficients in x).
BiPoly numer_bipoly(const LaurentPoly2& p);

bool is_singular(const StepSet& s);

// Witness (a,b) with a*dx + b*dy >= 0 for all steps, or nullopt.
std::optional<std::pair<long, long>> is_half_plane_confined(const StepSet& s);

std::pair<long, long> drift(const StepSet& s);
bool has_axial_symmetry(const StepSet& s);
bool group_finite_predicate(const StepSet& s);

}  // namespace qwalk
