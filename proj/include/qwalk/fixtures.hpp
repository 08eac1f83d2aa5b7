#pragma once

// The 51 nonsingular infinite-group quarter-plane models: excursion
// prefixes, printed decimals for rho and the exponent, and the minimal
// polynomials of rho and c (denominators cleared). Step sets are not
// stored; they are recovered by matching exact excursion counts.

#include <map>
#include <string>
#include <vector>

#include "qwalk/intpoly.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

struct Fixture {
    std::string tag;      // "23", "7*", ...
    bool periodic = false;
    std::vector<mpz_class> sequence;  // e_0..e_8
    std::string rho_decimal;          // as printed, 7 significant digits
    std::string alpha_decimal;        // printed |alpha| exponent
    IntPoly mu_rho;
    IntPoly mu_c;                     // integer-cleared
};

const std::vector<Fixture>& fixtures();

// tag -> step set, derived by enumerating all 255 small step sets and
// matching exact e_0..e_8. Transpose pairs share a sequence; the lex
// smaller set goes to the lex smaller tag. Throws UnmatchedFixture.
const std::map<std::string, StepSet>& recover_fixture_stepsets();

}  // namespace qwalk
