#pragma once

// Univariate integer polynomials and the number-theoretic constructions
// used by the elimination and certification stages: gcd, squarefree part,
// cyclotomic polynomials, the double-cover transform t = (x^2+1)/(2x),
// and minimal polynomials of 2cos(2*pi/N).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qwalk/polyring.hpp"

namespace qwalk {

using IntPoly = Poly<mpz_class>;
using BiPoly = Poly<IntPoly>;        // outer variable with IntPoly coefficients
using TriPoly = Poly<BiPoly>;        // three nested variables

// gcd of all coefficients; 0 for the zero polynomial.
mpz_class content(const IntPoly& p);

// p divided by its content; zero stays zero.
IntPoly primitive_part(const IntPoly& p);

// Primitive with positive leading coefficient.
IntPoly canonical(const IntPoly& p);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

// True iff p divides q exactly over the rationals.
bool divides(const IntPoly& p, const IntPoly& q);

// canonical(p / gcd(p, p')).
IntPoly squarefree_part(const IntPoly& p);

// N-th cyclotomic polynomial, memoized.
IntPoly cyclotomic(unsigned N);

unsigned euler_phi(unsigned n);

// All N with phi(N) <= D, ascending.
std::vector<unsigned> cyclotomic_candidates(unsigned D);

// Primitive canonical part of (2x)^(deg p) * p((x^2+1)/(2x)).
IntPoly chebyshev_double_cover(const IntPoly& p);

// Minimal polynomial of 2cos(2*pi/N), N >= 3; degree phi(N)/2.
IntPoly minpoly_two_cos(unsigned N);

// Substitute t -> s*t for integer s (used to pass from 2cos to cos).
IntPoly scale_variable(const IntPoly& p, const mpz_class& s);

// Exact evaluation at a rational point.
mpq_class eval_at(const IntPoly& p, const mpq_class& x);
int sign_at(const IntPoly& p, const mpq_class& x);

// Text I/O in expanded form, e.g. "t^3+t^2-18*t-43".
std::string format_poly(const IntPoly& p, const std::string& var = "t");
IntPoly parse_poly(const std::string& text, const std::string& var = "t");

}  // namespace qwalk
