#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "qwalk/intpoly.hpp"

using namespace qwalk;

namespace {

gmp_randclass rng(gmp_randinit_default);

IntPoly random_poly(int max_deg, long coeff_range) {
    int deg = static_cast<int>(mpz_class(rng.get_z_range(max_deg + 1)).get_ui());
    std::vector<mpz_class> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = rng.get_z_range(2 * coeff_range + 1) - coeff_range;
    return IntPoly(std::move(c));
}

BiPoly random_bipoly(int max_deg_outer, int max_deg_inner, long coeff_range) {
    int deg = static_cast<int>(mpz_class(rng.get_z_range(max_deg_outer + 1)).get_ui());
    std::vector<IntPoly> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = random_poly(max_deg_inner, coeff_range);
    return BiPoly(std::move(c));
}

// Independent oracle: resultant as the Sylvester matrix determinant,
// computed by fraction-free elimination over the rationals.
mpz_class sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int dim = m + n;
    std::vector<std::vector<mpq_class>> M(
        static_cast<size_t>(dim), std::vector<mpq_class>(static_cast<size_t>(dim), 0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            M[static_cast<size_t>(r)][static_cast<size_t>(r + m - k)] = a.coeff(k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            M[static_cast<size_t>(n + r)][static_cast<size_t>(r + n - k)] = b.coeff(k);
    mpq_class det = 1;
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (sgn(M[static_cast<size_t>(r)][static_cast<size_t>(col)]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(col)]);
            det = -det;
        }
        mpq_class p = M[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (int r = col + 1; r < dim; ++r) {
            mpq_class f = M[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            if (sgn(f) == 0) continue;
            for (int k = col; k < dim; ++k)
                M[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    f * M[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    CHECK(det.get_den() == 1);
    return det.get_num();
}

// substitute the inner variable, leaving a univariate poly in the
// variable the resultant eliminates
IntPoly subst(const BiPoly& p, const mpz_class& v) {
    std::vector<mpz_class> c(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) {
        mpq_class e = eval_at(p.coeff(i), mpq_class(v));
        c[static_cast<size_t>(i)] = e.get_num();
    }
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("resultant matches the Sylvester determinant on random inputs") {
    rng.seed(20240811ul);
    int nontrivial = 0;
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly a = random_poly(6, 8), b = random_poly(6, 8);
        if (a.degree() < 1 || b.degree() < 1) continue;
        ++nontrivial;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
    CHECK(nontrivial > 100);
}

TEST_CASE("resultant vanishes exactly when a root is shared") {
    rng.seed(7ul);
    for (int iter = 0; iter < 50; ++iter) {
        IntPoly common = random_poly(2, 5);
        if (common.degree() < 1) continue;
        IntPoly a = random_poly(3, 5) * common;
        IntPoly b = random_poly(3, 5) * common;
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(resultant(a, b) == 0);
    }
    // coprime pair
    IntPoly f = parse_poly("t^2+1");
    IntPoly g = parse_poly("t-3");
    CHECK(resultant(f, g) == 10);  // f evaluated at the root of g
}

TEST_CASE("resultant is multiplicative in each argument") {
    rng.seed(99ul);
    for (int iter = 0; iter < 40; ++iter) {
        IntPoly a = random_poly(3, 4), b = random_poly(3, 4), c = random_poly(3, 4);
        if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("bivariate resultant commutes with evaluation of the inner variable") {
    rng.seed(1234ul);
    int checked = 0;
    for (int iter = 0; iter < 120; ++iter) {
        BiPoly a = random_bipoly(4, 3, 5), b = random_bipoly(4, 3, 5);
        if (a.degree() < 1 || b.degree() < 1) continue;
        IntPoly r = resultant(a, b);
        for (long v : {2L, 3L, 7L}) {
            mpz_class tau(v);
            // the homomorphism argument needs the degrees to survive
            if (sgn(eval_at(a.lc(), mpq_class(tau))) == 0) continue;
            if (sgn(eval_at(b.lc(), mpq_class(tau))) == 0) continue;
            ++checked;
            CHECK(eval_at(r, mpq_class(tau)) ==
                  mpq_class(resultant(subst(a, tau), subst(b, tau))));
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("pseudo remainder has reduced degree and respects the division identity") {
    rng.seed(31337ul);
    for (int iter = 0; iter < 60; ++iter) {
        IntPoly a = random_poly(7, 6), b = random_poly(4, 6);
        if (b.degree() < 1 || a.degree() < b.degree()) continue;
        IntPoly r = pseudo_rem(a, b);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
        // lc(b)^e * a  =  q*b + r  for some q, so r == lc(b)^e * a  mod b:
        // verify at a rational point via the exact remainder of both sides.
        // Simplest sound check: b | (lc(b)^e * a - r) requires q; instead
        // verify the relation at several rational points against an exact
        // polynomial division over Q.
        int e = a.degree() - b.degree() + 1;
        mpz_class le = 1;
        for (int i = 0; i < e; ++i) le *= b.lc();
        IntPoly lhs = a.scaled(le) - r;
        CHECK(divides(b, lhs));
    }
}

TEST_CASE("divexact inverts multiplication, also for nested coefficients") {
    rng.seed(555ul);
    for (int iter = 0; iter < 40; ++iter) {
        IntPoly a = random_poly(5, 9), b = random_poly(5, 9);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(ring::divexact(a * b, b) == a);
    }
    for (int iter = 0; iter < 25; ++iter) {
        BiPoly a = random_bipoly(3, 3, 4), b = random_bipoly(3, 3, 4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(ring::divexact(a * b, b) == a);
    }
}

TEST_CASE("polynomial arithmetic basics") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPoly t = IntPoly::monomial(1, 1);
    CHECK((t * t + t).degree() == 2);
    CHECK((t - t).is_zero());
    CHECK(t.coeff(5) == 0);
    IntPoly p = parse_poly("3*t^2-2*t+1");
    CHECK(p.derivative() == parse_poly("6*t-2"));
}
