#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
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

IntPoly pow_poly(const IntPoly& p, int k) {
    IntPoly r{std::vector<mpz_class>{1}};
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

}  // namespace

TEST_CASE("content and primitive part") {
    IntPoly p = parse_poly("6*t^2-4*t+10");
    CHECK(content(p) == 2);
    CHECK(primitive_part(p) == parse_poly("3*t^2-2*t+5"));
    CHECK(canonical(parse_poly("-2*t+4")) == parse_poly("t-2"));
}

TEST_CASE("gcd recovers a planted common factor") {
    rng.seed(42ul);
    for (int iter = 0; iter < 60; ++iter) {
        IntPoly g = random_poly(3, 6);
        IntPoly a = random_poly(4, 6), b = random_poly(4, 6);
        if (g.degree() < 1 || a.is_zero() || b.is_zero()) continue;
        IntPoly d = gcd(a * g, b * g);
        CHECK(divides(canonical(g), d));
        CHECK(divides(d, a * g));
        CHECK(divides(d, b * g));
    }
}

TEST_CASE("squarefree part strips multiplicity but keeps every root") {
    rng.seed(4242ul);
    for (int iter = 0; iter < 60; ++iter) {
        IntPoly a = random_poly(3, 5), b = random_poly(3, 5);
        if (a.degree() < 1 || b.degree() < 1) continue;
        IntPoly p = a * a * b;
        IntPoly sf = squarefree_part(p);
        CHECK(divides(sf, p));
        CHECK(gcd(sf, sf.derivative()).degree() == 0);
        // same radical: p divides a power of sf
        CHECK(divides(p, pow_poly(sf, p.degree())));
    }
}

TEST_CASE("squarefree part is exact when the gcd carries integer content") {
    // regression: gcd(p, p') keeps the content gcd of its inputs; dividing
    // the primitive part of p by it used to corrupt the quotient silently.
    IntPoly p = parse_poly("4*t^3-8*t^2+4*t");  // 4t(t-1)^2
    CHECK(squarefree_part(p) == parse_poly("t^2-t"));
    IntPoly q = parse_poly("16*t^4-32*t^2+16");  // 16(t-1)^2(t+1)^2
    CHECK(squarefree_part(q) == parse_poly("t^2-1"));
}

TEST_CASE("divides") {
    CHECK(divides(parse_poly("t-5"), parse_poly("t^2-25")));
    CHECK(!divides(parse_poly("t-5"), parse_poly("t^2-24")));
    CHECK(divides(parse_poly("8*t^3+8*t^2+6*t+1"),
                  parse_poly("8*t^3+8*t^2+6*t+1") * parse_poly("3*t^2-1")));
}

TEST_CASE("cyclotomic polynomials multiply back to x^N - 1") {
    for (unsigned N : {1u, 2u, 6u, 12u, 20u, 30u, 36u, 105u}) {
        IntPoly prod{std::vector<mpz_class>{1}};
        for (unsigned d = 1; d <= N; ++d)
            if (N % d == 0) prod = prod * cyclotomic(d);
        std::vector<mpz_class> xn(N + 1, 0);
        xn[0] = -1;
        xn[N] = 1;
        CHECK(prod == IntPoly(std::move(xn)));
    }
}

TEST_CASE("cyclotomic degrees and the first non-flat coefficient") {
    for (unsigned N = 1; N <= 60; ++N)
        CHECK(cyclotomic(N).degree() == static_cast<int>(euler_phi(N)));
    // Phi_105 is the first cyclotomic polynomial with a coefficient of
    // absolute value 2.
    IntPoly p = cyclotomic(105);
    bool has2 = false;
    for (const auto& c : p.coeffs())
        if (abs(c) == 2) has2 = true;
    CHECK(has2);
    for (unsigned N = 1; N < 105; ++N) {
        IntPoly q = cyclotomic(N);
        for (const auto& c : q.coeffs()) CHECK(abs(c) <= 1);
    }
}

TEST_CASE("euler phi against a brute-force gcd count") {
    for (unsigned n = 1; n <= 200; ++n) {
        unsigned count = 0;
        for (unsigned k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("cyclotomic candidates cover exactly the small-phi orders") {
    auto cand = cyclotomic_candidates(4);
    std::vector<unsigned> expect{1, 2, 3, 4, 5, 6, 8, 10, 12};
    CHECK(cand == expect);
}

TEST_CASE("minpoly of 2cos(2pi/N) vanishes numerically and has degree phi(N)/2") {
    for (unsigned N : {3u, 5u, 7u, 9u, 12u, 16u, 30u}) {
        IntPoly m = minpoly_two_cos(N);
        CHECK(m.degree() == static_cast<int>(euler_phi(N) / 2));
        double x = 2.0 * std::cos(2.0 * M_PI / N);
        double v = 0, scale = 0;
        for (int i = m.degree(); i >= 0; --i) {
            v = v * x + m.coeff(i).get_d();
            scale = scale * std::abs(x) + std::abs(m.coeff(i).get_d());
        }
        CHECK(std::abs(v) < 1e-9 * (scale + 1));
    }
}

TEST_CASE("double cover transform on known inputs") {
    // t = (x^2+1)/(2x): for p = t the numerator is x^2 + 1
    CHECK(chebyshev_double_cover(parse_poly("t")) == parse_poly("t^2+1"));
    // p = 2t - 1 has root cos(pi/3); its double cover is Phi_6 = x^2 - x + 1
    CHECK(chebyshev_double_cover(parse_poly("2*t-1")) == parse_poly("t^2-t+1"));
    // degree doubles, and the transform is reciprocal
    IntPoly r = chebyshev_double_cover(parse_poly("8*t^3+8*t^2+6*t+1"));
    CHECK(r.degree() == 6);
    for (int i = 0; i <= r.degree(); ++i)
        CHECK(r.coeff(i) == r.coeff(r.degree() - i));
}

TEST_CASE("scale_variable and eval_at") {
    IntPoly p = parse_poly("t^2-3*t+2");
    CHECK(scale_variable(p, 2) == parse_poly("4*t^2-6*t+2"));
    CHECK(eval_at(p, mpq_class(1)) == 0);
    CHECK(eval_at(p, mpq_class(1, 2)) == mpq_class(3, 4));
    CHECK(sign_at(p, mpq_class(3, 2)) == -1);
}

TEST_CASE("format and parse round-trip") {
    rng.seed(2024ul);
    for (int iter = 0; iter < 40; ++iter) {
        IntPoly p = random_poly(8, 100);
        CHECK(parse_poly(format_poly(p)) == p);
    }
    CHECK(format_poly(IntPoly()) == "0");
    CHECK(parse_poly("t^3+t^2-18*t-43").degree() == 3);
}
