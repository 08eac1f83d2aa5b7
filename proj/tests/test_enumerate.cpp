#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qwalk/enumerate.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/numsolve.hpp"
#include "qwalk/stepset.hpp"

using namespace qwalk;

namespace {

// Oracle: walk every path explicitly. Exponential, so only for small n.
void walk(const std::vector<Step>& steps, long x, long y, long left,
          std::vector<mpz_class>& hits, long n) {
    if (x == 0 && y == 0) hits[static_cast<size_t>(n)] += 1;
    if (left == 0) return;
    for (const auto& st : steps) {
        long nx = x + st.dx, ny = y + st.dy;
        if (nx >= 0 && ny >= 0)
            walk(steps, nx, ny, left - 1, hits, n + 1);
    }
}

std::vector<mpz_class> brute_force(const StepSet& s, long n_max) {
    std::vector<mpz_class> hits(static_cast<size_t>(n_max) + 1, 0);
    walk(s.steps(), 0, 0, n_max, hits, 0);
    return hits;
}

mpz_class catalan(long n) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n));
    return b / (n + 1);
}

}  // namespace

TEST_CASE("exact counts equal explicit path enumeration on random step sets") {
    std::mt19937 gen(12345);
    int tested = 0;
    while (tested < 25) {
        std::vector<Step> st;
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy)
                if ((dx || dy) && gen() % 3 == 0) st.push_back({dx, dy});
        if (st.size() < 2 || st.size() > 5) continue;
        StepSet s(st);
        ++tested;
        auto seq = count_excursions(s, 7);
        auto oracle = brute_force(s, 7);
        CHECK(seq.terms == oracle);
    }
}

TEST_CASE("the full eight-step set matches explicit enumeration") {
    std::vector<Step> st;
    for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy)
            if (dx || dy) st.push_back({dx, dy});
    StepSet s(st);
    auto seq = count_excursions(s, 6);
    CHECK(seq.terms == brute_force(s, 6));
}

TEST_CASE("simple walk excursions are products of consecutive Catalan numbers") {
    StepSet s = parse_stepset("(0,1),(1,0),(0,-1),(-1,0)");
    auto seq = count_excursions(s, 30);
    for (long n = 0; n <= 30; ++n) {
        if (n % 2 == 1)
            CHECK(seq.terms[static_cast<size_t>(n)] == 0);
        else
            CHECK(seq.terms[static_cast<size_t>(n)] ==
                  catalan(n / 2) * catalan(n / 2 + 1));
    }
}

TEST_CASE("Kreweras excursions match the closed form") {
    StepSet s = parse_stepset("(1,1),(-1,0),(0,-1)");
    auto seq = count_excursions(s, 30);
    for (long n = 0; n <= 30; ++n) {
        if (n % 3 != 0) {
            CHECK(seq.terms[static_cast<size_t>(n)] == 0);
            continue;
        }
        long m = n / 3;
        mpz_class b, four = 1;
        mpz_bin_uiui(b.get_mpz_t(), 3 * static_cast<unsigned long>(m),
                     static_cast<unsigned long>(m));
        for (long i = 0; i < m; ++i) four *= 4;
        CHECK(seq.terms[static_cast<size_t>(n)] ==
              four * b / ((m + 1) * (2 * m + 1)));
    }
}

TEST_CASE("excursion counts are invariant under transposition") {
    std::mt19937 gen(777);
    int tested = 0;
    while (tested < 20) {
        std::vector<Step> st;
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy)
                if ((dx || dy) && gen() % 2 == 0) st.push_back({dx, dy});
        if (st.size() < 2) continue;
        StepSet s(st);
        ++tested;
        CHECK(count_excursions(s, 12).terms ==
              count_excursions(s.transposed(), 12).terms);
    }
}

TEST_CASE("period detection agrees with the nonzero-index pattern") {
    for (const auto& [tag, s] : recover_fixture_stepsets()) {
        int p = detect_period(s);
        auto seq = count_excursions(s, 16);
        bool odd_all_zero = true;
        for (long n = 1; n <= 16; n += 2)
            if (seq.terms[static_cast<size_t>(n)] != 0) odd_all_zero = false;
        CHECK(p == (odd_all_zero ? 2 : 1));
        CHECK(p == (tag.back() == '*' ? 2 : 1));
    }
}

TEST_CASE("float backend tracks the exact counts") {
    StepSet s = parse_stepset("(0,1),(1,0),(0,-1),(-1,0)");
    double rho_hat = 4.0;
    auto f = count_excursions_float(s, 60, rho_hat);
    auto e = count_excursions(s, 60);
    for (long n = 0; n <= 60; n += 2) {
        double expect = e.terms[static_cast<size_t>(n)].get_d() /
                        std::pow(rho_hat, static_cast<double>(n));
        CHECK(f[static_cast<size_t>(n)] ==
              doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("reweighted walk: excursion probability encloses e_n / rho^n") {
    for (const char* text :
         {"(0,1),(1,0),(0,-1),(-1,0)", "(1,1),(-1,0),(0,-1)",
          "(-1,0),(-1,1),(0,-1),(0,1),(1,0)"}) {
        StepSet s = parse_stepset(text);
        auto cp = solve_critical_point(s, 128);
        REQUIRE(cp.certified);
        Interval rho = eval_rho(s, cp);
        auto e = count_excursions(s, 40);
        for (long n = 1; n <= 40; ++n) {
            Interval p = weighted_excursion_prob(s, cp, n);
            Interval expect = Interval(mpq_class(e.terms[static_cast<size_t>(n)]),
                                       128) /
                              rho.pow(n);
            CHECK(p.intersect(expect));
        }
    }
}

TEST_CASE("reweighted drift encloses zero in both coordinates") {
    int checked = 0;
    for (const auto& [tag, s] : recover_fixture_stepsets()) {
        if (++checked > 10) break;
        auto cp = solve_critical_point(s, 128);
        auto [dx, dy] = drift_check(s, cp);
        CHECK(dx.contains_zero());
        CHECK(dy.contains_zero());
    }
}

TEST_CASE("exact enumeration refuses absurd lengths") {
    StepSet s = parse_stepset("(0,1),(1,0),(0,-1),(-1,0)");
    CHECK_THROWS_AS(count_excursions(s, 401), CapExceeded);
}
