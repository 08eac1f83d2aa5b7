#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwalk/elim.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/numsolve.hpp"
#include "qwalk/stepset.hpp"

using namespace qwalk;

TEST_CASE("eliminants of exactly solvable models carry the known roots") {
    StepSet simple = parse_stepset("(0,1),(1,0),(0,-1),(-1,0)");
    Eliminant er = eliminant_rho(simple);
    CHECK(divides(parse_poly("t-4"), er.poly));
    Eliminant ec = eliminant_c(simple);
    CHECK(divides(parse_poly("t"), ec.poly));

    StepSet krew = parse_stepset("(1,1),(-1,0),(0,-1)");
    CHECK(divides(parse_poly("t-3"), eliminant_rho(krew).poly));
    CHECK(divides(parse_poly("2*t-1"), eliminant_c(krew).poly));
}

TEST_CASE("eliminants are squarefree, primitive, and annotated") {
    int checked = 0;
    for (const auto& [tag, s] : recover_fixture_stepsets()) {
        if (++checked > 8) break;
        for (const Eliminant& e : {eliminant_rho(s), eliminant_c(s)}) {
            CHECK(e.poly.degree() > 0);
            CHECK(content(e.poly) == 1);
            CHECK(sgn(e.poly.lc()) > 0);
            CHECK(gcd(e.poly, e.poly.derivative()).degree() == 0);
            CHECK(!e.provenance.empty());
        }
    }
}

TEST_CASE("every fixture eliminant vanishes on the certified value") {
    // independent numeric route: interval critical point vs algebraic
    // elimination; the certified enclosure of the target must contain a
    // root of the eliminant.
    for (const auto& [tag, s] : recover_fixture_stepsets()) {
        auto cp = solve_critical_point(s, 192);
        Interval rho = eval_rho(s, cp);
        Interval c = eval_c(s, cp);
        CHECK_NOTHROW(match_root(eliminant_rho(s).poly, rho));
        CHECK_NOTHROW(match_root(eliminant_c(s).poly, c));
    }
}

TEST_CASE("minimal polynomials divide the eliminants") {
    auto& sets = recover_fixture_stepsets();
    for (const auto& fx : fixtures()) {
        const StepSet& s = sets.at(fx.tag);
        CHECK(divides(fx.mu_rho, eliminant_rho(s).poly));
        CHECK(divides(canonical(fx.mu_c), eliminant_c(s).poly));
    }
}

TEST_CASE("half-plane step sets are rejected") {
    CHECK_THROWS_AS(eliminant_rho(parse_stepset("(1,0),(0,1),(1,1)")),
                    HalfPlaneConfined);
}

TEST_CASE("symmetric step sets use the diagonal restriction") {
    StepSet s = parse_stepset("(-1,0),(-1,1),(0,-1),(1,-1),(1,1)");
    Eliminant e = eliminant_rho(s);
    CHECK(divides(parse_poly("t-5"), e.poly));
    CHECK(e.provenance.find("diagonal") != std::string::npos);
}
