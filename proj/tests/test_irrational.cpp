#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwalk/errors.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/irrational.hpp"
#include "qwalk/stepset.hpp"

using namespace qwalk;

namespace {

// Wrap a rational c as an eliminant plus isolator for direct certification.
IrrationalityCertificate certify_rational_c(long num, long den) {
    mpq_class c(num, den);
    c.canonicalize();
    IntPoly p(std::vector<mpz_class>{-c.get_num(), c.get_den()});
    Eliminant e{p, ElimTarget::c, "test"};
    AlgebraicNumber a{p, c, c};
    return certify_alpha_irrational(e, a);
}

}  // namespace

TEST_CASE("rational witnesses at the cosines of rational angles") {
    // Niven: the only rational c in (-1,1) with arccos(c)/pi rational are
    // 0 and +-1/2.
    auto zero = certify_rational_c(0, 1);
    CHECK(zero.method == IrrationalityCertificate::Method::RationalWitness);
    CHECK(*zero.witness == mpq_class(1, 2));
    auto half = certify_rational_c(1, 2);
    CHECK(half.method == IrrationalityCertificate::Method::RationalWitness);
    CHECK(*half.witness == mpq_class(1, 3));
    auto neg_half = certify_rational_c(-1, 2);
    CHECK(neg_half.method == IrrationalityCertificate::Method::RationalWitness);
    CHECK(*neg_half.witness == mpq_class(2, 3));
}

TEST_CASE("other rational c values certify as irrational angles") {
    for (auto [num, den] : std::initializer_list<std::pair<long, long>>{
             {1, 3}, {-2, 5}, {3, 4}, {7, 9}}) {
        auto cert = certify_rational_c(num, den);
        CHECK(cert.method == IrrationalityCertificate::Method::CyclotomicSweep);
        CHECK(!cert.witness.has_value());
    }
}

TEST_CASE("quadratic cosines of rational angles are caught by the sweep") {
    // c = cos(pi/5) is a root of 4t^2 - 2t - 1
    IntPoly p = parse_poly("4*t^2-2*t-1");
    Eliminant e{p, ElimTarget::c, "test"};
    AlgebraicNumber a{p, mpq_class(8, 10), mpq_class(9, 10)};
    auto cert = certify_alpha_irrational(e, a);
    CHECK(cert.method == IrrationalityCertificate::Method::RationalWitness);
    CHECK(*cert.witness == mpq_class(1, 5));
    // the conjugate root cos(3pi/5)
    AlgebraicNumber b{p, mpq_class(-4, 10), mpq_class(-2, 10)};
    auto cert2 = certify_alpha_irrational(e, b);
    CHECK(cert2.method == IrrationalityCertificate::Method::RationalWitness);
    CHECK(*cert2.witness == mpq_class(3, 5));
}

TEST_CASE("witness fractions are reduced and strictly inside (0,1)") {
    for (auto [num, den] : std::initializer_list<std::pair<long, long>>{
             {0, 1}, {1, 2}, {-1, 2}}) {
        auto cert = certify_rational_c(num, den);
        REQUIRE(cert.witness.has_value());
        mpq_class w = *cert.witness;
        CHECK(w > 0);
        CHECK(w < 1);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), w.get_num().get_mpz_t(), w.get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(cert.witness_N.has_value());
    }
}

TEST_CASE("sweep flags no rational angle for any embedded model") {
    auto& sets = recover_fixture_stepsets();
    int checked = 0;
    for (const auto& fx : fixtures()) {
        if (++checked > 12) break;
        Verdict v = non_dfinite_verdict(sets.at(fx.tag));
        CHECK(v.conclusion == Verdict::Conclusion::NotDFinite);
        CHECK(v.certificate.method ==
              IrrationalityCertificate::Method::CyclotomicSweep);
        bool swept = !v.certificate.flagged_N.empty() ||
                     !v.certificate.checked_N.empty();
        CHECK(swept);
    }
}

TEST_CASE("verdicts for the classical finite-group models stay inconclusive") {
    Verdict simple = non_dfinite_verdict(parse_stepset("(0,1),(1,0),(0,-1),(-1,0)"));
    CHECK(simple.conclusion == Verdict::Conclusion::NoConclusion);
    CHECK(simple.certificate.method ==
          IrrationalityCertificate::Method::RationalWitness);
    CHECK(*simple.certificate.witness == mpq_class(1, 2));
    CHECK(simple.hypotheses.period == 2);
    REQUIRE(simple.alpha.has_value());
    CHECK(simple.alpha->contains(mpq_class(-3)));

    Verdict krew = non_dfinite_verdict(parse_stepset("(1,1),(-1,0),(0,-1)"));
    CHECK(krew.conclusion == Verdict::Conclusion::NoConclusion);
    CHECK(*krew.certificate.witness == mpq_class(1, 3));
    CHECK(krew.alpha->contains(mpq_class(-5, 2)));
}

TEST_CASE("half-plane models fail the hypotheses") {
    Verdict v = non_dfinite_verdict(parse_stepset("(1,0),(0,1),(1,1)"));
    CHECK(v.conclusion == Verdict::Conclusion::HypothesisFailed);
    CHECK(v.hypotheses.half_plane_confined);
    CHECK(v.hypotheses.half_plane_witness.has_value());
}

TEST_CASE("group order from a rational exponent") {
    // order = 2 * |numerator of alpha + 1|, cross-checked by brute force
    for (auto [num, den] : std::initializer_list<std::pair<long, long>>{
             {-3, 1}, {-5, 2}, {-7, 3}, {-9, 4}, {-13, 6}}) {
        mpq_class alpha(num, den);
        alpha.canonicalize();
        mpq_class ap1 = alpha + 1;
        long l = 1;
        while (l < 1000) {
            mpq_class quot = mpq_class(l) / ap1;
            if (quot.get_den() == 1) break;
            ++l;
        }
        CHECK(group_order_from_alpha(alpha) == 2 * l);
    }
    CHECK(group_order_from_alpha(mpq_class(-5, 2)) == 6);  // 2*|num(-3/2)|
    CHECK_THROWS_AS(group_order_from_alpha(mpq_class(-1)), DomainError);
}

TEST_CASE("the sweep result can only strengthen toward non-D-finiteness") {
    // A NotDFinite verdict must never carry a rational witness, and a
    // rational witness must never co-occur with NotDFinite.
    for (const char* text :
         {"(0,1),(1,0),(0,-1),(-1,0)", "(1,1),(-1,0),(0,-1)",
          "(-1,0),(-1,1),(0,-1),(0,1),(1,0)",
          "(-1,-1),(-1,1),(0,1),(1,-1)"}) {
        Verdict v = non_dfinite_verdict(parse_stepset(text));
        if (v.conclusion == Verdict::Conclusion::NotDFinite)
            CHECK(!v.certificate.witness.has_value());
        if (v.certificate.witness.has_value())
            CHECK(v.conclusion == Verdict::Conclusion::NoConclusion);
    }
}
