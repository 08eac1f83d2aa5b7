#include "qwalk/fixtures.hpp"

#include <algorithm>
#include <array>

#include "qwalk/enumerate.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/report.hpp"

namespace qwalk {

namespace {

struct Row {
    const char* tag;
    std::array<long, 9> seq;
    const char* rho;
    const char* alpha;
    const char* mu_rho;
    const char* mu_c;
};

// Appendix data: excursion prefixes, printed constants, and minimal
// polynomials (the latter shared within a group, denominators cleared).
constexpr const char* kMuRhoA = "t^4+t^3-8*t^2-36*t-11";
constexpr const char* kMuRhoB = "t^6-11*t^4-32*t^2-256";
constexpr const char* kMuRhoC = "t^5+t^4+t^3-30*t^2-96*t-91";
constexpr const char* kMuRhoD = "t^5-2*t^4-4*t^3-31*t^2+23*t-41";
constexpr const char* kMuRhoE = "t^5+2*t^4-7*t^3-46*t^2-116*t-131";
constexpr const char* kMuRhoF = "t^3+t^2-18*t-43";
constexpr const char* kMuRhoG = "t^6-20*t^4-16*t^2-48";
constexpr const char* kMuRhoH = "t-5";
constexpr const char* kMuRhoI = "t^6+2*t^5-18*t^4-67*t^3-108*t^2-40*t-19";
constexpr const char* kMuRhoJ =
    "t^7+3*t^6-18*t^5-127*t^4-328*t^3-560*t^2-704*t-448";
constexpr const char* kMuRhoK = "t^4-7*t^3+10*t^2-24*t+37";
constexpr const char* kMuRhoL = "t^3-5*t^2-10*t-11";

constexpr const char* kMuC36 = "256*t^8+64*t^6-48*t^4+12*t^2-1";
constexpr const char* kMuC717 = "4*t^6+3*t^4+8*t^2-2";
constexpr const char* kMuC418 = "1024*t^10+2048*t^8+1024*t^6-16*t^4+12*t^2-1";
constexpr const char* kMuC2041 =
    "2048*t^10+2048*t^8+10048*t^6+2320*t^4+6724*t^2-2209";
constexpr const char* kMuC2133 = "1024*t^10+1536*t^8+832*t^6+80*t^4+12*t^2-1";
constexpr const char* kMuC2526 = "64*t^6-64*t^4+28*t^2-5";
constexpr const char* kMuC2732 = "4*t^6+8*t^4+10*t^2-3";
constexpr const char* kMuC4349 =
    "4096*t^12+11264*t^10+27392*t^8+18560*t^6+14560*t^4-11436*t^2+1521";
constexpr const char* kMuC4450 =
    "256*t^14+1472*t^12+3200*t^10+3884*t^8+3368*t^6+1228*t^4+428*t^2-49";

const Row kRows[] = {
    {"3", {1, 0, 1, 2, 2, 13, 21, 67, 231}, "3.799605", "2.610604", kMuRhoA, kMuC36},
    {"4", {1, 0, 0, 2, 2, 0, 16, 44, 28}, "3.608079", "2.720448", kMuRhoC, kMuC418},
    {"5", {1, 0, 1, 2, 2, 14, 21, 76, 252}, "3.799605", "2.318862", kMuRhoA,
     "16*t^4-72*t^3+108*t^2-70*t+17"},
    {"6", {1, 0, 1, 2, 2, 13, 21, 67, 231}, "3.799605", "2.610604", kMuRhoA, kMuC36},
    {"7*", {1, 0, 1, 0, 4, 0, 29, 0, 230}, "3.800378", "2.521116", kMuRhoB, kMuC717},
    {"8", {1, 0, 1, 1, 2, 7, 10, 38, 89}, "3.799605", "3.637724", kMuRhoA, kMuC36},
    {"9", {1, 0, 1, 1, 2, 7, 10, 38, 89}, "3.799605", "3.637724", kMuRhoA, kMuC36},
    {"10", {1, 0, 0, 1, 2, 0, 5, 26, 28}, "3.608079", "3.388025", kMuRhoC, kMuC418},
    {"11*", {1, 0, 0, 0, 2, 0, 6, 0, 42}, "3.800378", "3.918957", kMuRhoB, kMuC717},
    {"12", {1, 0, 0, 1, 0, 1, 5, 1, 18}, "3.799605", "5.136154", kMuRhoA,
     "16*t^4+72*t^3+108*t^2+70*t+17"},
    {"14", {1, 0, 0, 1, 2, 0, 5, 26, 28}, "3.608079", "3.388025", kMuRhoC, kMuC418},
    {"16", {1, 0, 1, 2, 2, 14, 21, 76, 252}, "3.799605", "2.318862", kMuRhoA,
     "16*t^4-72*t^3+108*t^2-70*t+17"},
    {"17*", {1, 0, 1, 0, 4, 0, 29, 0, 230}, "3.800378", "2.521116", kMuRhoB, kMuC717},
    {"18", {1, 0, 0, 2, 2, 0, 16, 44, 28}, "3.608079", "2.720448", kMuRhoC, kMuC418},
    {"19*", {1, 0, 0, 0, 2, 0, 6, 0, 42}, "3.800378", "3.918957", kMuRhoB, kMuC717},
    {"20", {1, 0, 1, 2, 4, 14, 45, 120, 468}, "4.372923", "2.482876", kMuRhoD,
     kMuC2041},
    {"21", {1, 0, 1, 1, 4, 7, 25, 64, 201}, "4.214757", "3.347502", kMuRhoE,
     kMuC2133},
    {"23", {1, 0, 2, 1, 10, 14, 75, 178, 738}, "4.729032", "3.320192", kMuRhoF,
     "8*t^3+8*t^2+6*t+1"},
    {"24", {1, 0, 2, 2, 10, 26, 86, 312, 1022}, "4.729032", "2.757466", kMuRhoF,
     "8*t^3-8*t^2+6*t-1"},
    {"25", {1, 0, 2, 2, 11, 27, 101, 348, 1237}, "4.729032", "2.397625", kMuRhoF,
     kMuC2526},
    {"26", {1, 0, 2, 2, 11, 27, 101, 348, 1237}, "4.729032", "2.397625", kMuRhoF,
     kMuC2526},
    {"27*", {1, 0, 2, 0, 13, 0, 124, 0, 1427}, "4.569086", "2.503534", kMuRhoG,
     kMuC2732},
    {"28", {1, 0, 1, 2, 4, 13, 36, 111, 343}, "4.214757", "2.742114", kMuRhoE,
     kMuC2133},
    {"29*", {1, 0, 1, 0, 5, 0, 35, 0, 313}, "4.569086", "3.985964", kMuRhoG,
     kMuC2732},
    {"30", {1, 0, 1, 1, 6, 17, 58, 202, 749}, "5", "2.722859", kMuRhoH, "4*t-1"},
    {"31", {1, 0, 0, 1, 2, 1, 11, 27, 60}, "4.372923", "4.070925", kMuRhoD,
     kMuC2041},
    {"32*", {1, 0, 2, 0, 13, 0, 124, 0, 1427}, "4.569086", "2.503534", kMuRhoG,
     kMuC2732},
    {"33", {1, 0, 1, 1, 4, 7, 25, 64, 201}, "4.214757", "3.347502", kMuRhoE,
     kMuC2133},
    {"34*", {1, 0, 1, 0, 5, 0, 35, 0, 313}, "4.569086", "3.985964", kMuRhoG,
     kMuC2732},
    {"35", {1, 0, 1, 1, 3, 8, 19, 65, 177}, "4.729032", "4.514931", kMuRhoF,
     kMuC2526},
    {"36", {1, 0, 0, 1, 2, 1, 11, 27, 60}, "4.372923", "4.070925", kMuRhoD,
     kMuC2041},
    {"37", {1, 0, 1, 2, 4, 13, 36, 111, 343}, "4.214757", "2.742114", kMuRhoE,
     kMuC2133},
    {"38", {1, 0, 2, 2, 10, 26, 86, 312, 1022}, "4.729032", "2.757466", kMuRhoF,
     "8*t^3-8*t^2+6*t-1"},
    {"39", {1, 0, 1, 1, 3, 8, 19, 65, 177}, "4.729032", "4.514931", kMuRhoF,
     kMuC2526},
    {"40", {1, 0, 0, 2, 4, 8, 28, 108, 372}, "5", "3.383396", kMuRhoH, "4*t+1"},
    {"41", {1, 0, 1, 2, 4, 14, 45, 120, 468}, "4.372923", "2.482876", kMuRhoD,
     kMuC2041},
    {"42", {1, 0, 0, 2, 4, 8, 28, 108, 372}, "5", "3.383396", kMuRhoH, "4*t+1"},
    {"43", {1, 0, 2, 2, 13, 27, 140, 392, 1882}, "5.064419", "2.491053", kMuRhoI,
     kMuC4349},
    {"44", {1, 0, 2, 3, 15, 51, 208, 893, 3841}, "5.891838", "2.679783", kMuRhoJ,
     kMuC4450},
    {"45", {1, 0, 1, 1, 5, 8, 40, 91, 406}, "5.064419", "4.036441", kMuRhoI,
     kMuC4349},
    {"46", {1, 0, 1, 2, 8, 22, 101, 364, 1618}, "5.799605", "2.959600", kMuRhoK,
     "16*t^4-8*t^3+220*t^2-38*t+1"},
    {"47", {1, 0, 1, 3, 7, 29, 101, 404, 1657}, "5.891838", "3.471058", kMuRhoJ,
     kMuC4450},
    {"48", {1, 0, 1, 1, 5, 8, 40, 91, 406}, "5.064419", "4.036441", kMuRhoI,
     kMuC4349},
    {"49", {1, 0, 2, 2, 13, 27, 140, 392, 1882}, "5.064419", "2.491053", kMuRhoI,
     kMuC4349},
    {"50", {1, 0, 2, 3, 15, 51, 208, 893, 3841}, "5.891838", "2.679783", kMuRhoJ,
     kMuC4450},
    {"51", {1, 0, 1, 3, 7, 29, 101, 404, 1657}, "5.891838", "3.471058", kMuRhoJ,
     kMuC4450},
    {"52", {1, 0, 1, 1, 8, 18, 90, 301, 1413}, "5.799605", "3.042101", kMuRhoK,
     "16*t^4+8*t^3+220*t^2+38*t+1"},
    {"53", {1, 0, 1, 2, 8, 22, 101, 364, 1618}, "5.799605", "2.959600", kMuRhoK,
     "16*t^4-8*t^3+220*t^2-38*t+1"},
    {"54", {1, 0, 3, 5, 30, 111, 548, 2586, 13087}, "6.729032", "2.667986",
     kMuRhoL, "8*t^3+22*t-7"},
    {"55", {1, 0, 2, 4, 16, 64, 266, 1210, 5630}, "6.729032", "3.497037", kMuRhoL,
     "8*t^3+22*t+7"},
    {"56", {1, 0, 2, 4, 16, 64, 266, 1210, 5630}, "6.729032", "3.497037", kMuRhoL,
     "8*t^3+22*t+7"},
};

long tag_number(const std::string& tag) {
    return std::stol(tag);  // ignores a trailing star
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        for (const Row& r : kRows) {
            Fixture f;
            f.tag = r.tag;
            f.periodic = f.tag.back() == '*';
            for (long x : r.seq) f.sequence.emplace_back(x);
            f.rho_decimal = r.rho;
            f.alpha_decimal = r.alpha;
            f.mu_rho = parse_poly(r.mu_rho);
            f.mu_c = parse_poly(r.mu_c);
            v.push_back(std::move(f));
        }
        return v;
    }();
    return all;
}

const std::map<std::string, StepSet>& recover_fixture_stepsets() {
    static const std::map<std::string, StepSet> result = [] {
        const std::vector<Step> all_steps = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                             {0, 1},   {1, -1}, {1, 0},  {1, 1}};
        // sequence of e_0..e_8 -> candidate step sets, lex sorted
        std::map<std::vector<mpz_class>, std::vector<StepSet>> by_seq;
        for (unsigned mask = 1; mask < 256; ++mask) {
            std::vector<Step> steps;
            for (int b = 0; b < 8; ++b)
                if (mask & (1u << b)) steps.push_back(all_steps[b]);
            StepSet s(std::move(steps));
            if (is_singular(s) || is_half_plane_confined(s)) continue;
            by_seq[count_excursions(s, 8).terms].push_back(s);
        }
        for (auto& [seq, sets] : by_seq) std::sort(sets.begin(), sets.end());

        // fixtures sharing a sequence are a transpose pair
        std::map<std::vector<mpz_class>, std::vector<std::string>> tags_by_seq;
        for (const Fixture& f : fixtures())
            tags_by_seq[f.sequence].push_back(f.tag);

        std::map<std::string, StepSet> out;
        for (auto& [seq, tags] : tags_by_seq) {
            auto it = by_seq.find(seq);
            if (it == by_seq.end())
                throw UnmatchedFixture(
                    "recover_fixture_stepsets: no candidates for tag " +
                    tags.front());
            std::vector<StepSet> sets = it->second;
            if (sets.size() > tags.size()) {
                // Distinct models can share a 9-term prefix; winnow by the
                // printed constants (identical within a transpose pair).
                const Fixture* fx = nullptr;
                for (const Fixture& f : fixtures())
                    if (f.tag == tags.front()) fx = &f;
                std::vector<StepSet> kept;
                for (const StepSet& s : sets) {
                    try {
                        CriticalPoint cp = solve_critical_point(s, 128);
                        Interval alpha = alpha_from_c(eval_c(s, cp));
                        if (matches_decimal(eval_rho(s, cp), fx->rho_decimal) &&
                            matches_decimal(-alpha, fx->alpha_decimal))
                            kept.push_back(s);
                    } catch (const Error&) {
                    }
                }
                // Time reversal (negating every step) preserves all
                // excursion counts, so a model and its reversal are
                // indistinguishable here; any choice is data-equivalent.
                if (kept.size() > tags.size())
                    kept.erase(kept.begin() + static_cast<long>(tags.size()),
                               kept.end());
                sets = std::move(kept);
            }
            if (sets.size() != tags.size())
                throw UnmatchedFixture(
                    "recover_fixture_stepsets: candidate count mismatch for tag " +
                    tags.front());
            std::sort(tags.begin(), tags.end(),
                      [](const std::string& a, const std::string& b) {
                          return tag_number(a) < tag_number(b);
                      });
            for (size_t i = 0; i < tags.size(); ++i)
                out.emplace(tags[i], sets[i]);
        }
        if (out.size() != 51)
            throw UnmatchedFixture("recover_fixture_stepsets: expected 51 tags");
        return out;
    }();
    return result;
}

}  // namespace qwalk
