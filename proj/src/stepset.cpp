#include "qwalk/stepset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qwalk {

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw InvalidStep("step set must be nonempty");
    std::sort(steps_.begin(), steps_.end());
    for (size_t i = 0; i + 1 < steps_.size(); ++i)
        if (steps_[i] == steps_[i + 1])
            throw InvalidStep("duplicate step " + std::to_string(steps_[i].dx) +
                              "," + std::to_string(steps_[i].dy));
    for (const auto& s : steps_)
        if (s.dx == 0 && s.dy == 0) throw InvalidStep("zero step (0,0) forbidden");
    small_step_ = std::all_of(steps_.begin(), steps_.end(), [](const Step& s) {
        return s.dx >= -1 && s.dx <= 1 && s.dy >= -1 && s.dy <= 1;
    });
}

StepSet StepSet::transposed() const {
    std::vector<Step> t;
    t.reserve(steps_.size());
    for (const auto& s : steps_) t.push_back({s.dy, s.dx});
    return StepSet(std::move(t));
}

std::string StepSet::format() const {
    std::ostringstream os;
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (i) os << ",";
        os << "(" << steps_[i].dx << "," << steps_[i].dy << ")";
    }
    return os.str();
}

StepSet parse_stepset(const std::string& text) {
    std::vector<Step> steps;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("parse_stepset: expected '") + c +
                             "' in '" + text + "'");
        ++i;
    };
    auto read_int = [&]() -> long {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start || (i == start + 1 && !std::isdigit(
                                                 static_cast<unsigned char>(text[start]))))
            throw ParseError("parse_stepset: expected integer in '" + text + "'");
        return std::stol(text.substr(start, i - start));
    };
    while (true) {
        expect('(');
        long dx = read_int();
        expect(',');
        long dy = read_int();
        expect(')');
        steps.push_back({dx, dy});
        skip_ws();
        if (i >= text.size()) break;
        expect(',');
    }
    return StepSet(std::move(steps));
}

LaurentPoly2::LaurentPoly2(std::map<std::pair<long, long>, mpz_class> terms)
    : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

LaurentPoly2 LaurentPoly2::dx() const {
    std::map<std::pair<long, long>, mpz_class> out;
    for (const auto& [e, c] : terms_)
        if (e.first != 0) out[{e.first - 1, e.second}] += c * e.first;
    return LaurentPoly2(std::move(out));
}

LaurentPoly2 LaurentPoly2::dy() const {
    std::map<std::pair<long, long>, mpz_class> out;
    for (const auto& [e, c] : terms_)
        if (e.second != 0) out[{e.first, e.second - 1}] += c * e.second;
    return LaurentPoly2(std::move(out));
}

std::map<std::pair<long, long>, mpz_class> LaurentPoly2::numerator_terms() const {
    long mi = 0, mj = 0;
    for (const auto& [e, c] : terms_) {
        mi = std::min(mi, e.first);
        mj = std::min(mj, e.second);
    }
    std::map<std::pair<long, long>, mpz_class> out;
    for (const auto& [e, c] : terms_) out[{e.first - mi, e.second - mj}] = c;
    return out;
}

std::string LaurentPoly2::format() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (sgn(c) > 0 && !first) os << "+";
        if (sgn(c) < 0) os << "-";
        mpz_class a = abs(c);
        bool printed = false;
        if (a != 1 || (e.first == 0 && e.second == 0)) {
            os << a.get_str();
            printed = true;
        }
        auto var = [&](const char* name, long k) {
            if (k == 0) return;
            if (printed) os << "*";
            os << name;
            if (k != 1) os << "^" << k;
            printed = true;
        };
        var("x", e.first);
        var("y", e.second);
        first = false;
    }
    return os.str();
}

LaurentPoly2 char_poly(const StepSet& s) {
    std::map<std::pair<long, long>, mpz_class> terms;
    for (const auto& st : s.steps()) terms[{st.dx, st.dy}] = 1;
    return LaurentPoly2(std::move(terms));
}

namespace {

// Assemble terms (i - exponent of x, j - exponent of y) into a BiPoly with
// outer variable y, then canonicalize: primitive, positive leading
// coefficient under graded-lex (y before x).
BiPoly assemble_xy(const std::map<std::pair<long, long>, mpz_class>& terms) {
    if (terms.empty()) return BiPoly();
    long dy = 0, dx = 0;
    for (const auto& [e, c] : terms) {
        dx = std::max(dx, e.first);
        dy = std::max(dy, e.second);
    }
    std::vector<IntPoly> ycoeffs(static_cast<size_t>(dy) + 1);
    for (long j = 0; j <= dy; ++j) {
        std::vector<mpz_class> xc(static_cast<size_t>(dx) + 1, 0);
        bool any = false;
        for (const auto& [e, c] : terms)
            if (e.second == j) {
                xc[static_cast<size_t>(e.first)] = c;
                any = true;
            }
        if (any) ycoeffs[static_cast<size_t>(j)] = IntPoly(std::move(xc));
    }
    BiPoly p{std::move(ycoeffs)};
    // content over Z
    mpz_class g = 0;
    for (const auto& cy : p.coeffs())
        for (const auto& c : cy.coeffs())
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(g) == 0) return p;
    // sign of the graded-lex leading term (highest i+j, ties by higher i)
    long best_i = -1, best_j = -1;
    mpz_class lead = 0;
    for (const auto& [e, c] : terms) {
        long ti = e.first, tj = e.second;
        long bd = best_i + best_j;
        if (ti + tj > bd || (ti + tj == bd && ti > best_i)) {
            best_i = ti;
            best_j = tj;
            lead = c;
        }
    }
    if (sgn(lead) < 0) g = -g;
    std::vector<IntPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& cy : p.coeffs()) {
        std::vector<mpz_class> xc(cy.coeffs());
        for (auto& c : xc) c = ring::divexact(c, g);
        out.push_back(IntPoly(std::move(xc)));
    }
    return BiPoly(std::move(out));
}

}  // namespace

BiPoly numer_bipoly(const LaurentPoly2& p) {
    return assemble_xy(p.numerator_terms());
}

Partials partials(const LaurentPoly2& chi) {
    if (chi.is_zero()) throw Error("partials: zero polynomial");
    Partials out;
    out.chi_x = numer_bipoly(chi.dx());
    out.chi_y = numer_bipoly(chi.dy());
    out.chi_xx = chi.dx().dx();
    out.chi_xy = chi.dx().dy();
    out.chi_yy = chi.dy().dy();
    return out;
}

bool is_singular(const StepSet& s) {
    if (!s.small_step())
        throw NotSmallStep("is_singular: step coordinates outside {-1,0,1}");
    for (const auto& st : s.steps()) {
        if ((st.dx == -1 && st.dy == 0) || (st.dx == -1 && st.dy == -1) ||
            (st.dx == 0 && st.dy == -1))
            return false;
    }
    return true;
}

namespace {

long lgcd(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

int half_index(long x, long y) {
    // 0 for upper half (y>0 or y==0, x>0), 1 for lower
    if (y > 0 || (y == 0 && x > 0)) return 0;
    return 1;
}

long cross(const std::pair<long, long>& a, const std::pair<long, long>& b) {
    return a.first * b.second - a.second * b.first;
}
long dot(const std::pair<long, long>& a, const std::pair<long, long>& b) {
    return a.first * b.first + a.second * b.second;
}

bool angle_less(const std::pair<long, long>& a, const std::pair<long, long>& b) {
    int ha = half_index(a.first, a.second), hb = half_index(b.first, b.second);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

}  // namespace

std::optional<std::pair<long, long>> is_half_plane_confined(const StepSet& s) {
    // Reduce steps to distinct directions, sort by angle, look for a gap >= pi.
    std::set<std::pair<long, long>> dirset;
    for (const auto& st : s.steps()) {
        long g = lgcd(st.dx, st.dy);
        dirset.insert({st.dx / g, st.dy / g});
    }
    std::vector<std::pair<long, long>> dirs(dirset.begin(), dirset.end());
    std::sort(dirs.begin(), dirs.end(), angle_less);

    auto verify = [&](std::pair<long, long> w) -> bool {
        if (w.first == 0 && w.second == 0) return false;
        for (const auto& st : s.steps())
            if (w.first * st.dx + w.second * st.dy < 0) return false;
        return true;
    };

    size_t n = dirs.size();
    for (size_t k = 0; k < n; ++k) {
        const auto& u = dirs[k];                 // gap start
        const auto& w = dirs[(k + 1) % n];       // gap end (next ccw)
        bool big_gap;
        if (n == 1) {
            big_gap = true;
        } else {
            long cr = cross(u, w);
            big_gap = cr < 0 || (cr == 0 && dot(u, w) < 0);
        }
        if (!big_gap) continue;
        // All directions lie in the ccw arc from w to u of span <= pi.
        std::pair<long, long> cand1{u.first + w.first, u.second + w.second};
        if (cand1.first != 0 || cand1.second != 0) {
            long g = lgcd(cand1.first, cand1.second);
            cand1 = {cand1.first / g, cand1.second / g};
            if (verify(cand1)) return cand1;
        }
        std::pair<long, long> cand2{-w.second, w.first};  // rotate w by +90 deg
        if (verify(cand2)) return cand2;
        std::pair<long, long> cand3{u.second, -u.first};  // rotate u by -90 deg
        if (verify(cand3)) return cand3;
    }
    return std::nullopt;
}

std::pair<long, long> drift(const StepSet& s) {
    long dx = 0, dy = 0;
    for (const auto& st : s.steps()) {
        dx += st.dx;
        dy += st.dy;
    }
    return {dx, dy};
}

bool has_axial_symmetry(const StepSet& s) {
    auto invariant_under = [&](auto&& f) {
        std::set<Step> orig(s.steps().begin(), s.steps().end());
        for (const auto& st : s.steps()) {
            Step im = f(st);
            if (!orig.count(im)) return false;
        }
        return true;
    };
    return invariant_under([](Step st) { return Step{-st.dx, st.dy}; }) ||
           invariant_under([](Step st) { return Step{st.dx, -st.dy}; });
}

bool group_finite_predicate(const StepSet& s) {
    if (is_singular(s))
        throw PredicateOutOfScope(
            "group_finite_predicate: undefined for singular step sets");
    if (has_axial_symmetry(s)) return true;
    auto [dx, dy] = drift(s);
    return dx == 0 && dy == 0 && s.size() != 5;
}

}  // namespace qwalk
