#include "qwalk/intpoly.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace qwalk {

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    std::vector<mpz_class> c(p.coeffs());
    for (auto& x : c) x = ring::divexact(x, g);
    return IntPoly(std::move(c));
}

IntPoly canonical(const IntPoly& p) {
    if (p.is_zero()) return p;
    IntPoly q = primitive_part(p);
    if (sgn(q.lc()) < 0) q = -q;
    return q;
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) return canonical(q);
    if (q.is_zero()) return canonical(p);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), content(p).get_mpz_t(), content(q).get_mpz_t());
    IntPoly a = primitive_part(p), b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return canonical(a).scaled(cg);
}

bool divides(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) throw DivisionByZeroPoly("divides: zero divisor");
    if (q.is_zero()) return true;
    if (q.degree() < p.degree()) return false;
    // Rational long division with exact remainder check.
    std::vector<mpq_class> rem(q.coeffs().begin(), q.coeffs().end());
    int dp = p.degree();
    mpq_class lp(p.lc());
    for (int k = q.degree() - dp; k >= 0; --k) {
        mpq_class qk = rem[static_cast<size_t>(k + dp)] / lp;
        if (sgn(qk) == 0) continue;
        for (int i = 0; i <= dp; ++i)
            rem[static_cast<size_t>(k + i)] -= qk * mpq_class(p.coeff(i));
    }
    for (int i = 0; i < dp; ++i)
        if (sgn(rem[static_cast<size_t>(i)]) != 0) return false;
    return true;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw DivisionByZeroPoly("squarefree_part: zero polynomial");
    // canonical() drops the sign and the integer content, so the divisor
    // must be made primitive too or the division is no longer exact.
    IntPoly g = canonical(gcd(p, p.derivative()));
    if (g.degree() == 0) return canonical(p);
    return canonical(ring::divexact(canonical(p), g));
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic(unsigned N) {
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
    std::vector<mpz_class> xn(N + 1, 0);
    xn[0] = -1;
    xn[N] = 1;
    IntPoly p{std::vector<mpz_class>(xn)};
    for (unsigned d = 1; d < N; ++d)
        if (N % d == 0) p = ring::divexact(p, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(N, p);
    return p;
}

std::vector<unsigned> cyclotomic_candidates(unsigned D) {
    std::vector<unsigned> out;
    for (unsigned N = 1; N <= 2 * D * D; ++N)
        if (euler_phi(N) <= D) out.push_back(N);
    return out;
}

IntPoly chebyshev_double_cover(const IntPoly& p) {
    if (p.is_zero()) throw DivisionByZeroPoly("chebyshev_double_cover: zero polynomial");
    int d = p.degree();
    // (2x)^d * p((x^2+1)/(2x)) = sum_k p_k (x^2+1)^k (2x)^(d-k)
    IntPoly x2p1{std::vector<mpz_class>{1, 0, 1}};
    IntPoly acc;
    IntPoly pow_x2p1{mpz_class(1)};
    for (int k = 0; k <= d; ++k) {
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned>(d - k));
        acc = acc + pow_x2p1.scaled(p.coeff(k) * two_pow).shifted(d - k);
        pow_x2p1 = pow_x2p1 * x2p1;
    }
    return canonical(acc);
}

IntPoly minpoly_two_cos(unsigned N) {
    if (N < 3) throw DomainError("minpoly_two_cos: N must be >= 3");
    IntPoly phi = cyclotomic(N);
    int m = phi.degree() / 2;
    // Write Phi_N(x) = sum_k a_k (x^2+1)^k x^(m-k); then Psi_N(t) = sum a_k t^k.
    IntPoly rem = phi;
    IntPoly x2p1{std::vector<mpz_class>{1, 0, 1}};
    std::vector<IntPoly> pows(static_cast<size_t>(m) + 1);
    pows[0] = IntPoly(mpz_class(1));
    for (int k = 1; k <= m; ++k) pows[static_cast<size_t>(k)] = pows[k - 1] * x2p1;
    std::vector<mpz_class> a(static_cast<size_t>(m) + 1, 0);
    for (int k = m; k >= 0; --k) {
        a[static_cast<size_t>(k)] = rem.coeff(m + k);
        rem = rem - pows[static_cast<size_t>(k)]
                        .scaled(a[static_cast<size_t>(k)])
                        .shifted(m - k);
    }
    if (!rem.is_zero())
        throw Error("minpoly_two_cos: cyclotomic polynomial not palindromic");
    return canonical(IntPoly(std::move(a)));
}

IntPoly scale_variable(const IntPoly& p, const mpz_class& s) {
    std::vector<mpz_class> c(p.coeffs());
    mpz_class f = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] *= f;
        f *= s;
    }
    return IntPoly(std::move(c));
}

mpq_class eval_at(const IntPoly& p, const mpq_class& x) {
    mpq_class v = 0;
    for (int i = p.degree(); i >= 0; --i) v = v * x + mpq_class(p.coeff(i));
    return v;
}

int sign_at(const IntPoly& p, const mpq_class& x) { return sgn(eval_at(p, x)); }

std::string format_poly(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpz_class c = p.coeff(k);
        if (sgn(c) == 0) continue;
        if (sgn(c) > 0 && !first) os << "+";
        if (k == 0) {
            os << c.get_str();
        } else {
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << c.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

}  // namespace

IntPoly parse_poly(const std::string& text, const std::string& var) {
    Cursor cur{text};
    std::map<int, mpz_class> terms;
    bool any = false;
    while (!cur.done()) {
        int sign = 1;
        while (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
            if (cur.peek() == '-') sign = -sign;
            ++cur.i;
        }
        if (cur.done()) throw ParseError("parse_poly: dangling sign in '" + text + "'");
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string num;
            while (cur.i < cur.s.size() &&
                   std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
                num += cur.s[cur.i++];
            coeff = mpz_class(num);
            have_coeff = true;
        }
        int exp = 0;
        cur.skip_ws();
        bool star = false;
        if (cur.i < cur.s.size() && cur.s[cur.i] == '*') {
            ++cur.i;
            star = true;
        }
        cur.skip_ws();
        if (cur.i < cur.s.size() && cur.s.compare(cur.i, var.size(), var) == 0) {
            cur.i += var.size();
            exp = 1;
            cur.skip_ws();
            if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
                ++cur.i;
                cur.skip_ws();
                std::string num;
                while (cur.i < cur.s.size() &&
                       std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
                    num += cur.s[cur.i++];
                if (num.empty()) throw ParseError("parse_poly: missing exponent");
                exp = std::stoi(num);
            }
        } else if (star || !have_coeff) {
            throw ParseError("parse_poly: expected variable '" + var + "' in '" +
                             text + "'");
        }
        terms[exp] += sign * coeff;
        any = true;
    }
    if (!any) throw ParseError("parse_poly: empty input");
    int deg = terms.rbegin()->first;
    std::vector<mpz_class> c(static_cast<size_t>(deg) + 1, 0);
    for (auto& [k, v] : terms) c[static_cast<size_t>(k)] = v;
    return IntPoly(std::move(c));
}

}  // namespace qwalk
