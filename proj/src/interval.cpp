#include "qwalk/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstring>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long lo, long hi, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_si(lo_, lo, MPFR_RNDD);
    mpfr_set_si(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const mpq_class& v, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec)
    : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four corner products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four corner products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw DomainError("interval division by interval containing 0");
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw ZeroHessianTerm("sqrt of possibly negative interval");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw DomainError("log of possibly nonpositive interval");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::acos() const {
    if (mpfr_cmp_si(lo_, -1) < 0 || mpfr_cmp_si(hi_, 1) > 0)
        throw DomainError("acos argument outside [-1,1]");
    Interval r(prec_);
    mpfr_acos(r.lo_, hi_, MPFR_RNDD);  // acos is decreasing
    mpfr_acos(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::pow(long e) const {
    Interval one = Interval::point(1, prec_);
    if (e == 0) return one;
    if (e < 0) {
        if (mpfr_sgn(lo_) <= 0)
            throw DomainError("negative power of interval touching 0");
        return one / pow(-e);
    }
    Interval acc = one, base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Interval Interval::hull(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

bool Interval::intersect(const Interval& o, Interval* out) const {
    if (mpfr_cmp(hi_, o.lo_) < 0 || mpfr_cmp(o.hi_, lo_) < 0) return false;
    if (out) {
        Interval r(std::max(prec_, o.prec_));
        mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
        *out = r;
    }
    return true;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::strictly_inside(const Interval& outer) const {
    return mpfr_cmp(outer.lo(), lo_) < 0 && mpfr_cmp(hi_, outer.hi()) < 0;
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

double Interval::width() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

double Interval::mid_d() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
}

namespace {
mpq_class mpfr_to_q(const mpfr_t& x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    mpq_class q;
    mpfr_exp_t e;
    mpz_class m;
    e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    q = m;
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= p;
    }
    q.canonicalize();
    return q;
}
}  // namespace

mpq_class Interval::lo_q() const { return mpfr_to_q(lo_); }
mpq_class Interval::hi_q() const { return mpfr_to_q(hi_); }
mpq_class Interval::mid_q() const { return (lo_q() + hi_q()) / 2; }

std::string Interval::decimal(int sig_digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_ + 8);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", sig_digits);
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), fmt, m);
    mpfr_clear(m);
    std::string s(buf);
    // Normalize "5" -> "5.000000000" style padding to sig_digits digits.
    if (s.find('e') == std::string::npos && s.find('E') == std::string::npos) {
        size_t digits = 0;
        bool seen_nonzero = false;
        for (char c : s)
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (c != '0') seen_nonzero = true;
                if (seen_nonzero) ++digits;
            }
        if (digits < static_cast<size_t>(sig_digits)) {
            if (s.find('.') == std::string::npos) s += '.';
            while (digits++ < static_cast<size_t>(sig_digits)) s += '0';
        }
    }
    return s;
}

}  // namespace qwalk
