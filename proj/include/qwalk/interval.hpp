#pragma once

// Dyadic interval arithmetic with outward rounding, backed by MPFR.
// Endpoints are arbitrary-precision binary floats; every operation rounds
// the lower endpoint down and the upper endpoint up.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace qwalk {

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(long lo, long hi, mpfr_prec_t prec);
    Interval(const mpq_class& v, mpfr_prec_t prec);
    Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval point(long v, mpfr_prec_t prec) { return Interval(v, v, prec); }
    static Interval pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // throws if o contains 0

    Interval sqrt() const;   // throws if possibly negative
    Interval exp() const;
    Interval log() const;    // throws if possibly <= 0
    Interval acos() const;   // argument clamped to [-1,1] must hold strictly
    Interval pow(long e) const;  // integer power; requires lo > 0 if e < 0

    Interval hull(const Interval& o) const;
    bool intersect(const Interval& o, Interval* out = nullptr) const;

    bool contains_zero() const;
    bool contains(const mpq_class& v) const;
    bool strictly_inside(const Interval& outer) const;
    int sign() const;  // -1, 0 (straddles), +1

    double width() const;
    double mid_d() const;
    mpq_class lo_q() const;
    mpq_class hi_q() const;
    mpq_class mid_q() const;

    // 10-significant-digit decimal of the midpoint, e.g. "4.729031538".
    std::string decimal(int sig_digits = 10) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

}  // namespace qwalk
