#pragma once

// Generic dense polynomials over an integral domain, used recursively:
// Poly<mpz_class> is Z[t], Poly<Poly<mpz_class>> is Z[t][x], and so on.
// Coefficients are stored constant term first.

#include <gmpxx.h>

#include <cassert>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

template <class R>
class Poly;

namespace ring {

inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline mpz_class one_of(const mpz_class*) { return mpz_class(1); }

// Exact division; quotient must be exact in the ring.
inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <class R>
bool is_zero(const Poly<R>& p);
template <class R>
Poly<R> one_of(const Poly<R>*);
template <class R>
Poly<R> divexact(const Poly<R>& a, const Poly<R>& b);

template <class R>
R ring_one() {
    return one_of(static_cast<const R*>(nullptr));
}

template <class R>
R ring_pow(R base, int e) {
    assert(e >= 0);
    R r = ring_one<R>();
    while (e-- > 0) r = r * base;
    return r;
}

}  // namespace ring

template <class R>
class Poly {
  public:
    Poly() = default;
    explicit Poly(R c) {
        if (!ring::is_zero(c)) coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(R c, int k) {
        Poly p;
        if (ring::is_zero(c)) return p;
        p.coeffs_.assign(static_cast<size_t>(k) + 1, R{});
        p.coeffs_.back() = std::move(c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& lc() const {
        assert(!coeffs_.empty());
        return coeffs_.back();
    }
    R coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return R{};
        return coeffs_[static_cast<size_t>(k)];
    }
    const std::vector<R>& coeffs() const { return coeffs_; }

    Poly operator-() const {
        Poly p = *this;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    Poly operator+(const Poly& o) const {
        std::vector<R> c(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < coeffs_.size() && i < o.coeffs_.size())
                c[i] = coeffs_[i] + o.coeffs_[i];
            else if (i < coeffs_.size())
                c[i] = coeffs_[i];
            else
                c[i] = o.coeffs_[i];
        }
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<R> c(coeffs_.size() + o.coeffs_.size() - 1);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(c));
    }

    Poly scaled(const R& s) const {
        Poly p = *this;
        for (auto& c : p.coeffs_) c = c * s;
        p.trim();
        return p;
    }

    Poly shifted(int k) const {  // multiply by var^k
        if (is_zero()) return Poly();
        std::vector<R> c(coeffs_.size() + static_cast<size_t>(k));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<R> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) {
            c[i - 1] = coeffs_[i];
            for (size_t j = 1; j < i; ++j) c[i - 1] = c[i - 1] + coeffs_[i];
        }
        return Poly(std::move(c));
    }

    bool operator==(const Poly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!ring::is_zero(coeffs_[i] - o.coeffs_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

  private:
    void trim() {
        while (!coeffs_.empty() && ring::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<R> coeffs_;
};

namespace ring {

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <class R>
Poly<R> one_of(const Poly<R>*) {
    return Poly<R>(ring_one<R>());
}

// Exact polynomial division: b*q == a must hold in R[x].
template <class R>
Poly<R> divexact(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("divexact: zero divisor");
    if (a.is_zero()) return Poly<R>();
    assert(a.degree() >= b.degree());
    std::vector<R> rem = a.coeffs();
    std::vector<R> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        R qk = divexact(rem[static_cast<size_t>(k + b.degree())], b.lc());
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] =
                rem[static_cast<size_t>(k + i)] - qk * b.coeff(i);
        q[static_cast<size_t>(k)] = std::move(qk);
    }
    return Poly<R>(std::move(q));
}

}  // namespace ring

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, returns r.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
    assert(!b.is_zero());
    Poly<R> r = a;
    int d = a.degree() - b.degree();
    if (d < 0) return r;
    int e = d + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<R> t = Poly<R>::monomial(r.lc(), r.degree() - b.degree());
        r = r.scaled(b.lc()) - t * b;
        --e;
    }
    // Normalize so that the full power of lc(b) was applied.
    R lb = b.lc();
    while (e-- > 0) r = r.scaled(lb);
    return r;
}

// Resultant via the subresultant polynomial remainder sequence (Collins).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() || b.is_zero()) return R{};
    bool neg = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        R res = ring::ring_pow(b.lc(), a.degree());
        return neg ? -res : res;
    }
    R g = ring::ring_one<R>(), h = ring::ring_one<R>();
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) neg = !neg;
        Poly<R> r = pseudo_rem(a, b);
        if (r.is_zero()) {
            // db > 0 here, so a common factor of positive degree exists.
            return R{};
        }
        a = b;
        R divisor = g * ring::ring_pow(h, delta);
        {
            std::vector<R> c(r.coeffs());
            for (auto& x : c) x = ring::divexact(x, divisor);
            b = Poly<R>(std::move(c));
        }
        g = a.lc();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = ring::divexact(ring::ring_pow(g, delta),
                               ring::ring_pow(h, delta - 1));
        }
        if (b.degree() == 0) {
            int dA = a.degree();
            R res;
            if (dA == 0) {
                res = ring::ring_one<R>();
            } else if (dA == 1) {
                res = b.lc();
            } else {
                res = ring::divexact(ring::ring_pow(b.lc(), dA),
                                     ring::ring_pow(h, dA - 1));
            }
            return neg ? -res : res;
        }
    }
}

}  // namespace qwalk
