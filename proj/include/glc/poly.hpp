#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "glc/errors.hpp"

namespace glc {

/// Ring element interface shared by PadicResidue, UnramifiedElement and Rational.
template <class R>
concept RingElement = requires(R a, R b, long long n) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero() } -> std::convertible_to<R>;
    { a.one() } -> std::convertible_to<R>;
    { a.of(n) } -> std::convertible_to<R>;
};

/// Dense univariate polynomial, coefficients in ascending order. A prototype
/// element is kept so that the zero polynomial still knows its ring.
template <RingElement R>
class Poly {
  public:
    Poly() = default;
    explicit Poly(const R& proto) : zero_(proto.zero()) {}
    Poly(std::vector<R> coeffs, const R& proto) : c_(std::move(coeffs)), zero_(proto.zero()) { trim(); }

    static Poly monomial(const R& coeff, int degree) {
        std::vector<R> c(static_cast<std::size_t>(degree) + 1, coeff.zero());
        c.back() = coeff;
        return Poly(std::move(c), coeff);
    }
    static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
    /// x - a
    static Poly linear_root(const R& a) { return Poly(std::vector<R>{-a, a.one()}, a); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const R& proto() const { return zero_; }
    R zero_elem() const { return zero_; }
    const std::vector<R>& coeffs() const { return c_; }

    R operator[](int i) const {
        if (i < 0 || i > degree()) return zero_;
        return c_[static_cast<std::size_t>(i)];
    }
    R lead() const { return c_.empty() ? zero_ : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == zero_.one(); }

    void set(int i, const R& v) {
        if (i > degree()) c_.resize(static_cast<std::size_t>(i) + 1, zero_);
        c_[static_cast<std::size_t>(i)] = v;
        trim();
    }

    R eval(const R& x) const {
        R acc = x.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Generic evaluation at an element of an algebra over R (e.g. a series).
    template <class A, class Embed>
    A eval_in(const A& x, Embed embed) const {
        A acc = embed(zero_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
        return acc;
    }

    Poly derivative() const {
        std::vector<R> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * zero_.of(i));
        return Poly(std::move(d), zero_);
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r), a.zero_);
    }
    friend Poly operator*(const R& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Division with remainder; the divisor's leading coefficient must be invertible.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) fail(ErrorCode::Internal, "polynomial division by zero");
        R inv_lead = d.lead().inv();
        Poly q(zero_), r = *this;
        int dd = d.degree();
        if (degree() < dd) return {q, r};
        std::vector<R> qc(static_cast<std::size_t>(degree() - dd) + 1, zero_);
        std::vector<R> rc = r.c_;
        for (int i = degree(); i >= dd; --i) {
            R coef = rc[static_cast<std::size_t>(i)] * inv_lead;
            qc[static_cast<std::size_t>(i - dd)] = coef;
            if (coef.is_zero()) continue;
            for (int j = 0; j <= dd; ++j)
                rc[static_cast<std::size_t>(i - dd + j)] =
                    rc[static_cast<std::size_t>(i - dd + j)] - coef * d.c_[static_cast<std::size_t>(j)];
        }
        rc.resize(static_cast<std::size_t>(dd));
        return {Poly(std::move(qc), zero_), Poly(std::move(rc), zero_)};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return lead().inv() * *this;
    }

    /// Terms of degree < n.
    Poly truncate(int n) const {
        std::vector<R> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(c_.size())));
        return Poly(std::move(c), zero_);
    }

    template <class F>
    auto map(F fn) const {
        using S = decltype(fn(zero_));
        std::vector<S> c;
        for (const auto& x : c_) c.push_back(fn(x));
        return Poly<S>(std::move(c), fn(zero_));
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& a) {
        os << "[";
        for (std::size_t i = 0; i < a.c_.size(); ++i) os << (i ? ", " : "") << a.c_[i];
        return os << "]";
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<R> c_;
    R zero_{};
};

/// Monic gcd over a field.
template <RingElement R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <RingElement R>
struct XGcd {
    Poly<R> g, s, t;
};

template <RingElement R>
XGcd<R> poly_xgcd(const Poly<R>& a, const Poly<R>& b) {
    const R z = a.proto();
    Poly<R> r0 = a, r1 = b;
    Poly<R> s0 = Poly<R>::constant(z.one()), s1(z);
    Poly<R> t0(z), t1 = Poly<R>::constant(z.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<R> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<R> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R li = r0.lead().inv();
    return {li * r0, li * s0, li * t0};
}

/// (base^e) mod m over a ring where m is monic or has an invertible lead.
template <RingElement R>
Poly<R> poly_powmod(Poly<R> base, unsigned long long e, const Poly<R>& m) {
    Poly<R> r = Poly<R>::constant(base.proto().one()) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

}  // namespace glc
