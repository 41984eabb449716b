#pragma once

#include <algorithm>
#include <ostream>
#include <type_traits>
#include <vector>

#include "glc/padic.hpp"
#include "glc/poly.hpp"

namespace glc {

/// Power series c_0 + c_1 s + ... known modulo s^T, where T = order().
template <RingElement R>
class Series {
  public:
    Series() = default;
    Series(const R& proto, int order) : c_(static_cast<std::size_t>(order), proto.zero()), zero_(proto.zero()) {}
    Series(std::vector<R> coeffs, const R& proto) : c_(std::move(coeffs)), zero_(proto.zero()) {}

    static Series from_poly(const Poly<R>& f, int order) {
        Series s(f.proto(), order);
        for (int i = 0; i < order && i <= f.degree(); ++i) s.c_[static_cast<std::size_t>(i)] = f[i];
        return s;
    }
    /// The parameter s itself.
    static Series variable(const R& proto, int order) {
        Series s(proto, order);
        if (order > 1) s.c_[1] = proto.one();
        return s;
    }
    static Series constant(const R& c, int order) {
        Series s(c, order);
        if (order > 0) s.c_[0] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    const R& proto() const { return zero_; }
    R operator[](int i) const { return i < order() && i >= 0 ? c_[static_cast<std::size_t>(i)] : zero_; }
    void set(int i, const R& v) {
        if (i < order()) c_[static_cast<std::size_t>(i)] = v;
    }
    const std::vector<R>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient, or order() if none.
    int valuation() const {
        for (int i = 0; i < order(); ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
        return order();
    }

    Series truncate(int order) const {
        Series r = *this;
        r.c_.resize(static_cast<std::size_t>(std::min(order, this->order())), zero_);
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(a.zero_, n);
        for (int i = 0; i < n; ++i) r.c_[static_cast<std::size_t>(i)] = a[i] + b[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(a.zero_, n);
        if constexpr (std::is_same_v<R, PadicResidue>) {
            if (n > 0) {
                a.zero_.check_compatible(b.zero_);
                residue_convolution(a.c_.data(), b.c_.data(), r.c_.data(), n);
            }
            return r;
        }
        for (int i = 0; i < n; ++i) {
            const R& ai = a.c_[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int j = 0; i + j < n; ++j)
                r.c_[static_cast<std::size_t>(i + j)] = r.c_[static_cast<std::size_t>(i + j)] + ai * b.c_[static_cast<std::size_t>(j)];
        }
        return r;
    }
    friend Series operator*(const R& s, const Series& a) {
        Series r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    /// Multiplication by s^k (the order grows by k).
    Series shift(int k) const {
        std::vector<R> c(static_cast<std::size_t>(k), zero_);
        c.insert(c.end(), c_.begin(), c_.end());
        return Series(std::move(c), zero_);
    }
    /// Division by s^k; the first k coefficients must vanish.
    Series unshift(int k) const {
        for (int i = 0; i < std::min(k, order()); ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero()) fail(ErrorCode::Internal, "series unshift of a nonzero term");
        if (k >= order()) return Series(zero_, 0);
        return Series(std::vector<R>(c_.begin() + k, c_.end()), zero_);
    }

    Series derivative() const {
        if (order() == 0) return *this;
        Series r(zero_, order() - 1);
        for (int i = 1; i < order(); ++i) r.c_[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * zero_.of(i);
        return r;
    }

    /// Multiplicative inverse; the constant term must be a unit.
    Series inverse() const {
        R c0inv = (*this)[0].inv();
        Series r = constant(c0inv, 1);
        for (int prec = 1; prec < order();) {
            prec = std::min(2 * prec, order());
            Series a = truncate(prec);
            Series rr = r.pad(prec);
            // r <- r (2 - a r)
            rr = rr * (constant(zero_.of(2), prec) - a * rr);
            r = rr;
        }
        return r.pad(order());
    }

    /// Square root with prescribed constant term `root0` (root0^2 = c_0, 2 invertible).
    Series sqrt(const R& root0) const {
        Series r = constant(root0, 1);
        R half = zero_.of(2).inv();
        for (int prec = 1; prec < order();) {
            prec = std::min(2 * prec, order());
            Series rr = r.pad(prec);
            rr = half * (rr + truncate(prec) * rr.inverse());
            r = rr;
        }
        return r.pad(order());
    }

    /// Evaluate a polynomial at this series.
    Series compose_into(const Poly<R>& f) const {
        Series acc(zero_, order());
        for (int i = f.degree(); i >= 0; --i) {
            acc = acc * *this;
            acc.c_[0] = acc.c_[0] + f[i];
        }
        return acc;
    }

    Series pad(int order) const {
        Series r = *this;
        r.c_.resize(static_cast<std::size_t>(order), zero_);
        return r;
    }

    template <class F>
    auto map(F fn) const {
        using S = decltype(fn(zero_));
        std::vector<S> c;
        for (const auto& x : c_) c.push_back(fn(x));
        return Series<S>(std::move(c), fn(zero_));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Series& a) {
        os << "[";
        for (std::size_t i = 0; i < a.c_.size(); ++i) os << (i ? ", " : "") << a.c_[i];
        return os << " + O(s^" << a.c_.size() << ")]";
    }

  private:
    std::vector<R> c_;
    R zero_{};
};

/// Value m / p^shift in Q_p, with m known modulo p^{precision(m)}; the
/// absolute precision is precision(m) - shift. Divisions by p only ever
/// increase `shift`, so lost digits stay visible.
class PadicFraction {
  public:
    PadicFraction() = default;
    explicit PadicFraction(const PadicResidue& m, int shift = 0) : m_(m), shift_(shift) {}

    const PadicResidue& mantissa() const { return m_; }
    int shift() const { return shift_; }
    int absolute_precision() const { return m_.precision() - shift_; }
    u64 prime() const { return m_.prime(); }

    PadicFraction divide_by_int(long long n) const;
    PadicFraction divide_by_p() const { return PadicFraction(m_, shift_ + 1); }
    PadicFraction times(const PadicResidue& a) const;

    friend PadicFraction operator+(const PadicFraction& a, const PadicFraction& b);
    friend PadicFraction operator-(const PadicFraction& a, const PadicFraction& b);
    PadicFraction operator-() const { return PadicFraction(-m_, shift_); }

    /// Integral value reduced to Z/p^M; InsufficientPrecision if M exceeds the
    /// absolute precision, InvalidInput if the value is not integral.
    PadicResidue to_residue(int M) const;

  private:
    PadicResidue m_;
    int shift_ = 0;
};

/// Weierstrass preparation in Z/p^N[[s]]: g must reduce mod p to a series of
/// exact order m. Returns the distinguished polynomial P of degree m with
/// g = P * unit. `g` should be known modulo s^K with K >= (N + 2) m.
template <RingElement R>
Poly<R> weierstrass_prepare(const Series<R>& g, int m, int iterations) {
    const R z = g.proto();
    int K = g.order();
    if (m == 0) return Poly<R>::constant(z.one());
    if (K <= m) fail(ErrorCode::InsufficientPrecision, "series too short for Weierstrass preparation");
    // g = A + s^m B with deg A < m and B a unit
    Series<R> A = g.truncate(m).pad(K);
    Series<R> B = (g - A).unshift(m);
    Series<R> Binv = B.inverse();
    // s^m = q g + r, iterate q <- B^{-1} tau(s^m - q A)
    Series<R> sm = Series<R>(z, K);
    sm.set(m, z.one());
    Series<R> q = Series<R>(z, K - m);
    for (int it = 0; it <= iterations; ++it) {
        Series<R> h = sm - (q.pad(K) * A);
        Series<R> high = (h - h.truncate(m).pad(K)).unshift(m);
        q = Binv.truncate(K - m) * high;
    }
    Series<R> r = sm - q.pad(K) * g;
    std::vector<R> pc;
    for (int i = 0; i < m; ++i) pc.push_back(-r[i]);
    pc.push_back(z.one());
    return Poly<R>(std::move(pc), z);
}

/// Power sums p_1..p_count of the roots of a monic polynomial (Newton identities).
template <RingElement R>
std::vector<R> power_sums(const Poly<R>& P, int count) {
    const R z = P.proto();
    int m = P.degree();
    std::vector<R> ps(static_cast<std::size_t>(count) + 1, z);
    ps[0] = z.of(m);
    for (int n = 1; n <= count; ++n) {
        R s = z;
        for (int i = 1; i < n && i <= m; ++i) s = s + P[m - i] * ps[static_cast<std::size_t>(n - i)];
        if (n <= m) s = s + z.of(n) * P[m - n];
        ps[static_cast<std::size_t>(n)] = -s;
    }
    return ps;
}

}  // namespace glc
