#pragma once

#include <vector>

#include "glc/poly.hpp"

namespace glc {

/// Mumford pair (u, v): u monic, deg v < deg u, u | f - v^2. Identity is (1, 0).
template <RingElement K>
struct Mumford {
    Poly<K> u, v;
    friend bool operator==(const Mumford& a, const Mumford& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Mumford& a, const Mumford& b) { return !(a == b); }
};

/// Cantor arithmetic on the Jacobian of y^2 = f(x), deg f = 2g + 1, over a field K.
template <RingElement K>
class Jacobian {
  public:
    Jacobian(Poly<K> f, int genus) : f_(std::move(f)), g_(genus) {}

    const Poly<K>& f() const { return f_; }
    int genus() const { return g_; }
    K zero() const { return f_.proto(); }

    Mumford<K> identity() const { return {Poly<K>::constant(zero().one()), Poly<K>(zero())}; }
    bool is_identity(const Mumford<K>& a) const { return a.u.degree() == 0; }

    /// Class of [(x, y) - infinity].
    Mumford<K> point(const K& x, const K& y) const {
        return {Poly<K>::linear_root(x), Poly<K>::constant(y)};
    }

    Mumford<K> neg(const Mumford<K>& a) const { return {a.u, -a.v}; }

    bool is_valid(const Mumford<K>& a) const {
        if (!a.u.is_monic() || a.u.degree() > g_ || a.v.degree() >= a.u.degree()) return false;
        return ((f_ - a.v * a.v) % a.u).is_zero();
    }

    Mumford<K> add(const Mumford<K>& a, const Mumford<K>& b) const {
        if (is_identity(a)) return b;
        if (is_identity(b)) return a;
        auto x1 = poly_xgcd(a.u, b.u);
        Poly<K> d = x1.g, s1, s2, s3;
        Poly<K> vsum = a.v + b.v;
        if (d.degree() == 0) {
            s1 = x1.s;
            s2 = x1.t;
            s3 = Poly<K>(zero());
        } else {
            auto x2 = poly_xgcd(d, vsum);
            d = x2.g;
            s1 = x2.s * x1.s;
            s2 = x2.s * x1.t;
            s3 = x2.t;
        }
        Poly<K> u = (a.u * b.u) / (d * d);
        Poly<K> v = (s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_)) / d;
        v = v % u;
        return reduce(std::move(u), std::move(v));
    }

    Mumford<K> sub(const Mumford<K>& a, const Mumford<K>& b) const { return add(a, neg(b)); }

    Mumford<K> mul(const Mumford<K>& a, long long n) const {
        Mumford<K> base = n < 0 ? neg(a) : a;
        unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
        Mumford<K> r = identity();
        while (e) {
            if (e & 1) r = add(r, base);
            e >>= 1;
            if (e) base = add(base, base);
        }
        return r;
    }

  private:
    Mumford<K> reduce(Poly<K> u, Poly<K> v) const {
        while (u.degree() > g_) {
            Poly<K> un = ((f_ - v * v) / u).monic();
            v = (-v) % un;
            u = std::move(un);
        }
        u = u.monic();
        v = v % u;
        return {u, v};
    }

    Poly<K> f_;
    int g_;
};

}  // namespace glc
