#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace glc {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "a" or "a/b" with optional sign; throws ParseError otherwise.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational of(long long v) const { return Rational(BigInt(static_cast<long>(v))); }
    Rational inv() const;

    /// p-adic valuation; INT32_MAX for zero.
    int valuation(std::uint64_t p) const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_.get_str();
    }

  private:
    mpq_class q_;
};

/// v_p of a nonzero integer.
int valuation(const BigInt& n, std::uint64_t p);

}  // namespace glc
