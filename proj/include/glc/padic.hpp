#pragma once

#include <climits>
#include <cstdint>
#include <ostream>
#include <vector>

#include "glc/errors.hpp"
#include "glc/rational.hpp"

namespace glc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// p^n, throwing PrecisionOverflow when it does not fit in 62 bits.
u64 prime_power(u64 p, int n);

/// Element of Z/p^N. With N = 1 this is the prime field F_p.
class PadicResidue {
  public:
    PadicResidue() = default;
    PadicResidue(u64 p, int precision, u64 value);

    static PadicResidue from_int(u64 p, int precision, long long value);
    static PadicResidue from_bigint(u64 p, int precision, const BigInt& value);
    /// Image of a p-integral rational; throws InvalidInput if p divides the denominator.
    static PadicResidue from_rational(u64 p, int precision, const Rational& value);
    /// Little-endian base-p digits; precision = number of digits.
    static PadicResidue from_digits(u64 p, const std::vector<u64>& digits);

    u64 prime() const { return p_; }
    int precision() const { return n_; }
    u64 modulus() const { return mod_; }
    u64 value() const { return v_; }
    /// Throws unless both residues live in the same ring.
    void check_compatible(const PadicResidue& o) const { check_same(o); }
    /// Representative in (-p^N/2, p^N/2].
    long long signed_value() const;
    std::vector<u64> digits() const;

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % p_ != 0; }
    /// N for zero.
    int valuation() const;

    PadicResidue zero() const { return PadicResidue(p_, n_, 0); }
    PadicResidue one() const { return PadicResidue(p_, n_, 1 % mod_); }
    PadicResidue of(long long value) const { return from_int(p_, n_, value); }

    PadicResidue inv() const;
    PadicResidue pow(u64 e) const;

    /// Reduction to a lower precision.
    PadicResidue reduce(int precision) const;
    /// Same representative viewed at a higher precision (digits above N are zero).
    PadicResidue lift(int precision) const;
    /// Exact division by p; consumes one digit of precision.
    PadicResidue divide_by_p() const;

    PadicResidue operator-() const { return PadicResidue(p_, n_, mod_, v_ == 0 ? 0 : mod_ - v_, Raw{}); }
    PadicResidue& operator+=(const PadicResidue& o);
    PadicResidue& operator-=(const PadicResidue& o);
    PadicResidue& operator*=(const PadicResidue& o);

    friend PadicResidue operator+(PadicResidue a, const PadicResidue& b) { return a += b; }
    friend PadicResidue operator-(PadicResidue a, const PadicResidue& b) { return a -= b; }
    friend PadicResidue operator*(PadicResidue a, const PadicResidue& b) { return a *= b; }
    friend bool operator==(const PadicResidue& a, const PadicResidue& b) {
        return a.v_ == b.v_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const PadicResidue& a, const PadicResidue& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const PadicResidue& a) {
        return os << a.v_ << " mod " << a.p_ << "^" << a.n_;
    }

  private:
    friend void residue_convolution(const PadicResidue*, const PadicResidue*, PadicResidue*, int);
    struct Raw {};
    PadicResidue(u64 p, int n, u64 mod, u64 v, Raw) : p_(p), n_(n), mod_(mod), v_(v) {}
    void check_same(const PadicResidue& o) const;

    u64 p_ = 0;
    int n_ = 0;
    u64 mod_ = 1;
    u64 v_ = 0;
};

/// out[k] = sum_{i+j=k} a[i] b[j] for k < n, all in one ring Z/p^N.
void residue_convolution(const PadicResidue* a, const PadicResidue* b, PadicResidue* out, int n);

bool is_prime(u64 n);
/// Legendre symbol for a prime p > 2: 0, 1 or -1.
int legendre(u64 a, u64 p);
/// Square root in F_p of a quadratic residue (Tonelli-Shanks), smallest representative.
u64 sqrt_mod_prime(u64 a, u64 p);
/// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<u64, int>> factorize(u64 n);

}  // namespace glc
