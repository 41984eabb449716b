#include "glc/padic.hpp"

#include <string>

namespace glc {

u64 prime_power(u64 p, int n) {
    if (p < 2 || n < 0) fail(ErrorCode::InvalidInput, "bad prime power request");
    u64 r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > (u64(1) << 62) / p)
            fail(ErrorCode::PrecisionOverflow,
                 std::to_string(p) + "^" + std::to_string(n) + " exceeds 62-bit residues");
        r *= p;
    }
    return r;
}

PadicResidue::PadicResidue(u64 p, int precision, u64 value)
    : p_(p), n_(precision), mod_(prime_power(p, precision)), v_(value % mod_) {}

PadicResidue PadicResidue::from_int(u64 p, int precision, long long value) {
    u64 m = prime_power(p, precision);
    long long r = value % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return PadicResidue(p, precision, m, static_cast<u64>(r), Raw{});
}

PadicResidue PadicResidue::from_bigint(u64 p, int precision, const BigInt& value) {
    u64 m = prime_power(p, precision);
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), m);
    return PadicResidue(p, precision, m, r.get_ui(), Raw{});
}

PadicResidue PadicResidue::from_rational(u64 p, int precision, const Rational& value) {
    if (mpz_divisible_ui_p(value.den().get_mpz_t(), p))
        fail(ErrorCode::InvalidInput, "rational " + value.str() + " is not " + std::to_string(p) + "-integral");
    return from_bigint(p, precision, value.num()) * from_bigint(p, precision, value.den()).inv();
}

PadicResidue PadicResidue::from_digits(u64 p, const std::vector<u64>& digits) {
    if (digits.empty()) fail(ErrorCode::InvalidInput, "empty digit list");
    u64 v = 0, pk = 1;
    for (u64 d : digits) {
        if (d >= p) fail(ErrorCode::InvalidInput, "digit " + std::to_string(d) + " out of range");
        v += d * pk;
        if (&d != &digits.back()) pk *= p;
    }
    return PadicResidue(p, static_cast<int>(digits.size()), v);
}

long long PadicResidue::signed_value() const {
    if (v_ > mod_ / 2) return -static_cast<long long>(mod_ - v_);
    return static_cast<long long>(v_);
}

std::vector<u64> PadicResidue::digits() const {
    std::vector<u64> out;
    u64 v = v_;
    for (int i = 0; i < n_; ++i) {
        out.push_back(v % p_);
        v /= p_;
    }
    return out;
}

int PadicResidue::valuation() const {
    if (v_ == 0) return n_;
    int k = 0;
    u64 v = v_;
    while (v % p_ == 0) {
        v /= p_;
        ++k;
    }
    return k;
}

void PadicResidue::check_same(const PadicResidue& o) const {
    if (mod_ != o.mod_ || p_ != o.p_)
        fail(ErrorCode::Internal, "mixing residues of different rings");
}

PadicResidue& PadicResidue::operator+=(const PadicResidue& o) {
    check_same(o);
    v_ += o.v_;
    if (v_ >= mod_) v_ -= mod_;
    return *this;
}

PadicResidue& PadicResidue::operator-=(const PadicResidue& o) {
    check_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + mod_ - o.v_;
    return *this;
}

PadicResidue& PadicResidue::operator*=(const PadicResidue& o) {
    check_same(o);
    v_ = static_cast<u64>(static_cast<u128>(v_) * o.v_ % mod_);
    return *this;
}

PadicResidue PadicResidue::pow(u64 e) const {
    PadicResidue r = one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

PadicResidue PadicResidue::inv() const {
    if (!is_unit())
        fail(ErrorCode::InvalidInput, "inverse of a non-unit residue");
    // extended Euclid on (v, p^N)
    __int128 a = v_, m = mod_, x0 = 1, x1 = 0;
    while (m) {
        __int128 q = a / m, t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    __int128 r = x0 % static_cast<__int128>(mod_);
    if (r < 0) r += mod_;
    return PadicResidue(p_, n_, mod_, static_cast<u64>(r), Raw{});
}

PadicResidue PadicResidue::reduce(int precision) const {
    if (precision > n_) fail(ErrorCode::InsufficientPrecision, "cannot reduce to a higher precision");
    u64 m = prime_power(p_, precision);
    return PadicResidue(p_, precision, m, v_ % m, Raw{});
}

PadicResidue PadicResidue::lift(int precision) const {
    if (precision <= n_) return reduce(precision);
    return PadicResidue(p_, precision, prime_power(p_, precision), v_, Raw{});
}

PadicResidue PadicResidue::divide_by_p() const {
    if (v_ % p_ != 0) fail(ErrorCode::InvalidInput, "divide_by_p of a unit");
    if (n_ < 1) fail(ErrorCode::InsufficientPrecision, "no digits left");
    u64 m = mod_ / p_;
    return PadicResidue(p_, n_ - 1, m, (v_ / p_) % m, Raw{});
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    u64 r = PadicResidue(p, 1, a).pow((p - 1) / 2).value();
    return r == 1 ? 1 : -1;
}

u64 sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (legendre(a, p) != 1) fail(ErrorCode::InvalidInput, "not a quadratic residue");
    u64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    u64 z = 2;
    while (legendre(z, p) != -1) ++z;
    PadicResidue A(p, 1, a), c = PadicResidue(p, 1, z).pow(q);
    PadicResidue x = A.pow((q + 1) / 2), t = A.pow(q);
    int m = s;
    while (t.value() != 1) {
        int i = 0;
        PadicResidue tt = t;
        while (tt.value() != 1) {
            tt *= tt;
            ++i;
        }
        PadicResidue b = c;
        for (int j = 0; j < m - i - 1; ++j) b *= b;
        x *= b;
        c = b * b;
        t *= c;
        m = i;
    }
    u64 r = x.value();
    return std::min(r, p - r);
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void residue_convolution(const PadicResidue* a, const PadicResidue* b, PadicResidue* out, int n) {
    u64 mod = a[0].mod_;
    // keep the accumulator below 2^127 before each product is added
    const u128 limit = (~static_cast<u128>(0) >> 1) - static_cast<u128>(mod) * mod;
    for (int k = 0; k < n; ++k) {
        u128 acc = 0;
        for (int i = 0; i <= k; ++i) {
            u64 x = a[i].v_;
            if (x == 0) continue;
            acc += static_cast<u128>(x) * b[k - i].v_;
            if (acc > limit) acc %= mod;
        }
        out[k] = PadicResidue(a[0].p_, a[0].n_, mod, static_cast<u64>(acc % mod), PadicResidue::Raw{});
    }
}

}  // namespace glc
