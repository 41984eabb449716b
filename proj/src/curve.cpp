#include "glc/curve.hpp"

#include <algorithm>
#include <array>

#include "glc/hensel.hpp"

namespace glc {

namespace {

RationalPoly rational_poly(const std::vector<Rational>& c) { return RationalPoly(c, Rational()); }

PadicPoly to_padic(const RationalPoly& f, u64 p, int N) {
    PadicResidue z(p, N, 0);
    std::vector<PadicResidue> c;
    for (const auto& a : f.coeffs()) c.push_back(PadicResidue::from_rational(p, N, a));
    return PadicPoly(std::move(c), z);
}

Poly<UnramifiedElement> over_ring(const PadicPoly& f, const RingPtr& ring) {
    return f.map([&](const PadicResidue& a) { return UnramifiedElement::from_base(ring, a); });
}

// F_{q^d} with d <= 3 on fixed-size arrays; only used for point counting.
struct SmallField {
    u64 q;
    int d;
    std::array<u64, 3> mu{};  // t^d = -(mu_0 + mu_1 t + ...)

    using Elem = std::array<u64, 3>;

    Elem mul(const Elem& a, const Elem& b) const {
        std::array<u64, 5> r{};
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(i + j)] = (r[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % q;
        for (int i = 2 * d - 2; i >= d; --i) {
            u64 c = r[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j < d; ++j) {
                std::size_t k = static_cast<std::size_t>(i - d + j);
                r[k] = (r[k] + q - c * mu[static_cast<std::size_t>(j)] % q) % q;
            }
        }
        return Elem{r[0], r[1], r[2]};
    }

    u64 norm(const Elem& a) const {
        // determinant of multiplication by a on the basis 1, t, t^2
        std::array<Elem, 3> cols{};
        Elem t{0, 1, 0}, col = a;
        for (int j = 0; j < d; ++j) {
            cols[static_cast<std::size_t>(j)] = col;
            col = mul(col, t);
        }
        auto m = [&](int i, int j) { return cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; };
        if (d == 1) return a[0];
        if (d == 2) return (m(0, 0) * m(1, 1) % q + q - m(0, 1) * m(1, 0) % q) % q;
        u64 pos = (m(0, 0) * (m(1, 1) * m(2, 2) % q) + m(0, 1) * (m(1, 2) * m(2, 0) % q) + m(0, 2) * (m(1, 0) * m(2, 1) % q)) % q;
        u64 neg = (m(0, 2) * (m(1, 1) * m(2, 0) % q) + m(0, 0) * (m(1, 2) * m(2, 1) % q) + m(0, 1) * (m(1, 0) * m(2, 2) % q)) % q;
        return (pos + q - neg) % q;
    }
};

u64 count_points_small(const PadicPoly& f, u64 q, int d) {
    SmallField F{q, d};
    PadicPoly mu = smallest_irreducible(q, d);
    for (int j = 0; j < d; ++j) F.mu[static_cast<std::size_t>(j)] = mu[j].value();
    u64 size = prime_power(q, d), n = 1;
    for (u64 code = 0; code < size; ++code) {
        SmallField::Elem x{};
        u64 c = code;
        for (int j = 0; j < d; ++j) {
            x[static_cast<std::size_t>(j)] = c % q;
            c /= q;
        }
        SmallField::Elem acc{};
        for (int i = f.degree(); i >= 0; --i) {
            acc = F.mul(acc, x);
            acc[0] = (acc[0] + f[i].value()) % q;
        }
        if (acc == SmallField::Elem{}) {
            n += 1;
        } else {
            n += static_cast<u64>(1 + legendre(F.norm(acc), q));
        }
    }
    return n;
}

}  // namespace

const char* disk_kind_name(DiskKind k) {
    switch (k) {
        case DiskKind::FiniteOrdinary: return "FiniteOrdinary";
        case DiskKind::FiniteWeierstrass: return "FiniteWeierstrass";
        case DiskKind::Infinity: return "Infinity";
    }
    return "?";
}

BigInt LPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& a : coeffs) s += a;
    return s;
}

bool LPolynomial::functional_equation_holds() const {
    if (coeffs.size() != static_cast<std::size_t>(2 * genus + 1) || coeffs[0] != 1) return false;
    for (int i = 0; i <= genus; ++i) {
        BigInt qp;
        mpz_ui_pow_ui(qp.get_mpz_t(), q, static_cast<unsigned long>(genus - i));
        if (coeffs[static_cast<std::size_t>(2 * genus - i)] != qp * coeffs[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

HyperellipticCurve HyperellipticCurve::validate(const std::vector<Rational>& f, const std::vector<Rational>& h, u64 p) {
    if (p == 2) fail(ErrorCode::PrimeTwo, "p = 2 is not supported");
    if (!is_prime(p)) fail(ErrorCode::InvalidInput, "p = " + std::to_string(p) + " is not prime");
    HyperellipticCurve c;
    c.p_ = p;
    c.f_in_ = rational_poly(f);
    c.h_in_ = rational_poly(h);
    if (c.f_in_.is_zero()) fail(ErrorCode::InvalidInput, "f is zero");
    c.f_ = c.f_in_ + Rational(1, 4) * (c.h_in_ * c.h_in_);
    int d = c.f_.degree();
    if (d % 2 == 0) fail(ErrorCode::EvenDegree, "model has even degree " + std::to_string(d) + " after completing the square");
    c.g_ = (d - 1) / 2;
    if (c.g_ < 2 || c.g_ > 3) fail(ErrorCode::UnsupportedGenus, "genus " + std::to_string(c.g_) + " is not supported");
    for (const auto& a : c.f_.coeffs())
        if (!a.is_zero() && a.valuation(p) < 0) fail(ErrorCode::BadReduction, "f is not p-integral");
    if (c.f_.lead().valuation(p) != 0) fail(ErrorCode::BadReduction, "leading coefficient is not a unit mod p");
    PadicPoly fb = c.f_mod(1);
    if (poly_gcd(fb, fb.derivative()).degree() != 0) fail(ErrorCode::BadReduction, "f is not squarefree mod p");
    c.scales_.assign(static_cast<std::size_t>(c.g_), Rational(1, 2));
    return c;
}

HyperellipticCurve HyperellipticCurve::with_prime(u64 q) const {
    HyperellipticCurve c = validate(f_in_.coeffs(), h_in_.coeffs(), q);
    c.scales_ = scales_;
    return c;
}

PadicPoly HyperellipticCurve::f_mod(int N) const { return to_padic(f_, p_, N); }

void HyperellipticCurve::set_differential_scales(std::vector<Rational> s) {
    if (s.size() != static_cast<std::size_t>(g_)) fail(ErrorCode::InvalidInput, "need one differential scale per genus");
    for (const auto& a : s)
        if (a.is_zero() || a.valuation(p_) != 0) fail(ErrorCode::InvalidInput, "differential scales must be p-adic units");
    scales_ = std::move(s);
}

RationalPoint HyperellipticCurve::to_model(const RationalPoint& pt) const {
    if (pt.infinity) return pt;
    return RationalPoint{false, pt.x, pt.y + Rational(1, 2) * h_in_.eval(pt.x)};
}

RationalPoint HyperellipticCurve::to_input(const RationalPoint& pt) const {
    if (pt.infinity) return pt;
    return RationalPoint{false, pt.x, pt.y - Rational(1, 2) * h_in_.eval(pt.x)};
}

bool HyperellipticCurve::on_curve(const RationalPoint& pt) const {
    return pt.infinity || pt.y * pt.y == f_.eval(pt.x);
}

RationalPoint HyperellipticCurve::involution(const RationalPoint& pt) const {
    if (pt.infinity) return pt;
    return RationalPoint{false, pt.x, -pt.y};
}

FpPoint HyperellipticCurve::reduce(const RationalPoint& pt) const {
    if (pt.infinity || pt.x.valuation(p_) < 0) return FpPoint::at_infinity();
    return FpPoint{false, PadicResidue::from_rational(p_, 1, pt.x).value(), PadicResidue::from_rational(p_, 1, pt.y).value()};
}

bool HyperellipticCurve::on_curve_mod_p(const FpPoint& pt) const {
    if (pt.infinity) return true;
    PadicResidue x(p_, 1, pt.x % p_), y(p_, 1, pt.y % p_);
    return y * y == f_mod(1).eval(x);
}

FpPoint HyperellipticCurve::involution(const FpPoint& pt) const {
    if (pt.infinity) return pt;
    return FpPoint{false, pt.x, (p_ - pt.y) % p_};
}

std::vector<FpPoint> enumerate_points(const HyperellipticCurve& c) {
    u64 p = c.prime();
    PadicPoly f = c.f_mod(1);
    std::vector<FpPoint> pts;
    for (u64 x = 0; x < p; ++x) {
        u64 fx = f.eval(PadicResidue(p, 1, x)).value();
        if (fx == 0) {
            pts.push_back({false, x, 0});
        } else if (legendre(fx, p) == 1) {
            u64 r = sqrt_mod_prime(fx, p);
            pts.push_back({false, x, std::min(r, p - r)});
            pts.push_back({false, x, std::max(r, p - r)});
        }
    }
    pts.push_back(FpPoint::at_infinity());
    return pts;
}

std::vector<ExtPoint> enumerate_points_ext(const HyperellipticCurve& c, int k, u64 cap) {
    u64 q = prime_power(c.prime(), k);
    if (q > cap) fail(ErrorCode::CapExceeded, "field size " + std::to_string(q) + " exceeds the enumeration cap");
    RingPtr ring = UnramifiedRing::make(c.prime(), 1, k);
    auto f = over_ring(c.f_mod(1), ring);
    std::vector<ExtPoint> pts;
    pts.push_back(ExtPoint{true, UnramifiedElement::from_int(ring, 0), UnramifiedElement::from_int(ring, 0)});
    for (u64 code = 0; code < q; ++code) {
        auto x = UnramifiedElement::from_code(ring, code);
        auto fx = f.eval(x);
        if (fx.is_zero()) {
            pts.push_back({false, x, fx});
        } else if (fx.quadratic_character() == 1) {
            auto y = field_sqrt(fx);
            pts.push_back({false, x, y});
            pts.push_back({false, x, -y});
        }
    }
    return pts;
}

u64 count_points(const HyperellipticCurve& c, int k, u64 cap) {
    u64 q = prime_power(c.prime(), k);
    if (q > cap) fail(ErrorCode::CapExceeded, "field size " + std::to_string(q) + " exceeds the enumeration cap");
    if (k == 1) return enumerate_points(c).size();
    if (k <= 3 && c.prime() < (1ULL << 31)) return count_points_small(c.f_mod(1), c.prime(), k);
    RingPtr ring = UnramifiedRing::make(c.prime(), 1, k);
    auto f = over_ring(c.f_mod(1), ring);
    u64 n = 1;
    for (u64 code = 0; code < q; ++code) {
        auto fx = f.eval(UnramifiedElement::from_code(ring, code));
        n += fx.is_zero() ? 1 : static_cast<u64>(1 + fx.quadratic_character());
    }
    return n;
}

LPolynomial count_and_lpoly(const HyperellipticCurve& c, u64 cap) {
    int g = c.genus();
    u64 p = c.prime();
    LPolynomial L;
    L.q = p;
    L.genus = g;
    // s_k = sum of k-th powers of Frobenius eigenvalues
    std::vector<BigInt> s(static_cast<std::size_t>(g) + 1, 0);
    for (int k = 1; k <= g; ++k) {
        BigInt qk;
        mpz_ui_pow_ui(qk.get_mpz_t(), p, static_cast<unsigned long>(k));
        s[static_cast<std::size_t>(k)] = qk + 1 - BigInt(static_cast<unsigned long>(count_points(c, k, cap)));
    }
    L.coeffs.assign(static_cast<std::size_t>(2 * g) + 1, 0);
    L.coeffs[0] = 1;
    for (int i = 1; i <= g; ++i) {
        BigInt acc = 0;
        for (int j = 1; j <= i; ++j) acc += s[static_cast<std::size_t>(j)] * L.coeffs[static_cast<std::size_t>(i - j)];
        L.coeffs[static_cast<std::size_t>(i)] = -acc / i;
    }
    for (int i = 0; i < g; ++i) {
        BigInt qp;
        mpz_ui_pow_ui(qp.get_mpz_t(), p, static_cast<unsigned long>(g - i));
        L.coeffs[static_cast<std::size_t>(2 * g - i)] = qp * L.coeffs[static_cast<std::size_t>(i)];
    }
    return L;
}

ResidueDisk disk_of(const HyperellipticCurve& c, const FpPoint& pt) {
    if (!c.on_curve_mod_p(pt)) fail(ErrorCode::NotOnCurve, "point is not on the reduction");
    if (pt.infinity) return ResidueDisk{pt, DiskKind::Infinity};
    return ResidueDisk{pt, pt.y == 0 ? DiskKind::FiniteWeierstrass : DiskKind::FiniteOrdinary};
}

std::vector<ResidueDisk> residue_disks(const HyperellipticCurve& c) {
    std::vector<ResidueDisk> out;
    for (const auto& pt : enumerate_points(c)) out.push_back(disk_of(c, pt));
    return out;
}

ResidueDisk involution(const HyperellipticCurve& c, const ResidueDisk& d) {
    return ResidueDisk{c.involution(d.center), d.kind};
}

LocalPoint canonical_lift(const HyperellipticCurve& c, const ResidueDisk& d, const PadicResidue& mu, int N) {
    u64 p = c.prime();
    PadicResidue s = PadicResidue(p, N, 0) + PadicResidue(p, N, mu.value() % prime_power(p, N)) * PadicResidue(p, N, p);
    LocalPoint out{d, s, std::nullopt, std::nullopt};
    if (d.kind == DiskKind::Infinity) return out;
    PadicPoly f = c.f_mod(N);
    PadicResidue zero(p, N, 0);
    if (d.kind == DiskKind::FiniteOrdinary) {
        PadicResidue x = PadicResidue(p, N, d.center.x) + s;
        PadicPoly eq(std::vector<PadicResidue>{-f.eval(x), zero, zero.one()}, zero);
        out.x = x;
        out.y = hensel_lift_root(eq, PadicResidue(p, N, d.center.y));
    } else {
        PadicPoly eq = f - PadicPoly::constant(s * s);
        out.x = hensel_lift_root(eq, PadicResidue(p, N, d.center.x));
        out.y = s;
    }
    return out;
}

LocalPoint canonical_lift(const HyperellipticCurve& c, const ResidueDisk& d, long long mu, int N) {
    return canonical_lift(c, d, PadicResidue::from_int(c.prime(), std::max(N - 1, 1), mu), N);
}

Rational disk_parameter(const HyperellipticCurve& c, const RationalPoint& pt) {
    FpPoint r = c.reduce(pt);
    if (r.infinity) {
        if (pt.infinity) return Rational();
        Rational xg = 1;
        for (int i = 0; i < c.genus(); ++i) xg *= pt.x;
        return xg / pt.y;
    }
    if (r.y == 0) return pt.y;
    return pt.x - Rational(BigInt(static_cast<unsigned long>(r.x)));
}

LocalPoint local_point(const HyperellipticCurve& c, const RationalPoint& pt, int N) {
    if (!c.on_curve(pt)) fail(ErrorCode::NotOnCurve, "rational point is not on the curve");
    u64 p = c.prime();
    ResidueDisk d = disk_of(c, c.reduce(pt));
    LocalPoint out{d, PadicResidue::from_rational(p, N, disk_parameter(c, pt)), std::nullopt, std::nullopt};
    if (d.kind != DiskKind::Infinity) {
        out.x = PadicResidue::from_rational(p, N, pt.x);
        out.y = PadicResidue::from_rational(p, N, pt.y);
    }
    return out;
}

LocalPoint local_point(const HyperellipticCurve& c, const PadicResidue& x, const PadicResidue& y) {
    int m = std::min(x.precision(), y.precision());
    PadicResidue xr = x.reduce(m), yr = y.reduce(m);
    if (yr * yr != c.f_mod(m).eval(xr)) fail(ErrorCode::NotOnCurve, "point does not satisfy the curve equation to its precision");
    ResidueDisk d = disk_of(c, FpPoint{false, xr.reduce(1).value(), yr.reduce(1).value()});
    PadicResidue s = d.kind == DiskKind::FiniteWeierstrass ? yr : xr - PadicResidue(c.prime(), m, d.center.x);
    return LocalPoint{d, s, xr, yr};
}

LocalPoint involution(const HyperellipticCurve& c, const LocalPoint& pt) {
    LocalPoint out = pt;
    out.disk = involution(c, pt.disk);
    if (pt.disk.kind != DiskKind::FiniteOrdinary) out.param = -pt.param;
    if (pt.y) out.y = -*pt.y;
    return out;
}

}  // namespace glc
