#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "glc/fp_poly.hpp"
#include "glc/rational.hpp"
#include "glc/unramified.hpp"

namespace glc {

using RationalPoly = Poly<Rational>;

/// Point over F_p of the smooth model; the point at infinity sorts last.
struct FpPoint {
    bool infinity = false;
    u64 x = 0;
    u64 y = 0;

    static FpPoint at_infinity() { return FpPoint{true, 0, 0}; }
    auto key() const { return std::tuple(infinity, x, y); }
    friend bool operator==(const FpPoint& a, const FpPoint& b) { return a.key() == b.key(); }
    friend bool operator<(const FpPoint& a, const FpPoint& b) { return a.key() < b.key(); }
};

struct RationalPoint {
    bool infinity = false;
    Rational x;
    Rational y;

    static RationalPoint at_infinity() { return RationalPoint{true, Rational(), Rational()}; }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
    }
};

/// Point over F_{p^k}.
struct ExtPoint {
    bool infinity = false;
    UnramifiedElement x, y;
};

enum class DiskKind { FiniteOrdinary, FiniteWeierstrass, Infinity };
const char* disk_kind_name(DiskKind k);

struct ResidueDisk {
    FpPoint center;
    DiskKind kind = DiskKind::FiniteOrdinary;
    friend bool operator==(const ResidueDisk& a, const ResidueDisk& b) { return a.center == b.center; }
    friend bool operator<(const ResidueDisk& a, const ResidueDisk& b) { return a.center < b.center; }
};

/// Z_p-point known modulo p^N, identified with its disk and the value of the
/// disk parameter (x - x0, y, or x^g / y). Affine coordinates are kept for
/// finite disks.
struct LocalPoint {
    ResidueDisk disk;
    PadicResidue param;
    std::optional<PadicResidue> x, y;
    int precision() const { return param.precision(); }
};

struct LPolynomial {
    u64 q = 0;
    int genus = 0;
    std::vector<BigInt> coeffs;  // a_0 .. a_{2g}
    BigInt at_one() const;
    bool functional_equation_holds() const;
};

class HyperellipticCurve {
  public:
    /// Completes the square (f + h^2/4) and checks good reduction at p.
    static HyperellipticCurve validate(const std::vector<Rational>& f, const std::vector<Rational>& h, u64 p);
    /// Same model at another prime.
    HyperellipticCurve with_prime(u64 q) const;

    u64 prime() const { return p_; }
    int genus() const { return g_; }
    const RationalPoly& f() const { return f_; }
    const RationalPoly& f_input() const { return f_in_; }
    const RationalPoly& h_input() const { return h_in_; }
    /// f of the completed-square model over Z/p^N.
    PadicPoly f_mod(int N) const;

    /// omega_k = scale_k x^k dx / y on the completed-square model.
    const std::vector<Rational>& differential_scales() const { return scales_; }
    void set_differential_scales(std::vector<Rational> s);

    /// Coordinates given in the input model (with h) to the completed-square model and back.
    RationalPoint to_model(const RationalPoint& input) const;
    RationalPoint to_input(const RationalPoint& model) const;
    bool on_curve(const RationalPoint& pt) const;
    RationalPoint involution(const RationalPoint& pt) const;

    FpPoint reduce(const RationalPoint& pt) const;
    bool on_curve_mod_p(const FpPoint& pt) const;
    FpPoint involution(const FpPoint& pt) const;

  private:
    u64 p_ = 0;
    int g_ = 0;
    RationalPoly f_in_, h_in_, f_;
    std::vector<Rational> scales_;
};

/// All F_p-points ordered by (x, y) with infinity last.
std::vector<FpPoint> enumerate_points(const HyperellipticCurve& c);
/// All F_{p^k}-points (x-sweep over the field), infinity first.
std::vector<ExtPoint> enumerate_points_ext(const HyperellipticCurve& c, int k, u64 cap = 1000000);
/// #C(F_{p^k}) by a character sum.
u64 count_points(const HyperellipticCurve& c, int k, u64 cap = 1000000);
LPolynomial count_and_lpoly(const HyperellipticCurve& c, u64 cap = 1000000);

ResidueDisk disk_of(const HyperellipticCurve& c, const FpPoint& pt);
std::vector<ResidueDisk> residue_disks(const HyperellipticCurve& c);
ResidueDisk involution(const HyperellipticCurve& c, const ResidueDisk& d);

/// Lift of the disk with parameter value p * mu, modulo p^N. mu = 0 gives the
/// center lift (least representative x, Hensel-lifted y; y = 0 for Weierstrass).
LocalPoint canonical_lift(const HyperellipticCurve& c, const ResidueDisk& d, const PadicResidue& mu, int N);
LocalPoint canonical_lift(const HyperellipticCurve& c, const ResidueDisk& d, long long mu, int N);

/// Exact disk parameter of a rational point.
Rational disk_parameter(const HyperellipticCurve& c, const RationalPoint& pt);
LocalPoint local_point(const HyperellipticCurve& c, const RationalPoint& pt, int N);
/// Point given by affine coordinates mod p^m (model coordinates). Throws NotOnCurve.
LocalPoint local_point(const HyperellipticCurve& c, const PadicResidue& x, const PadicResidue& y);
LocalPoint involution(const HyperellipticCurve& c, const LocalPoint& pt);

}  // namespace glc
