#pragma once

#include <optional>
#include <vector>

#include "glc/fp_poly.hpp"
#include "glc/unramified.hpp"

namespace glc {

/// Newton lifting of a simple root. `poly` is over the target ring (precision N
/// taken from its coefficients); `seed` is any representative of the root mod p.
template <RingElement R>
R hensel_lift_root(const Poly<R>& poly, const R& seed) {
    Poly<R> d = poly.derivative();
    R x = seed;
    if (!poly.eval(x).is_zero() && poly.eval(x).valuation() < 1)
        fail(ErrorCode::InvalidInput, "seed is not a root modulo p");
    R dx = d.eval(x);
    if (!dx.is_unit()) fail(ErrorCode::NonSimpleRoot, "derivative vanishes mod p at the seed");
    int N = x.precision();
    for (int prec = 1; prec < N; prec *= 2) {
        dx = d.eval(x);
        x = x - poly.eval(x) * dx.inv();
    }
    // one extra step makes the result insensitive to how the seed was chosen
    x = x - poly.eval(x) * d.eval(x).inv();
    return x;
}

struct HenselFactor {
    PadicPoly factor;          // monic, over Z/p^M
    PadicPoly residual;        // irreducible mod p with factor = residual^e mod p
    int exponent = 1;
    /// Common valuation of the roots of factor(x + c) for a lift c of the
    /// residual root when residual is linear; negative if not computed.
    int slope_num = -1;
    int slope_den = 1;
    bool ramified = false;
};

/// Factorization of a monic polynomial over Z/p^N into pieces whose reductions
/// are powers of single irreducibles, further split by Newton-polygon slope
/// (for linear residual factors). Precision of each factor is reported by its
/// coefficients; slope splitting consumes digits.
std::vector<HenselFactor> hensel_factor(const PadicPoly& poly);

/// Lift F = A0 * B0 (mod p) with A0 monic and gcd(A0, B0) = 1 mod p to the
/// precision of F.
std::pair<PadicPoly, PadicPoly> hensel_lift_pair(const PadicPoly& F, const PadicPoly& A0, const PadicPoly& B0);

}  // namespace glc
