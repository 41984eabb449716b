#pragma once

#include <optional>
#include <vector>

#include "glc/curve.hpp"
#include "glc/jacobian.hpp"
#include "glc/series.hpp"

namespace glc {

using PadicSeries = Series<PadicResidue>;
using LogVector = std::vector<PadicResidue>;

/// Local data of one residue disk over Z/p^N, to order T in the disk parameter.
/// Finite disks carry x(s), y(s); the infinity disk carries w(t) = 1/x.
/// integrands[k] is g_k with omega_k = g_k(s) ds.
struct DiskExpansion {
    ResidueDisk disk;
    int precision = 0;
    int order = 0;
    PadicResidue x0, y0;  // center lift (finite disks)
    PadicSeries x, y, w;
    std::vector<PadicSeries> integrands;
};

DiskExpansion expand_disk(const HyperellipticCurve& c, const ResidueDisk& d, int N, int T);

/// Largest n with n - v_p(n) <= M: the exponents s^n / n that matter for (1/p) * integral mod p^M
/// when the parameter lies in p Z_p.
int antiderivative_terms(u64 p, int M);

/// (1/p) * (G_k(s) - G_k(s')) mod p^M for two points of one disk, M = min precision - 1.
LogVector tiny_integral(const HyperellipticCurve& c, const LocalPoint& P, const LocalPoint& Q);
LogVector tiny_integral(const HyperellipticCurve& c, const LocalPoint& P, const LocalPoint& Q, int M);

/// Same for parameter values in an unramified extension (both in p Z_q), traced down to Z_p.
LogVector tiny_integral(const HyperellipticCurve& c, const ResidueDisk& d, const UnramifiedElement& s,
                        const UnramifiedElement& s2, int M);

struct KernelLogOptions {
    int precision = 1;  // M: output modulo p^M
};

/// (1/p) * integral from 0 to the class, mod p^M, for a formal class reducing to 0 in J(F_p).
LogVector kernel_log(const HyperellipticCurve& c, const FormalClass& fc, const KernelLogOptions& opt = {});

/// The function g-bar = a(x) + y b(x) over F_p with divisor D - n infinity for the
/// effective finite divisor D given as (point, multiplicity); empty when none exists.
struct RiemannRochFunction {
    PadicPoly a, b;
};
std::optional<RiemannRochFunction> function_with_divisor(const HyperellipticCurve& c,
                                                         const std::vector<std::pair<FpPoint, int>>& divisor);

}  // namespace glc
