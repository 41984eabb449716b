#include "glc/coleman.hpp"

#include <climits>
#include <map>

#include "glc/hensel.hpp"
#include "glc/modlinalg.hpp"

namespace glc {

namespace {

int vp(long long n, u64 p) {
    int v = 0;
    while (n % static_cast<long long>(p) == 0) {
        n /= static_cast<long long>(p);
        ++v;
    }
    return v;
}

int floor_log(u64 p, long long n) {
    int e = 0;
    for (long long q = static_cast<long long>(p); q <= n; q *= static_cast<long long>(p)) ++e;
    return e;
}

PadicSeries pow_series(const PadicSeries& s, int e) {
    PadicSeries r = PadicSeries::constant(s.proto().one(), s.order());
    for (int i = 0; i < e; ++i) r = r * s;
    return r;
}

PadicResidue at_precision(const PadicResidue& a, int N) {
    return a.precision() >= N ? a.reduce(N) : a.lift(N);
}

// sum_{n=1}^{nmax} g[n-1] * value(n) / n
template <class Value>
PadicFraction antiderivative(const PadicSeries& g, int nmax, Value value) {
    PadicFraction acc(g.proto().zero());
    for (int n = 1; n <= nmax; ++n) {
        PadicResidue a = g[n - 1];
        if (a.is_zero()) continue;
        acc = acc + PadicFraction(a * value(n)).divide_by_int(n);
    }
    return acc;
}

// The exponents n with ceil(n / m) - v_p(n) <= M; returns the largest.
int disk_term_bound(u64 p, int m, int M) {
    int best = 1;
    int limit = m * (M + 2) * 4 + 64;
    for (int n = 1; n <= limit; ++n)
        if ((n + m - 1) / m - vp(n, p) <= M) best = n;
    return best;
}

}  // namespace

int antiderivative_terms(u64 p, int M) { return disk_term_bound(p, 1, M); }

DiskExpansion expand_disk(const HyperellipticCurve& c, const ResidueDisk& d, int N, int T) {
    u64 p = c.prime();
    int g = c.genus();
    PadicResidue z(p, N, 0);
    PadicPoly f = c.f_mod(N);
    DiskExpansion E;
    E.disk = d;
    E.precision = N;
    E.order = T;
    std::vector<PadicResidue> scale;
    for (const auto& s : c.differential_scales()) scale.push_back(PadicResidue::from_rational(p, N, s));
    PadicSeries s = PadicSeries::variable(z, T);
    if (d.kind == DiskKind::FiniteOrdinary) {
        E.x0 = PadicResidue(p, N, d.center.x);
        PadicPoly eq(std::vector<PadicResidue>{-f.eval(E.x0), z, z.one()}, z);
        E.y0 = hensel_lift_root(eq, PadicResidue(p, N, d.center.y));
        E.x = PadicSeries::constant(E.x0, T) + s;
        E.y = E.x.compose_into(f).sqrt(E.y0);
        PadicSeries yinv = E.y.inverse(), xk = PadicSeries::constant(z.one(), T);
        for (int k = 0; k < g; ++k) {
            E.integrands.push_back(scale[static_cast<std::size_t>(k)] * (xk * yinv));
            xk = xk * E.x;
        }
    } else if (d.kind == DiskKind::FiniteWeierstrass) {
        E.x0 = hensel_lift_root(f, PadicResidue(p, N, d.center.x));
        E.y0 = z;
        // F(z) = f(x0 + z); solve F(z(s)) = s^2 by Newton
        PadicSeries x0s = PadicSeries::constant(E.x0, T);
        PadicPoly df = f.derivative();
        PadicSeries s2 = s * s;
        PadicSeries zz = df.eval(E.x0).inv() * s2;
        for (int it = 0, prec = 1; prec < 2 * T || it < 3; ++it, prec *= 2) {
            PadicSeries xs = x0s + zz;
            zz = zz - (xs.compose_into(f) - s2) * xs.compose_into(df).inverse();
        }
        E.x = x0s + zz;
        E.y = s;
        PadicSeries two_over = z.of(2) * E.x.compose_into(df).inverse(), xk = PadicSeries::constant(z.one(), T);
        for (int k = 0; k < g; ++k) {
            E.integrands.push_back(scale[static_cast<std::size_t>(k)] * (xk * two_over));
            xk = xk * E.x;
        }
    } else {
        // w = 1/x satisfies w = t^2 F(w) with F the reversed polynomial of f
        int deg = f.degree();
        std::vector<PadicResidue> rev;
        for (int i = deg; i >= 0; --i) rev.push_back(f[i]);
        PadicPoly F(std::move(rev), z);
        int Tw = T + 2;
        PadicSeries t2 = PadicSeries::variable(z, Tw) * PadicSeries::variable(z, Tw);
        PadicSeries w(z, Tw);
        for (int it = 0; it <= Tw / 2 + 1; ++it) w = t2 * w.compose_into(F);
        E.w = w;
        PadicSeries u = w.unshift(2);  // order T
        PadicSeries du = u.derivative().shift(1).truncate(T);
        PadicSeries core = z.of(2) * u + du;
        PadicSeries uinv = u.inverse();
        for (int k = 0; k < g; ++k) {
            int e = g - k - 2;
            PadicSeries ue = e >= 0 ? pow_series(u, e) : uinv;
            PadicSeries om = (ue * core).shift(2 * (g - k - 1)).truncate(T);
            E.integrands.push_back(-(scale[static_cast<std::size_t>(k)] * om));
        }
    }
    return E;
}

LogVector tiny_integral(const HyperellipticCurve& c, const LocalPoint& P, const LocalPoint& Q) {
    return tiny_integral(c, P, Q, std::min(P.precision(), Q.precision()) - 1);
}

LogVector tiny_integral(const HyperellipticCurve& c, const LocalPoint& P, const LocalPoint& Q, int M) {
    if (!(P.disk.center == Q.disk.center)) fail(ErrorCode::DistinctDisks, "tiny integral between different residue disks");
    if (M < 1) fail(ErrorCode::InsufficientPrecision, "points must be known modulo p^2 at least");
    if (M > std::min(P.precision(), Q.precision()) - 1)
        fail(ErrorCode::InsufficientPrecision, "output precision exceeds point precision minus one");
    u64 p = c.prime();
    int nmax = antiderivative_terms(p, M);
    int Nw = M + 2 + floor_log(p, nmax);
    DiskExpansion E = expand_disk(c, P.disk, Nw, nmax + 1);
    PadicResidue s = at_precision(P.param, Nw), s2 = at_precision(Q.param, Nw);
    LogVector out;
    for (const auto& gk : E.integrands) {
        PadicFraction v = antiderivative(gk, nmax, [&](int n) { return s.pow(static_cast<u64>(n)) - s2.pow(static_cast<u64>(n)); });
        out.push_back(v.divide_by_p().to_residue(M));
    }
    return out;
}

LogVector tiny_integral(const HyperellipticCurve& c, const ResidueDisk& d, const UnramifiedElement& s,
                        const UnramifiedElement& s2, int M) {
    if (s.ring()->degree != s2.ring()->degree || s.ring()->modulus.coeffs().size() != s2.ring()->modulus.coeffs().size())
        fail(ErrorCode::InvalidInput, "parameters live in different rings");
    if (s.valuation() < 1 || s2.valuation() < 1) fail(ErrorCode::DistinctDisks, "parameter values must lie in p Z_q");
    if (M > std::min(s.precision(), s2.precision()) - 1)
        fail(ErrorCode::InsufficientPrecision, "output precision exceeds point precision minus one");
    u64 p = c.prime();
    int nmax = antiderivative_terms(p, M);
    int Nw = M + 2 + floor_log(p, nmax);
    RingPtr ring = UnramifiedRing::with_modulus(lift_poly(reduce_poly(s.ring()->modulus, 1), Nw));
    auto move = [&](const UnramifiedElement& a) {
        std::vector<PadicResidue> cs;
        for (const auto& x : a.coeffs()) cs.push_back(at_precision(x, Nw));
        return UnramifiedElement(ring, std::move(cs));
    };
    UnramifiedElement a = move(s), b = move(s2);
    DiskExpansion E = expand_disk(c, d, Nw, nmax + 1);
    LogVector out;
    for (const auto& gk : E.integrands) {
        PadicFraction v = antiderivative(gk, nmax, [&](int n) {
            return (a.pow(static_cast<u64>(n)) - b.pow(static_cast<u64>(n))).trace();
        });
        out.push_back(v.divide_by_p().to_residue(M));
    }
    return out;
}

std::optional<RiemannRochFunction> function_with_divisor(const HyperellipticCurve& c,
                                                         const std::vector<std::pair<FpPoint, int>>& divisor) {
    u64 p = c.prime();
    int g = c.genus();
    PadicResidue z(p, 1, 0);
    int n = 0;
    for (const auto& [pt, m] : divisor) {
        if (pt.infinity || m < 0) fail(ErrorCode::Internal, "divisor must be effective and finite");
        n += m;
    }
    int na = n / 2 + 1;                                // x^0 .. x^{n/2}
    int nb = n >= 2 * g + 1 ? (n - 2 * g - 1) / 2 + 1 : 0;  // y x^0 .. y x^{(n-2g-1)/2}
    int cols = na + nb;
    ModMatrix A;
    for (const auto& [pt, m] : divisor) {
        if (m == 0) continue;
        DiskExpansion E = expand_disk(c, disk_of(c, pt), 1, m);
        std::vector<PadicSeries> basis;
        PadicSeries xi = PadicSeries::constant(z.one(), m);
        for (int i = 0; i < std::max(na, nb); ++i) {
            if (i < na) basis.push_back(xi);
            xi = xi * E.x;
        }
        xi = PadicSeries::constant(z.one(), m);
        for (int j = 0; j < nb; ++j) {
            basis.push_back(E.y * xi);
            xi = xi * E.x;
        }
        for (int r = 0; r < m; ++r) {
            ModVector row;
            for (const auto& b : basis) row.push_back(b[r]);
            A.push_back(std::move(row));
        }
    }
    std::vector<ModVector> ker;
    if (A.empty()) {
        ModVector e(static_cast<std::size_t>(cols), z);
        e[0] = z.one();
        if (cols == 1) ker.push_back(e);
        else fail(ErrorCode::Internal, "empty divisor with a nontrivial space");
    } else {
        ker = nullspace_mod_p(A, static_cast<std::size_t>(cols), p);
    }
    if (ker.size() != 1) return std::nullopt;
    const ModVector& v = ker[0];
    RiemannRochFunction out{PadicPoly(std::vector<PadicResidue>(v.begin(), v.begin() + na), z),
                            PadicPoly(std::vector<PadicResidue>(v.begin() + na, v.end()), z)};
    return out;
}

namespace {

bool same_point(const ClassPoint& a, const ClassPoint& b) {
    if (a.is_rational != b.is_rational) return false;
    if (a.is_rational) return a.rational == b.rational;
    return a.local.disk.center == b.local.disk.center && a.local.param == b.local.param;
}

struct Term {
    ClassPoint pt;
    long long n;
};

}  // namespace

LogVector kernel_log(const HyperellipticCurve& c, const FormalClass& fc, const KernelLogOptions& opt) {
    u64 p = c.prime();
    int g = c.genus();
    int M = opt.precision;
    if (M < 1) fail(ErrorCode::InvalidInput, "log precision must be at least 1");
    FpJacobian J = fp_jacobian(c);
    if (!J.is_identity(reduce_mod_p(c, J, fc)))
        fail(ErrorCode::NotInKernel, "class does not reduce to zero in J(F_p)");

    // positive multiplicities via the involution, identical points merged
    std::vector<Term> terms;
    for (const auto& [pt0, n0] : fc.terms) {
        if (n0 == 0) continue;
        if (pt0.is_rational && pt0.rational.infinity) continue;
        if (pt0.is_rational && !c.on_curve(pt0.rational)) fail(ErrorCode::NotOnCurve, "point of a formal class is not on the curve");
        ClassPoint pt = n0 < 0 ? involution(c, pt0) : pt0;
        long long n = n0 < 0 ? -n0 : n0;
        bool merged = false;
        for (auto& t : terms)
            if (same_point(t.pt, pt)) {
                t.n += n;
                merged = true;
                break;
            }
        if (!merged) terms.push_back({pt, n});
    }
    // [P - inf] + [iota P - inf] = 0
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (terms[i].n == 0 || terms[j].n == 0) continue;
            if (same_point(terms[j].pt, involution(c, terms[i].pt))) {
                long long k = std::min(terms[i].n, terms[j].n);
                terms[i].n -= k;
                terms[j].n -= k;
            }
        }
    std::erase_if(terms, [](const Term& t) { return t.n == 0; });

    LogVector zero_out(static_cast<std::size_t>(g), PadicResidue(p, M, 0));
    if (terms.empty()) return zero_out;

    int point_precision = INT_MAX;
    for (const auto& t : terms)
        if (!t.pt.is_rational) point_precision = std::min(point_precision, t.pt.local.precision());
    if (point_precision != INT_MAX && M > point_precision - 1)
        fail(ErrorCode::InsufficientPrecision, "log precision " + std::to_string(M) + " needs points known modulo p^" +
                                                   std::to_string(M + 1));

    // group by residue disk
    std::map<FpPoint, std::vector<const Term*>> by_disk;
    for (const auto& t : terms) by_disk[reduction(c, t.pt)].push_back(&t);
    std::vector<std::pair<FpPoint, int>> finite;
    for (const auto& [center, ts] : by_disk) {
        if (center.infinity) continue;
        long long m = 0;
        for (const auto* t : ts) m += t->n;
        if (m > 100000) fail(ErrorCode::CapExceeded, "multiplicity too large");
        finite.emplace_back(center, static_cast<int>(m));
    }
    auto gbar = function_with_divisor(c, finite);
    if (!gbar) fail(ErrorCode::NoFunctionFound, "no function with the reduced divisor; class is not in the kernel");

    std::vector<PadicFraction> acc;
    for (int k = 0; k < g; ++k) acc.emplace_back(PadicResidue(p, M + 2, 0));
    auto param_of = [&](const Term& t, int Nw) {
        if (t.pt.is_rational) return PadicResidue::from_rational(p, Nw, disk_parameter(c, t.pt.rational));
        return at_precision(t.pt.local.param, Nw);
    };

    for (const auto& [center, ts] : by_disk) {
        ResidueDisk d = disk_of(c, center);
        long long m = 0;
        for (const auto* t : ts) m += t->n;
        int mm = center.infinity ? 1 : static_cast<int>(m);
        int nmax = disk_term_bound(p, mm, M);
        int Nw = M + 2 + floor_log(p, nmax);
        prime_power(p, Nw);
        int K = center.infinity ? nmax + 1 : std::max(mm * (Nw + 2) + 2, nmax + 1);
        DiskExpansion E = expand_disk(c, d, Nw, K);
        // points of D in this disk
        for (const auto* t : ts) {
            PadicResidue s = param_of(*t, Nw);
            PadicResidue mult = s.of(t->n);
            for (int k = 0; k < g; ++k)
                acc[static_cast<std::size_t>(k)] =
                    acc[static_cast<std::size_t>(k)] +
                    antiderivative(E.integrands[static_cast<std::size_t>(k)], nmax,
                                   [&](int n) { return mult * s.pow(static_cast<u64>(n)); });
        }
        if (center.infinity) continue;
        // zeros of the lifted function in this disk, through power sums
        PadicPoly a = lift_poly(gbar->a, Nw), b = lift_poly(gbar->b, Nw);
        PadicSeries gs = E.x.compose_into(a) + E.y * E.x.compose_into(b);
        PadicPoly P = weierstrass_prepare(gs, mm, Nw + 1);
        std::vector<PadicResidue> ps = power_sums(P, nmax);
        for (int k = 0; k < g; ++k)
            acc[static_cast<std::size_t>(k)] =
                acc[static_cast<std::size_t>(k)] -
                antiderivative(E.integrands[static_cast<std::size_t>(k)], nmax,
                               [&](int n) { return ps[static_cast<std::size_t>(n)]; });
    }
    LogVector out;
    for (const auto& v : acc) out.push_back(v.divide_by_p().to_residue(M));
    return out;
}

}  // namespace glc
