#include "glc/fp_poly.hpp"

#include <algorithm>
#include <random>

namespace glc {

namespace {

PadicPoly x_poly(u64 p) { return make_padic_poly(p, 1, {0, 1}); }

bool poly_less(const PadicPoly& a, const PadicPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i].value() != b[i].value()) return a[i].value() < b[i].value();
    return false;
}

// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p).
PadicPoly pth_root(const PadicPoly& f, u64 p) {
    std::vector<PadicResidue> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f[i]);
    return PadicPoly(std::move(c), f.proto());
}

void squarefree_split(const PadicPoly& f, int mult, u64 p, std::vector<std::pair<PadicPoly, int>>& out) {
    if (f.degree() < 1) return;
    PadicPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_split(pth_root(f, p), mult * static_cast<int>(p), p, out);
        return;
    }
    // Yun-style loop
    PadicPoly c = poly_gcd(f, df);
    PadicPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        PadicPoly y = poly_gcd(w, c);
        PadicPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_split(pth_root(c, p), mult * static_cast<int>(p), p, out);
}

void equal_degree_split(const PadicPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<PadicPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const PadicResidue z = f.proto();
    std::uniform_int_distribution<u64> dist(0, p - 1);
    u64 qd = 1;
    for (int i = 0; i < d; ++i) qd *= p;
    for (;;) {
        std::vector<PadicResidue> c;
        for (int i = 0; i < f.degree(); ++i) c.push_back(PadicResidue(p, 1, dist(rng)));
        PadicPoly a(std::move(c), z);
        if (a.degree() < 1) continue;
        PadicPoly b = poly_powmod(a, (qd - 1) / 2, f) - PadicPoly::constant(z.one());
        PadicPoly g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(f / g, d, p, rng, out);
            return;
        }
    }
}

}  // namespace

PadicPoly make_padic_poly(u64 p, int precision, const std::vector<long long>& coeffs) {
    PadicResidue z(p, precision, 0);
    std::vector<PadicResidue> c;
    for (long long v : coeffs) c.push_back(PadicResidue::from_int(p, precision, v));
    return PadicPoly(std::move(c), z);
}

PadicPoly reduce_poly(const PadicPoly& f, int precision) {
    return f.map([precision](const PadicResidue& a) { return a.reduce(precision); });
}

PadicPoly lift_poly(const PadicPoly& f, int precision) {
    return f.map([precision](const PadicResidue& a) { return a.lift(precision); });
}

bool is_irreducible_mod_p(const PadicPoly& f) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    u64 p = f.proto().prime();
    PadicPoly g = f.monic();
    PadicPoly x = x_poly(p);
    PadicPoly xp = x;
    for (int i = 1; i <= n / 2; ++i) {
        xp = poly_powmod(xp, p, g);
        if (poly_gcd(g, xp - x).degree() > 0) return false;
    }
    return true;
}

PadicPoly smallest_irreducible(u64 p, int degree) {
    if (degree < 1) fail(ErrorCode::InvalidInput, "irreducible degree must be positive");
    u64 count = prime_power(p, degree);
    for (u64 code = 0; code < count; ++code) {
        std::vector<long long> c;
        u64 r = code;
        for (int i = 0; i < degree; ++i) {
            c.push_back(static_cast<long long>(r % p));
            r /= p;
        }
        c.push_back(1);
        PadicPoly f = make_padic_poly(p, 1, c);
        if (is_irreducible_mod_p(f)) return f;
    }
    fail(ErrorCode::Internal, "no irreducible polynomial found");
}

std::vector<FpFactor> factor_mod_p(const PadicPoly& f) {
    if (f.is_zero()) fail(ErrorCode::InvalidInput, "factoring the zero polynomial");
    u64 p = f.proto().prime();
    std::vector<std::pair<PadicPoly, int>> sqf;
    squarefree_split(f.monic(), 1, p, sqf);
    std::vector<FpFactor> out;
    std::mt19937_64 rng(0x5eed + p);
    PadicPoly x = x_poly(p);
    for (auto& [part, mult] : sqf) {
        // distinct-degree factorization
        PadicPoly rest = part;
        PadicPoly xp = x;
        for (int d = 1; rest.degree() > 0; ++d) {
            if (2 * d > rest.degree()) {
                std::vector<PadicPoly> pieces{rest.monic()};
                for (auto& q : pieces) out.push_back({q, mult});
                break;
            }
            xp = poly_powmod(xp, p, rest);
            PadicPoly g = poly_gcd(rest, xp - x);
            if (g.degree() > 0) {
                std::vector<PadicPoly> pieces;
                equal_degree_split(g, d, p, rng, pieces);
                for (auto& q : pieces) out.push_back({q, mult});
                rest = rest / g;
                xp = xp % rest;
            }
        }
    }
    // merge equal factors that arrived from different squarefree layers
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) { return poly_less(a.factor, b.factor); });
    std::vector<FpFactor> merged;
    for (auto& fa : out) {
        if (!merged.empty() && merged.back().factor == fa.factor)
            merged.back().multiplicity += fa.multiplicity;
        else
            merged.push_back(fa);
    }
    return merged;
}

std::vector<u64> roots_mod_p(const PadicPoly& f) {
    std::vector<u64> r;
    for (const auto& fa : factor_mod_p(f))
        if (fa.factor.degree() == 1) r.push_back((-fa.factor[0]).value());
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace glc
