#include "glc/hensel.hpp"

#include <numeric>

namespace glc {

namespace {

struct Segment {
    int i0, i1;  // index range
    int rise;    // v(i0) - v(i1)
};

// Lower convex hull of (i, v_i), i = 0..n, for the part of the polygon with
// finite valuations. Valuations >= cap are treated as unknown (skipped).
std::vector<Segment> newton_segments(const std::vector<int>& v, int cap) {
    std::vector<int> pts;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[static_cast<std::size_t>(i)] < cap) pts.push_back(i);
    std::vector<int> hull;
    for (int i : pts) {
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull.back();
            long long cross = static_cast<long long>(b - a) * (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(a)]) -
                              static_cast<long long>(i - a) * (v[static_cast<std::size_t>(b)] - v[static_cast<std::size_t>(a)]);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<Segment> segs;
    for (std::size_t k = 1; k < hull.size(); ++k)
        segs.push_back({hull[k - 1], hull[k], v[static_cast<std::size_t>(hull[k - 1])] - v[static_cast<std::size_t>(hull[k])]});
    return segs;
}

PadicResidue divide_by_p_power(const PadicResidue& a, int k) {
    PadicResidue r = a;
    for (int i = 0; i < k; ++i) r = r.divide_by_p();
    return r;
}

PadicPoly taylor_shift(const PadicPoly& f, const PadicResidue& c) {
    PadicPoly lin = PadicPoly::linear_root(-c);  // x + c
    PadicPoly acc(f.proto());
    for (int i = f.degree(); i >= 0; --i) acc = acc * lin + PadicPoly::constant(f[i]);
    return acc;
}

// Split G (all roots of positive valuation) into single-slope factors.
void split_by_slope(const PadicPoly& G, std::vector<std::pair<PadicPoly, Segment>>& out) {
    int n = G.degree();
    if (n <= 0) return;
    int N = G.proto().precision();
    u64 p = G.proto().prime();
    std::vector<int> v;
    for (int i = 0; i <= n; ++i) v.push_back(G[i].valuation());
    auto segs = newton_segments(v, N);
    if (segs.empty()) fail(ErrorCode::InseparableConfiguration, "Newton polygon invisible at this precision");
    if (segs.front().i0 != 0) {
        // constant term is zero to full precision: the roots near zero cannot be separated
        fail(ErrorCode::InseparableConfiguration, "roots agree to full precision");
    }
    if (segs.size() == 1) {
        out.push_back({G, segs.front()});
        return;
    }
    const Segment* pick = nullptr;
    for (const auto& s : segs)
        if (s.rise % (s.i1 - s.i0) == 0) {
            pick = &s;
            break;
        }
    if (!pick) fail(ErrorCode::InseparableConfiguration, "several slopes, none integral");
    int lam = pick->rise / (pick->i1 - pick->i0);
    int w = v[static_cast<std::size_t>(pick->i0)] + lam * pick->i0;
    int Np = N - w;
    if (Np < 1) fail(ErrorCode::InseparableConfiguration, "slope splitting exhausts the precision");
    // G2(z) = G(p^lam z) / p^w
    std::vector<PadicResidue> c2;
    for (int j = 0; j <= n; ++j) {
        PadicResidue scaled = G[j].lift(N + lam * j) * PadicResidue(p, N + lam * j, prime_power(p, lam * j));
        PadicResidue r = divide_by_p_power(scaled, w);
        c2.push_back(r.reduce(Np));
    }
    PadicPoly G2(std::move(c2), PadicResidue(p, Np, 0));
    PadicPoly G2bar = reduce_poly(G2, 1);
    PadicResidue u = G2bar.lead();
    PadicPoly Pbar = u.inv() * G2bar;
    auto [P, U] = hensel_lift_pair(G2, Pbar, PadicPoly::constant(u));
    (void)U;
    PadicPoly zi0 = PadicPoly::monomial(PadicResidue(p, 1, 1), pick->i0);
    auto [P0, P1] = hensel_lift_pair(P, zi0, Pbar / zi0);
    (void)P0;
    // A(x) = p^{lam d} P1(x / p^lam)
    int d1 = P1.degree();
    std::vector<PadicResidue> ac;
    for (int j = 0; j <= d1; ++j)
        ac.push_back(P1[j] * PadicResidue(p, Np, prime_power(p, std::min(Np, lam * (d1 - j)))));
    PadicPoly A(std::move(ac), PadicResidue(p, Np, 0));
    PadicPoly Gr = reduce_poly(G, Np);
    auto [B, rem] = Gr.divmod(A);
    if (!rem.is_zero()) fail(ErrorCode::Internal, "slope factor does not divide");
    out.push_back({A, Segment{0, d1, lam * d1}});
    split_by_slope(B, out);
}

}  // namespace

std::pair<PadicPoly, PadicPoly> hensel_lift_pair(const PadicPoly& F, const PadicPoly& A0, const PadicPoly& B0) {
    int N = F.proto().precision();
    u64 p = F.proto().prime();
    PadicPoly Abar = reduce_poly(A0, 1), Bbar = reduce_poly(B0, 1);
    if (!Abar.is_monic()) fail(ErrorCode::Internal, "hensel_lift_pair needs a monic first factor");
    auto xg = poly_xgcd(Abar, Bbar);
    if (xg.g.degree() != 0) fail(ErrorCode::InseparableConfiguration, "factors are not coprime mod p");
    PadicPoly A = lift_poly(Abar, N), B = lift_poly(Bbar, N);
    for (int k = 1; k < N; ++k) {
        PadicPoly E = F - A * B;
        std::vector<PadicResidue> ec;
        for (int i = 0; i <= E.degree(); ++i) {
            PadicResidue c = E[i];
            if (c.valuation() < k) fail(ErrorCode::Internal, "Hensel step lost congruence");
            ec.push_back(divide_by_p_power(c, k).reduce(1));
        }
        PadicPoly e(std::move(ec), PadicResidue(p, 1, 0));
        auto [q, dA] = (xg.t * e).divmod(Abar);
        PadicPoly dB = xg.s * e + q * Bbar;
        PadicResidue pk(p, N, prime_power(p, k));
        A = A + pk * lift_poly(dA, N);
        B = B + pk * lift_poly(dB, N);
    }
    return {A, B};
}

std::vector<HenselFactor> hensel_factor(const PadicPoly& poly) {
    if (!poly.is_monic()) fail(ErrorCode::InvalidInput, "hensel_factor needs a monic polynomial");
    int N = poly.proto().precision();
    auto fac = factor_mod_p(reduce_poly(poly, 1));
    std::vector<HenselFactor> out;
    PadicPoly rest = poly;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        PadicPoly target = fac[i].factor;
        for (int e = 1; e < fac[i].multiplicity; ++e) target = target * fac[i].factor;
        PadicPoly piece = rest;
        if (i + 1 < fac.size()) {
            auto [A, B] = hensel_lift_pair(rest, target, reduce_poly(rest, 1) / target);
            piece = A;
            rest = B.monic();
        }
        const PadicPoly& phi = fac[i].factor;
        int e = fac[i].multiplicity;
        if (phi.degree() == 1) {
            PadicResidue c = (-phi[0]).lift(N);
            PadicPoly G = taylor_shift(piece, c);
            std::vector<std::pair<PadicPoly, Segment>> parts;
            if (e == 1) {
                parts.push_back({G, Segment{0, 1, G[0].valuation()}});
            } else {
                split_by_slope(G, parts);
            }
            for (auto& [A, seg] : parts) {
                HenselFactor hf;
                hf.factor = taylor_shift(A, -c.reduce(A.proto().precision()));
                hf.residual = phi;
                hf.exponent = A.degree();
                int len = seg.i1 - seg.i0;
                int g = std::gcd(seg.rise, len);
                hf.slope_num = seg.rise / (g ? g : 1);
                hf.slope_den = len / (g ? g : 1);
                hf.ramified = hf.slope_den > 1;
                out.push_back(std::move(hf));
            }
        } else {
            HenselFactor hf;
            hf.factor = piece;
            hf.residual = phi;
            hf.exponent = e;
            if (e > 1) {
                // Newton polygon over Z_q around a lifted root of phi
                auto ring = UnramifiedRing::with_modulus(lift_poly(phi, N));
                UnramifiedElement c = UnramifiedElement::generator(ring);
                auto G = piece.map([&](const PadicResidue& a) { return UnramifiedElement::from_base(ring, a); });
                Poly<UnramifiedElement> lin = Poly<UnramifiedElement>::linear_root(-c);
                Poly<UnramifiedElement> acc(c.zero());
                for (int j = G.degree(); j >= 0; --j) acc = acc * lin + Poly<UnramifiedElement>::constant(G[j]);
                std::vector<int> v;
                for (int j = 0; j <= e; ++j) v.push_back(acc[j].valuation());
                auto segs = newton_segments(v, N);
                if (segs.size() != 1 || segs.front().i0 != 0 || segs.front().i1 != e)
                    fail(ErrorCode::InseparableConfiguration, "several slopes over an unramified extension");
                int g = std::gcd(segs.front().rise, e);
                hf.slope_num = segs.front().rise / g;
                hf.slope_den = e / g;
                hf.ramified = hf.slope_den > 1;
            } else {
                hf.slope_num = 1;
                hf.slope_den = 1;
            }
            out.push_back(std::move(hf));
        }
    }
    return out;
}

}  // namespace glc
