#include <doctest.h>

#include <random>

#include "glc/fp_poly.hpp"
#include "glc/hensel.hpp"
#include "glc/lattice.hpp"
#include "glc/modlinalg.hpp"
#include "glc/series.hpp"
#include "glc/unramified.hpp"

using namespace glc;

TEST_CASE("rationals parse and canonicalize") {
    CHECK(Rational::parse("-2/4") == Rational(-1) / Rational(2));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational::parse("3/50").valuation(5) == -2);
    CHECK_THROWS_AS(Rational::parse("1/0"), GlcError);
    CHECK_THROWS_AS(Rational::parse("x"), GlcError);
}

TEST_CASE("residue ring axioms on random samples") {
    std::mt19937_64 rng(7);
    for (u64 p : {3ULL, 5ULL, 7ULL})
        for (int N : {1, 2, 3}) {
            u64 m = prime_power(p, N);
            for (int trial = 0; trial < 200; ++trial) {
                PadicResidue a(p, N, rng() % m), b(p, N, rng() % m), c(p, N, rng() % m);
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a - a == a.zero());
                if (a.is_unit()) CHECK(a * a.inv() == a.one());
            }
        }
}

TEST_CASE("residue digits and precision changes") {
    PadicResidue a = PadicResidue::from_digits(5, {2, 1, 4});
    CHECK(a.value() == 2 + 5 + 4 * 25);
    CHECK(a.digits() == std::vector<u64>{2, 1, 4});
    CHECK(a.reduce(1).value() == 2);
    PadicResidue b = PadicResidue::from_int(3, 3, 9);
    CHECK(b.valuation() == 2);
    CHECK(b.divide_by_p().precision() == 2);
    CHECK(b.divide_by_p().value() == 3);
    CHECK(PadicResidue::from_rational(5, 3, Rational::parse("1/4")) * PadicResidue::from_int(5, 3, 4) ==
          PadicResidue::from_int(5, 3, 1));
    CHECK_THROWS_AS(PadicResidue::from_rational(5, 3, Rational::parse("1/5")), GlcError);
    CHECK_THROWS_AS(prime_power(5, 40), GlcError);
}

TEST_CASE("hensel_lift_root on a square root of 1/4") {
    PadicResidue z(5, 3, 0);
    PadicPoly f({-PadicResidue::from_rational(5, 3, Rational::parse("1/4")), z, z.one()}, z);
    PadicResidue r = hensel_lift_root(f, PadicResidue(5, 3, 2));
    CHECK(r.reduce(1).value() == 2);
    CHECK(r * r == PadicResidue::from_rational(5, 3, Rational::parse("1/4")));
}

TEST_CASE("hensel_lift_root in the linear case") {
    PadicResidue c = PadicResidue::from_int(7, 4, 1234);
    PadicPoly f = PadicPoly::linear_root(c);
    CHECK(hensel_lift_root(f, c.reduce(1).lift(4)) == c);
}

TEST_CASE("hensel_lift_root lifts a y-coordinate on a genus 2 curve") {
    const int N = 3;
    PadicResidue z(5, N, 0);
    PadicResidue x = PadicResidue::from_int(5, N, 5);
    PadicResidue fx = x.pow(5) + x.pow(3) + x.pow(2) + PadicResidue::from_rational(5, N, Rational::parse("1/4"));
    PadicPoly g({-fx, z, z.one()}, z);
    PadicResidue y = hensel_lift_root(g, PadicResidue(5, N, 2));
    CHECK((y * y - fx).is_zero());
    CHECK(y.reduce(1).value() == 2);
}

TEST_CASE("hensel_lift_root precision coherence") {
    for (int N = 2; N <= 6; ++N) {
        auto lift = [](int prec) {
            PadicResidue z(7, prec, 0);
            PadicPoly f({z.of(-2), z, z.one()}, z);
            return hensel_lift_root(f, PadicResidue(7, prec, 3));
        };
        CHECK(lift(N).reduce(N - 1) == lift(N - 1));
    }
}

TEST_CASE("hensel_lift_root rejects a double root") {
    PadicResidue z(5, 3, 0);
    PadicPoly f({z, z, z.one()}, z);
    CHECK_THROWS_AS(hensel_lift_root(f, z), GlcError);
}

TEST_CASE("hensel_factor: x^2 - p is one ramified factor") {
    PadicPoly f = make_padic_poly(5, 3, {-5, 0, 1});
    auto fac = hensel_factor(f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].factor.degree() == 2);
    CHECK(fac[0].slope_num == 1);
    CHECK(fac[0].slope_den == 2);
    CHECK(fac[0].ramified);
}

TEST_CASE("hensel_factor: coprime linear factors") {
    PadicPoly f = make_padic_poly(5, 3, {2, -3, 1});
    auto fac = hensel_factor(f);
    REQUIRE(fac.size() == 2);
    PadicPoly prod = fac[0].factor * fac[1].factor;
    CHECK(prod == f);
    // factors come ordered by coefficients: x + 3 before x + 4
    CHECK(reduce_poly(fac[0].factor, 1) == make_padic_poly(5, 1, {-2, 1}));
    CHECK(reduce_poly(fac[1].factor, 1) == make_padic_poly(5, 1, {-1, 1}));
}

TEST_CASE("hensel_factor: irreducible quadratic has a root in the degree 2 extension") {
    // x^2 + 2 + 5 x is irreducible mod 5
    PadicPoly f = make_padic_poly(5, 3, {2, 5, 1});
    auto fac = hensel_factor(f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].factor.degree() == 2);
    auto ring = UnramifiedRing::make(5, 3, 2);
    auto fz = f.map([&](const PadicResidue& a) { return UnramifiedElement::from_base(ring, a); });
    UnramifiedElement seed = UnramifiedElement::generator(ring);  // root of x^2 + 2 mod 5
    UnramifiedElement r = hensel_lift_root(fz, seed);
    CHECK(fz.eval(r).is_zero());
}

TEST_CASE("hensel_factor splits two integral slopes") {
    // (x - 5)(x - 25)(x - 1) over Z/5^6
    PadicPoly f = make_padic_poly(5, 6, {-5, 1}) * make_padic_poly(5, 6, {-25, 1}) * make_padic_poly(5, 6, {-1, 1});
    auto fac = hensel_factor(f);
    int total = 0;
    for (const auto& h : fac) {
        total += h.factor.degree();
        CHECK(!h.ramified);
    }
    CHECK(total == 3);
    CHECK(fac.size() == 3);
}

TEST_CASE("smallest irreducible and factorization mod p") {
    CHECK(smallest_irreducible(5, 2) == make_padic_poly(5, 1, {2, 0, 1}));
    CHECK(is_irreducible_mod_p(smallest_irreducible(3, 3)));
    PadicPoly f = make_padic_poly(3, 1, {1, 0, 1}) * make_padic_poly(3, 1, {1, 1}) * make_padic_poly(3, 1, {1, 1});
    auto fac = factor_mod_p(f);
    REQUIRE(fac.size() == 2);
    PadicPoly prod = PadicPoly::constant(PadicResidue(3, 1, 1));
    for (auto& fa : fac)
        for (int e = 0; e < fa.multiplicity; ++e) prod = prod * fa.factor;
    CHECK(prod == f);
    CHECK(roots_mod_p(make_padic_poly(7, 1, {-6, 1, 1})) == std::vector<u64>{2, 4});
}

TEST_CASE("unramified ring axioms, inverse, trace and norm") {
    std::mt19937_64 rng(11);
    for (int N : {1, 2, 3}) {
        auto ring = UnramifiedRing::make(3, N, 3);
        u64 m = prime_power(3, N);
        auto rnd = [&] {
            std::vector<PadicResidue> c;
            for (int i = 0; i < 3; ++i) c.push_back(PadicResidue(3, N, rng() % m));
            return UnramifiedElement(ring, c);
        };
        for (int t = 0; t < 100; ++t) {
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a.norm() * b.norm() == (a * b).norm());
            CHECK((a + b).trace() == a.trace() + b.trace());
            if (a.is_unit()) CHECK(a * a.inv() == a.one());
        }
        CHECK(UnramifiedElement::from_int(ring, 5).trace() == PadicResidue::from_int(3, N, 15));
    }
}

TEST_CASE("square roots in F_q") {
    auto ring = UnramifiedRing::make(5, 1, 2);
    for (u64 code = 1; code < 25; ++code) {
        auto a = UnramifiedElement::from_code(ring, code);
        auto sq = a * a;
        auto r = field_sqrt(sq);
        CHECK(r * r == sq);
    }
}

TEST_CASE("lattice_kernel examples") {
    auto L15 = lattice_kernel({{1}}, {15});
    REQUIRE(L15.rank() == 1);
    CHECK(L15.basis[0][0] == 15);
    auto L29 = lattice_kernel({{1}}, {29});
    CHECK(L29.basis[0][0] == 29);
    auto Lid = lattice_kernel({{0}, {0}}, {7});
    CHECK(Lid.rank() == 2);
    CHECK(Lid.index() == 1);
}

TEST_CASE("lattice_kernel rows map to zero") {
    std::vector<std::vector<long long>> imgs{{3, 1}, {5, 2}, {1, 0}};
    std::vector<long long> mods{12, 4};
    auto L = lattice_kernel(imgs, mods);
    CHECK(L.rank() == 3);
    for (const auto& row : L.basis)
        for (std::size_t j = 0; j < mods.size(); ++j) {
            BigInt s = 0;
            for (std::size_t i = 0; i < imgs.size(); ++i) s += row[i] * BigInt(static_cast<long>(imgs[i][j]));
            CHECK(s % BigInt(static_cast<long>(mods[j])) == 0);
        }
    CHECK(L.index() == 48);
}

TEST_CASE("span membership over Z/9") {
    PadicResidue z(3, 2, 0);
    ModVector c1{z.of(3), z.of(0)}, c2{z.of(1), z.of(3)};
    CHECK(span_membership({c1}, {z.of(6), z.of(0)}).member);
    CHECK(!span_membership({c1}, {z.of(1), z.of(0)}).member);
    auto t = span_membership({c1, c2}, {z.of(4), z.of(3)});
    CHECK(t.member);
    CHECK(t.solution[0] * c1[0] + t.solution[1] * c2[0] == z.of(4));
    CHECK(t.solution[0] * c1[1] + t.solution[1] * c2[1] == z.of(3));
    CHECK(!span_membership({c2}, {z.of(0), z.of(1)}).member);
}

TEST_CASE("series inverse, sqrt and Weierstrass preparation") {
    PadicResidue z(5, 4, 0);
    auto one_plus_s = Series<PadicResidue>::from_poly(make_padic_poly(5, 4, {1, 1}), 10);
    auto inv = one_plus_s.inverse();
    CHECK(inv[3] == z.of(-1));
    auto sq = (one_plus_s * one_plus_s).sqrt(z.one());
    CHECK(sq == one_plus_s);
    // g = (s - 5)(s - 50)(1 + s + s^2)
    PadicPoly P0 = make_padic_poly(5, 4, {-5, 1}) * make_padic_poly(5, 4, {-50, 1});
    auto g = Series<PadicResidue>::from_poly(P0 * make_padic_poly(5, 4, {1, 1, 1}), 16);
    CHECK(weierstrass_prepare(g, 2, 4) == P0);
}

TEST_CASE("power sums agree with direct evaluation") {
    PadicPoly P = make_padic_poly(7, 3, {-3, 1}) * make_padic_poly(7, 3, {-5, 1}) * make_padic_poly(7, 3, {2, 1});
    auto ps = power_sums(P, 6);
    for (int n = 1; n <= 6; ++n) {
        PadicResidue a = PadicResidue::from_int(7, 3, 3).pow(n) + PadicResidue::from_int(7, 3, 5).pow(n) +
                         PadicResidue::from_int(7, 3, -2).pow(static_cast<u64>(n));
        CHECK(ps[static_cast<std::size_t>(n)] == a);
    }
}

TEST_CASE("antiderivative mod p only needs the linear term") {
    // (1/p) * sum_n a_{n-1} s^n / n mod p, for s in pZ, equals a_0 * s / p
    std::mt19937_64 rng(3);
    const u64 p = 5;
    const int N = 6;
    for (int t = 0; t < 50; ++t) {
        std::vector<long long> a;
        for (int i = 0; i < 12; ++i) a.push_back(static_cast<long long>(rng() % 25));
        PadicResidue s = PadicResidue::from_int(p, N, static_cast<long long>(p * (rng() % 125)));
        PadicFraction acc(PadicResidue(p, N, 0));
        PadicResidue sn = s.one();
        for (int n = 1; n <= 12; ++n) {
            sn = sn * s;
            acc = acc + PadicFraction(sn * s.of(a[static_cast<std::size_t>(n - 1)])).divide_by_int(n);
        }
        PadicResidue full = acc.divide_by_p().to_residue(1);
        PadicResidue linear = PadicFraction(s * s.of(a[0])).divide_by_p().to_residue(1);
        CHECK(full == linear);
    }
}

TEST_CASE("padic fraction tracks lost digits") {
    PadicFraction f(PadicResidue::from_int(3, 3, 9));
    CHECK(f.divide_by_int(3).absolute_precision() == 2);
    CHECK(f.divide_by_int(3).to_residue(2) == PadicResidue::from_int(3, 2, 3));
    CHECK_THROWS_AS(f.divide_by_int(3).to_residue(3), GlcError);
    CHECK_THROWS_AS(PadicFraction(PadicResidue::from_int(3, 3, 1)).divide_by_p().to_residue(1), GlcError);
}
