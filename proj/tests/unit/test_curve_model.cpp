#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "sample_curves.hpp"

using namespace glc;
using namespace samples;

namespace {

std::set<std::pair<u64, u64>> input_coords_mod_p(const HyperellipticCurve& c) {
    std::set<std::pair<u64, u64>> out;
    u64 p = c.prime();
    for (const auto& P : enumerate_points(c)) {
        if (P.infinity) continue;
        PadicResidue x(p, 1, P.x), Y(p, 1, P.y);
        PadicPoly h = c.h_input().coeffs().empty()
                          ? PadicPoly(x.zero())
                          : c.h_input().map([&](const Rational& a) { return PadicResidue::from_rational(p, 1, a); });
        PadicResidue y = Y - h.eval(x) * x.of(2).inv();
        out.insert({P.x, y.value()});
    }
    return out;
}

}  // namespace

TEST_CASE("validate accepts good models and completes the square") {
    auto c = genus2_p5();
    CHECK(c.genus() == 2);
    CHECK(c.f() == RationalPoly(q({"1/4", "0", "1", "1", "0", "1"}), Rational()));
    auto c2 = genus2_h_p3();
    CHECK(c2.genus() == 2);
    // f + h^2/4 with h = x^2 + x + 1
    CHECK(c2.f() == RationalPoly(q({"1/4", "1/2", "3/4", "3/2", "-3/4", "1"}), Rational()));
    CHECK(genus3_p5().genus() == 3);
}

TEST_CASE("validate rejects bad input with the right error") {
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const GlcError& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    CHECK(code_of([] { HyperellipticCurve::validate(q({"0", "0", "0", "0", "0", "1"}), {}, 5); }) == ErrorCode::BadReduction);
    CHECK(code_of([] { HyperellipticCurve::validate(q({"1", "0", "0", "0", "0", "0", "1"}), {}, 5); }) == ErrorCode::EvenDegree);
    CHECK(code_of([] { HyperellipticCurve::validate(q({"1", "0", "0", "0", "0", "1"}), {}, 2); }) == ErrorCode::PrimeTwo);
    CHECK(code_of([] { HyperellipticCurve::validate(q({"1", "0", "0", "0", "0", "5"}), {}, 5); }) == ErrorCode::BadReduction);
    CHECK(code_of([] { HyperellipticCurve::validate(q({"1/5", "0", "0", "0", "0", "1"}), {}, 5); }) == ErrorCode::BadReduction);
    CHECK(code_of([] { HyperellipticCurve::validate(q({"1", "0", "0", "1"}), {}, 5); }) == ErrorCode::UnsupportedGenus);
    // h of degree g + 1 makes the completed square even
    CHECK(code_of([] { HyperellipticCurve::validate(q({"1", "0", "0", "0", "0", "1"}), q({"0", "0", "0", "1"}), 5); }) ==
          ErrorCode::EvenDegree);
}

TEST_CASE("points over F_p of the sample curves") {
    auto c = genus2_p5();
    auto pts = enumerate_points(c);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == FpPoint{false, 0, 2});
    CHECK(pts[1] == FpPoint{false, 0, 3});
    CHECK(pts[2].infinity);

    auto c2 = genus2_h_p3();
    CHECK(enumerate_points(c2).size() == 7);
    std::set<std::pair<u64, u64>> expect2{{0, 0}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 2}};
    CHECK(input_coords_mod_p(c2) == expect2);

    auto c3 = genus2_xy_p3();
    std::set<std::pair<u64, u64>> expect3{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 2}};
    CHECK(input_coords_mod_p(c3) == expect3);

    auto c5 = genus3_p5();
    CHECK(enumerate_points(c5).size() == 10);
    std::set<std::pair<u64, u64>> expect5{{0, 4}, {0, 1}, {1, 4}, {1, 1}, {2, 0}, {4, 4}, {4, 1}, {3, 3}, {3, 2}};
    CHECK(input_coords_mod_p(c5) == expect5);
}

TEST_CASE("extension point counts agree with the character sum") {
    for (auto c : {genus2_p5(), genus2_h_p3(), genus3_p3()}) {
        for (int k = 1; k <= 2; ++k) {
            auto pts = enumerate_points_ext(c, k);
            CHECK(pts.size() == count_points(c, k));
            for (const auto& P : pts)
                if (!P.infinity) CHECK(P.y * P.y == c.f_mod(1).map([&](const PadicResidue& a) {
                    return UnramifiedElement::from_base(P.x.ring(), a);
                }).eval(P.x));
        }
    }
    CHECK_THROWS_AS(count_points(genus2_p5(), 3, 100), GlcError);
}

TEST_CASE("L-polynomial: known group orders, functional equation, Weil bounds") {
    CHECK(count_and_lpoly(genus3_p5()).at_one() == 340);
    CHECK(count_and_lpoly(genus3_p3()).at_one() == 106);
    for (auto c : {genus2_p5(), genus2_h_p3(), genus2_xy_p3(), genus3_p5(), genus3_p3()}) {
        auto L = count_and_lpoly(c);
        CHECK(L.coeffs[0] == 1);
        CHECK(L.functional_equation_holds());
        double q = static_cast<double>(c.prime()), g2 = 2.0 * c.genus();
        double order = L.at_one().get_d();
        CHECK(order >= std::floor(std::pow(std::sqrt(q) - 1, g2)));
        CHECK(order <= std::ceil(std::pow(std::sqrt(q) + 1, g2)));
        double n1 = static_cast<double>(enumerate_points(c).size());
        CHECK(std::abs(n1 - q - 1) <= 2 * c.genus() * std::sqrt(q));
    }
}

TEST_CASE("brute-force Jacobian order equals L(1)") {
    for (auto c : {genus2_p5(), genus2_h_p3(), genus2_xy_p3()})
        CHECK(BigInt(static_cast<unsigned long>(brute_force_jacobian_order(c))) == count_and_lpoly(c).at_one());
}

TEST_CASE("involution permutes points and fixes exactly the Weierstrass points") {
    for (auto c : {genus2_p5(), genus2_h_p3(), genus3_p5(), genus3_p3()}) {
        auto pts = enumerate_points(c);
        std::set<FpPoint> all(pts.begin(), pts.end()), image;
        for (const auto& P : pts) {
            FpPoint Q = c.involution(P);
            image.insert(Q);
            bool fixed = Q == P;
            auto kind = disk_of(c, P).kind;
            CHECK(fixed == (kind != DiskKind::FiniteOrdinary));
        }
        CHECK(all == image);
    }
}

TEST_CASE("canonical lifts") {
    auto c = genus2_p5();
    ResidueDisk d = disk_of(c, FpPoint{false, 0, 2});
    CHECK(d.kind == DiskKind::FiniteOrdinary);
    LocalPoint L = canonical_lift(c, d, 1, 2);
    CHECK(L.x->value() == 5);
    CHECK(*L.y == PadicResidue::from_rational(5, 2, Rational(-1, 2)));
    LocalPoint L0 = canonical_lift(c, d, 0, 3);
    CHECK(L0.x->reduce(1).value() == 0);
    CHECK(L0.y->reduce(1).value() == 2);
    LocalPoint a = canonical_lift(c, d, 1, 3), b = canonical_lift(c, d, 2, 3);
    CHECK((b.param - a.param).value() == 5);
    CHECK((*b.x - *a.x).value() == 5);

    auto c5 = genus3_p5();
    ResidueDisk w = disk_of(c5, FpPoint{false, 2, 0});
    CHECK(w.kind == DiskKind::FiniteWeierstrass);
    LocalPoint lw = canonical_lift(c5, w, 3, 4);
    CHECK(*lw.y * *lw.y == c5.f_mod(4).eval(*lw.x));
    CHECK(lw.y->value() == 15);
    ResidueDisk inf = disk_of(c5, FpPoint::at_infinity());
    CHECK(inf.kind == DiskKind::Infinity);
    CHECK(canonical_lift(c5, inf, 0, 3).param.is_zero());
}

TEST_CASE("lift coherence across precisions") {
    for (auto c : {genus2_p5(), genus2_h_p3(), genus3_p3()}) {
        u64 p = c.prime();
        for (const auto& d : residue_disks(c)) {
            if (d.kind == DiskKind::Infinity) continue;
            for (int N : {2, 3}) {
                for (long long mu = 0; mu < static_cast<long long>(p * p); ++mu) {
                    LocalPoint hi = canonical_lift(c, d, mu, N);
                    long long low_mu = N - 2 == 0 ? 0 : mu % static_cast<long long>(prime_power(p, N - 2));
                    LocalPoint lo = canonical_lift(c, d, low_mu, N - 1);
                    CHECK(hi.x->reduce(N - 1) == *lo.x);
                    CHECK(hi.y->reduce(N - 1) == *lo.y);
                    CHECK(*hi.y * *hi.y == c.f_mod(N).eval(*hi.x));
                    CHECK(hi.x->reduce(1).value() == d.center.x);
                }
            }
        }
    }
}

TEST_CASE("rational points as local points") {
    auto c = genus2_p5();
    LocalPoint P = local_point(c, pt("0", "-1/2"), 3);
    CHECK(P.disk.center == FpPoint{false, 0, 2});
    CHECK(P.param.is_zero());
    auto c5 = genus3_p5();
    CHECK(local_point(c5, RationalPoint::at_infinity(), 3).disk.kind == DiskKind::Infinity);
    CHECK_THROWS_AS(local_point(c, pt("1", "1"), 3), GlcError);
    PadicResidue x = PadicResidue::from_digits(5, {0, 1, 0}), y = canonical_lift(c, disk_of(c, {false, 0, 2}), 1, 3).y.value();
    LocalPoint Q = local_point(c, x, y);
    CHECK(Q.param.value() == 5);
    CHECK_THROWS_AS(local_point(c, x, y + y.of(25)), GlcError);
    LocalPoint iQ = involution(c, Q);
    CHECK(iQ.disk.center == FpPoint{false, 0, 3});
    CHECK(iQ.param == Q.param);
}
