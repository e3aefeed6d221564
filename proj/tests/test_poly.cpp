#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heilbronn/poly.hpp"

using namespace hb;

namespace {

PolyFp random_poly(std::mt19937_64& rng, u64 p, u64 max_deg) {
    std::uniform_int_distribution<u64> deg_pick(0, max_deg);
    std::uniform_int_distribution<u64> coeff_pick(0, p - 1);
    std::vector<u64> c(deg_pick(rng) + 1);
    for (auto& v : c) v = coeff_pick(rng);
    return PolyFp(p, std::move(c));
}

}  // namespace

TEST_CASE("construction and normalization") {
    PolyFp a(7, {8, 14, 0, 0});
    CHECK(a.degree() == 0);
    CHECK(a.coeff(0) == 1);
    CHECK(PolyFp::zero(7).degree() == -1);
    CHECK(PolyFp::monomial(7, 3, 9) == PolyFp(7, {0, 0, 0, 2}));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(5);
    const u64 p = 13;
    for (int trial = 0; trial < 100; ++trial) {
        PolyFp a = random_poly(rng, p, 8);
        PolyFp b = random_poly(rng, p, 8);
        PolyFp c = random_poly(rng, p, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == PolyFp::zero(p));
        // evaluation is a ring homomorphism
        for (u64 x = 0; x < p; ++x) {
            CHECK((a * b).eval(x) == mul_mod(a.eval(x), b.eval(x), p));
            CHECK((a + b).eval(x) == add_mod(a.eval(x), b.eval(x), p));
        }
    }
    CHECK_THROWS(PolyFp(7, {1}) + PolyFp(11, {1}));
}

TEST_CASE("derivative and power") {
    const u64 p = 11;
    PolyFp x = PolyFp::monomial(p, 1);
    PolyFp a = PolyFp(p, {3, 0, 5, 1});  // 3 + 5X^2 + X^3
    CHECK(a.derivative() == PolyFp(p, {0, 10, 3}));
    CHECK(a.derivative(4) == PolyFp::zero(p));
    // X^p has zero derivative in characteristic p
    CHECK(x.pow(p).derivative() == PolyFp::zero(p));
    CHECK(x.pow(0) == PolyFp::constant(p, 1));
    std::mt19937_64 rng(9);
    PolyFp b = random_poly(rng, p, 4);
    CHECK(b.pow(3) == b * b * b);
    // Leibniz: (ab)' = a'b + ab'
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
}

TEST_CASE("euclidean division") {
    std::mt19937_64 rng(17);
    const u64 p = 31;
    for (int trial = 0; trial < 100; ++trial) {
        PolyFp a = random_poly(rng, p, 12);
        PolyFp d = random_poly(rng, p, 5);
        if (d.is_zero()) continue;
        PolyDivMod qr = a.divmod(d);
        CHECK(qr.quotient * d + qr.remainder == a);
        CHECK(qr.remainder.degree() < d.degree());
    }
    CHECK_THROWS(PolyFp(7, {1, 2}).divmod(PolyFp::zero(7)));
}

TEST_CASE("synthetic division and vanishing order") {
    const u64 p = 101;
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        PolyFp a = random_poly(rng, p, 10);
        if (a.is_zero()) continue;
        u64 root = trial % p;
        PolyLinearDiv ld = a.divide_linear(root);
        CHECK(ld.remainder == a.eval(root));
        PolyFp linear(p, {(p - root) % p, 1});
        CHECK(ld.quotient * linear + PolyFp::constant(p, ld.remainder) == a);
    }
    PolyFp m2(p, {p - 2, 1});
    PolyFp m3(p, {p - 3, 1});
    PolyFp f = m2 * m2 * m2 * m3;
    CHECK(f.vanishing_order(2) == 3);
    CHECK(f.vanishing_order(3) == 1);
    CHECK(f.vanishing_order(5) == 0);
    CHECK_THROWS(PolyFp::zero(p).vanishing_order(2));
}
