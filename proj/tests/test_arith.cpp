#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heilbronn/arith.hpp"

using namespace hb;

TEST_CASE("modular primitives") {
    CHECK(mul_mod(u64(1) << 31, u64(1) << 31, (u64(1) << 62) + 1) ==
          ((u128(1) << 62) % ((u64(1) << 62) + 1)));
    CHECK(add_mod(6, 8, 9) == 5);
    CHECK(sub_mod(3, 8, 9) == 4);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(0, 0, 7) == 1);
    for (u64 m : {7ull, 25ull, 121ull, 3511ull * 3511ull}) {
        for (u64 x = 1; x < 50; ++x) {
            if (gcd_u64(x, m) != 1) continue;
            CHECK(mul_mod(x, inv_mod(x, m), m) == 1);
        }
    }
    CHECK_THROWS_AS(inv_mod(5, 25), std::domain_error);
    CHECK_THROWS_AS(inv_mod(0, 7), std::domain_error);
}

TEST_CASE("deterministic primality") {
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(561));      // Carmichael
    CHECK(!is_prime(41041));    // Carmichael
    CHECK(is_prime(1093));
    CHECK(is_prime(3511));
    CHECK(!is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime((u64(1) << 61) - 1));
    CHECK(!is_prime(u64(1) << 61));
    // sieve cross-check
    for (u64 n = 2; n < 2000; ++n) {
        bool composite = false;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) composite = true;
        CHECK(is_prime(n) == !composite);
    }
}

TEST_CASE("Prime validation") {
    CHECK(Prime(3).value() == 3);
    CHECK(Prime(101).squared() == 101 * 101);
    CHECK_THROWS(Prime(2));
    CHECK_THROWS(Prime(1));
    CHECK_THROWS(Prime(9));
    CHECK_THROWS(Prime(u64(1) << 32));
}

TEST_CASE("Residue arithmetic") {
    Residue a(7, 25), b(18, 25);
    CHECK((a * b).value == (7 * 18) % 25);
    CHECK((a + b).value == 0);
    CHECK((a - b).value == (7 + 25 - 18) % 25);
    CHECK(a.pow(2).value == 49 % 25);
    CHECK((a * a.inverse()).value == 1);
    CHECK(a.is_unit());
    CHECK(!Residue(5, 25).is_unit());
    CHECK_THROWS_AS(a * Residue(1, 26), std::invalid_argument);
    CHECK_THROWS_AS(Residue(1, 0), std::invalid_argument);
}

TEST_CASE("unit group projection") {
    Prime p(5);
    for (u64 x = 1; x < 25; ++x) {
        if (x % 5 == 0) continue;
        Residue r = project(Residue(x, 25), p);
        CHECK(r.modulus == 5);
        CHECK(r.value == x % 5);
    }
    // p-th powers project to p-th powers: (m^p mod p^2) -> m^p mod p = m
    for (u64 m = 1; m < 5; ++m) {
        Residue g(pow_mod(m, 5, 25), 25);
        CHECK(project(g, p).value == m);
    }
    CHECK_THROWS(project(Residue(5, 25), p));   // not a unit
    CHECK_THROWS(project(Residue(3, 10), p));   // modulus not a power of p
    CHECK_THROWS(project(Residue(3, 5), p));    // exponent 1
}
