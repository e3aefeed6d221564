#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "heilbronn/fermat.hpp"
#include "heilbronn/group.hpp"

using namespace hb;

TEST_CASE("quotient values and the logarithm property") {
    CHECK(fermat_quotient(Prime(5), 1).q == 0);
    CHECK(fermat_quotient(Prime(1093), 2).q == 0);
    CHECK(fermat_quotient(Prime(3511), 2).q == 0);
    CHECK(fermat_quotient(Prime(5), 2).q != 0);
    CHECK_THROWS_AS(fermat_quotient(Prime(5), 10), std::domain_error);
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        Prime p(pv);
        for (u64 m = 1; m < p.squared(); ++m) {
            if (m % pv == 0) continue;
            for (u64 n = 1; n < pv; ++n) {
                u64 lhs = fermat_quotient(p, m * n).q;
                u64 rhs = add_mod(fermat_quotient(p, m).q, fermat_quotient(p, n).q, pv);
                CHECK(lhs == rhs);
            }
        }
    }
    // q depends on n only through n mod p^2
    Prime p(13);
    for (u64 n = 1; n < 40; ++n) {
        if (n % 13 == 0) continue;
        CHECK(fermat_quotient(p, n).q == fermat_quotient(p, n + p.squared()).q);
    }
}

TEST_CASE("kernel of the quotient is the subgroup") {
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        Prime p(pv);
        Subgroup g = Subgroup::build(p);
        for (u64 n = 1; n < p.squared(); ++n) {
            if (n % pv == 0) continue;
            CHECK((fermat_quotient(p, n).q == 0) == g.contains(n));
        }
    }
}

TEST_CASE("smallest nonvanishing index") {
    CHECK(smallest_nonvanishing(Prime(3)).l_p == 2);
    CHECK(smallest_nonvanishing(Prime(5)).l_p == 2);
    CHECK(smallest_nonvanishing(Prime(1093)).l_p == 3);
    CHECK(smallest_nonvanishing(Prime(3511)).l_p == 3);
    CHECK(smallest_nonvanishing(Prime(1091)).l_p == 2);
}

TEST_CASE("congruence count against brute force") {
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        Prime p(pv);
        Subgroup g = Subgroup::build(p);
        const u64 n = p.squared();
        for (u64 h = 1; 2 * h < n; h += (pv < 11 ? 1 : 5)) {
            u64 brute = 0;
            for (u64 u : g.elements())
                for (i64 x = -i64(h); x <= i64(h); ++x) {
                    if (x == 0) continue;
                    u64 xr = x >= 0 ? u64(x) : n - u64(-x);
                    u64 y = mul_mod(u, xr, n);
                    // y must be a nonzero signed representative of height <= h
                    if (y != 0 && (y <= h || n - y <= h)) ++brute;
                }
            CHECK(congruence_count(p, h) == brute);
        }
        CHECK(congruence_count(Prime(5), 2) == 8);
        CHECK_THROWS(congruence_count(p, 0));
        CHECK_THROWS(congruence_count(p, (n + 1) / 2));
    }
}

TEST_CASE("prime range enumeration") {
    std::vector<u64> got = primes_in_range(1, 1000);
    std::vector<u64> expect;
    for (u64 n = 2; n <= 1000; ++n) {
        bool composite = false;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) composite = true;
        if (!composite) expect.push_back(n);
    }
    CHECK(got == expect);
    CHECK(primes_in_range(90, 96).empty());
    CHECK(primes_in_range(97, 97) == std::vector<u64>{97});
    CHECK(primes_in_range(1000000, 1000100) ==
          std::vector<u64>{1000003, 1000033, 1000037, 1000039, 1000081, 1000099});
}

TEST_CASE("batch scan with resumable cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hb_lp_test";
    fs::remove_all(dir);

    auto first = lp_scan(1000, 1200, 2, dir);
    CHECK(fs::exists(dir / "lp.csv"));
    auto expect = primes_in_range(1000, 1200);
    REQUIRE(first.size() == expect.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].p == expect[i]);
        CHECK(first[i].l_p == (first[i].p == 1093 ? 3 : 2));
    }

    // second run is served from the cache and extends it
    auto second = lp_scan(1000, 1300, 4, dir);
    CHECK(second.size() == primes_in_range(1000, 1300).size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(second[i].p == first[i].p);
        CHECK(second[i].l_p == first[i].l_p);
    }

    // thread count does not affect results
    auto serial = lp_scan(1000, 1300, 1);
    REQUIRE(serial.size() == second.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].p == second[i].p);
        CHECK(serial[i].l_p == second[i].l_p);
    }
    fs::remove_all(dir);
}
