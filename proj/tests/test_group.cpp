#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "heilbronn/group.hpp"

using namespace hb;

namespace {

std::vector<u64> small_primes_upto(u64 bound) {
    std::vector<u64> out;
    for (u64 n = 3; n <= bound; n += 2)
        if (is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("subgroup order and membership") {
    for (u64 pv : small_primes_upto(199)) {
        Prime p(pv);
        Subgroup g = Subgroup::build(p);
        CHECK(g.order() == pv - 1);
        CHECK(g.contains(1));
        // (-1)^p = -1, so p^2 - 1 lies in Gamma
        CHECK(g.contains(p.squared() - 1));
        CHECK(!g.contains(0));
        CHECK(!g.contains(pv));
        CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    }
}

TEST_CASE("m -> m^p is a homomorphism onto Gamma") {
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        Prime p(pv);
        Subgroup g = Subgroup::build(p);
        const u64 n = p.squared();
        for (u64 a = 1; a < pv; ++a)
            for (u64 b = 1; b < pv; ++b) {
                u64 lhs = pow_mod(a * b % pv, pv, n);
                u64 rhs = mul_mod(pow_mod(a, pv, n), pow_mod(b, pv, n), n);
                CHECK(lhs == rhs);
                CHECK(g.contains(lhs));
            }
        // closure under products and inverses
        for (u64 x : g.elements()) {
            CHECK(g.contains(inv_mod(x, n)));
            for (u64 y : g.elements()) CHECK(g.contains(mul_mod(x, y, n)));
        }
    }
}

TEST_CASE("lift is the section of reduction mod p") {
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull, 101ull}) {
        Prime p(pv);
        Subgroup g = Subgroup::build(p);
        for (u64 x = 1; x < p.squared(); ++x) {
            if (x % pv == 0) continue;
            u64 l = g.lift(x);
            CHECK(g.contains(l));
            CHECK(l % pv == x % pv);
        }
    }
}

TEST_CASE("coset decomposition partitions Z_{p^2}") {
    for (u64 pv : small_primes_upto(199)) {
        Prime p(pv);
        // build() verifies the partition internally and throws on failure
        CosetDecomposition dec = CosetDecomposition::build(p);
        CHECK(dec.reps().size() == pv);
        CHECK(dec.cosets().size() == pv);
        for (u64 j = 1; j <= pv; ++j) {
            CHECK(dec.reps()[j - 1] == (1 + pv * j) % p.squared());
            CHECK(dec.cosets()[j - 1].size() == pv - 1);
        }
        CHECK(dec.p_coset().size() == pv - 1);
    }
    // explicit exhaustive count for small p
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        Prime p(pv);
        CosetDecomposition dec = CosetDecomposition::build(p);
        std::set<u64> seen;
        for (const auto& coset : dec.cosets()) seen.insert(coset.begin(), coset.end());
        for (u64 x : dec.p_coset()) CHECK(seen.insert(x).second);
        CHECK(seen.insert(0).second);
        CHECK(seen.size() == p.squared());
    }
}

TEST_CASE("classify agrees with the coset tables") {
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        Prime p(pv);
        CosetDecomposition dec = CosetDecomposition::build(p);
        for (u64 x = 0; x < p.squared(); ++x) {
            CosetLabel lab = dec.classify(x);
            if (x == 0) {
                CHECK(lab.kind == CosetKind::Zero);
            } else if (x % pv == 0) {
                CHECK(lab.kind == CosetKind::PCoset);
            } else {
                CHECK(lab.kind == CosetKind::UnitCoset);
                const auto& coset = dec.cosets()[lab.j - 1];
                CHECK(std::binary_search(coset.begin(), coset.end(), x));
            }
        }
        // xi_p = 1 + p*p = 1 in Z_{p^2}, so j = p labels Gamma itself
        CHECK(dec.classify(1).j == pv);
    }
}

TEST_CASE("Gamma invariance of coset unions") {
    Prime p(7);
    CosetDecomposition dec = CosetDecomposition::build(p);
    std::vector<u64> q = dec.cosets()[2];
    q.insert(q.end(), dec.cosets()[5].begin(), dec.cosets()[5].end());
    CHECK(dec.is_gamma_invariant(q));
    q.insert(q.end(), dec.p_coset().begin(), dec.p_coset().end());
    CHECK(dec.is_gamma_invariant(q));
    q.push_back(0);
    CHECK(dec.is_gamma_invariant(q));
    q.pop_back();
    q.pop_back();  // drop one element of the p-coset
    CHECK(!dec.is_gamma_invariant(q));
}
