#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heilbronn/certificate_io.hpp"
#include "heilbronn/stepanov.hpp"

using namespace hb;

TEST_CASE("truncated logarithm") {
    for (u64 pv : {3ull, 5ull, 7ull, 31ull}) {
        Prime p(pv);
        PolyFp f = f_poly(p);
        CHECK(f.degree() == int(pv) - 1);
        CHECK(f.coeff(0) == 0);
        for (u64 i = 1; i < pv; ++i) CHECK(mul_mod(f.coeff(i), i, pv) == 1);
        // f'(X) = 1 + X + ... + X^{p-2} = (X^{p-1} - 1)/(X - 1)
        PolyFp d = f.derivative();
        for (u64 i = 0; i + 1 < pv; ++i) CHECK(d.coeff(i) == 1);
    }
}

TEST_CASE("derivative decomposition") {
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        Prime p(pv);
        PolyFp f = f_poly(p);
        PolyFp xx1 = PolyFp(pv, {0, 1}) * PolyFp(pv, {1, pv - 1});
        PolyFp xp_x = PolyFp::monomial(pv, pv) - PolyFp::monomial(pv, 1);
        for (u64 r = 1; r < pv; ++r) {
            auto [q, h] = derivative_decompose(p, r);
            CHECK(q.degree() <= int(r) + 1);
            CHECK(h.degree() <= int(r) - 1);
            CHECK(xx1.pow(r) * f.derivative(r) == q + xp_x * h);
        }
        auto [q1, h1] = derivative_decompose(p, 1);
        CHECK(q1.is_zero());
        CHECK(h1 == PolyFp::constant(pv, pv - 1));
        CHECK_THROWS(derivative_decompose(p, 0));
        CHECK_THROWS(derivative_decompose(p, pv));
    }
}

TEST_CASE("cell decomposition of lambda") {
    Prime p(7);
    Subgroup gam = Subgroup::build(p);
    const u64 n = p.squared();
    for (u64 lambda = 1; lambda < n; ++lambda) {
        if (lambda % 7 == 0) continue;
        MCell cell = MCell::make(p, 1, 2, lambda);
        CHECK(gam.contains(cell.g));
        CHECK(cell.s >= 1);
        CHECK(cell.s <= 7);
        CHECK(mul_mod((1 + cell.s * 7) % n, cell.g, n) == lambda);
    }
    CHECK_THROWS(MCell::make(p, 1, 2, 7));  // lambda must be a unit
}

TEST_CASE("difference lemma exhaustive and sampled") {
    for (u64 pv : {3ull, 5ull, 7ull}) {
        auto rep = verify_difference_lemma(Prime(pv));
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
        CHECK(rep.cases_checked > 0);
    }
    for (u64 pv : {11ull, 13ull}) {
        auto rep = verify_difference_lemma(Prime(pv), 50);
        CHECK(rep.ok);
    }
}

TEST_CASE("direct count equals restricted reduced count per cell") {
    Prime p(5);
    CosetDecomposition dec = CosetDecomposition::build(p);
    for (u32 i = 1; i <= 5; ++i)
        for (u32 j = 1; j <= 5; ++j)
            for (u64 lambda = 1; lambda < 25; ++lambda) {
                if (lambda % 5 == 0) continue;
                MCell cell = MCell::make(p, i, j, lambda);
                ReducedCount rc = m_cell_count_reduced(cell);
                CHECK(m_cell_count_direct(cell, dec) == rc.restricted);
                CHECK(rc.restricted <= rc.unrestricted);
                CHECK(rc.solutions.size() == rc.unrestricted);
            }
}

TEST_CASE("default parameter shapes") {
    StepanovParams q = default_params(Prime(2003), 1);
    CHECK(q.A == 158);
    CHECK(q.B == 12);
    CHECK(q.C == 12);
    CHECK(q.D == 4);
    // degenerate at small p: D collapses to zero
    CHECK(default_params(Prime(101), 1).D == 0);
}

TEST_CASE("certificate build, verify, serialize") {
    Prime p(101);
    std::vector<MCell> cells = {MCell::make(p, 1, 2, 1)};
    StepanovParams params{10, 5, 2, 3};
    Certificate cert = build_certificate(p, cells, params);
    CHECK(!cert.psi.is_zero());
    CHECK(cert.psi.degree() == 201);
    CHECK(cert.bound() == doctest::Approx(239.0));
    REQUIRE(cert.transcript.size() == 1);
    CHECK(cert.transcript[0].points == std::vector<u64>{47, 95});
    CHECK(cert.transcript[0].orders.size() == 2);
    for (u64 o : cert.transcript[0].orders) CHECK(o >= 3);

    CertificateVerification v = verify_certificate(cert);
    CHECK(v.ok);
    CHECK(v.psi_nonzero);
    CHECK(v.total_points == 2);
    CHECK(v.bound == doctest::Approx(239.0));

    std::string text = certificate_to_json(cert);
    Certificate back = certificate_from_json(text);
    CHECK(back.phi == cert.phi);
    CHECK(back.psi == cert.psi);
    CHECK(verify_certificate(back).ok);
}

TEST_CASE("tampered certificates are rejected") {
    Prime p(101);
    Certificate cert = build_certificate(p, {MCell::make(p, 1, 2, 1)}, {10, 5, 2, 3});
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<u64> shift(1, 100);
    for (int t = 0; t < 20; ++t) {
        Certificate bad = cert;
        if (t % 2 == 0) {
            std::uniform_int_distribution<std::size_t> pick(0, bad.phi.size() - 1);
            std::size_t at = pick(rng);
            bad.phi[at] = (bad.phi[at] + shift(rng)) % 101;
        } else {
            auto c = bad.psi.coeffs();
            std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
            std::size_t at = pick(rng);
            c[at] = (c[at] + shift(rng)) % 101;
            bad.psi = PolyFp(101, std::move(c));
        }
        CHECK(!verify_certificate(bad).ok);
    }
}

TEST_CASE("inadmissible parameters are refused") {
    Prime p(101);
    std::vector<MCell> cells = {MCell::make(p, 1, 2, 1)};
    CHECK_THROWS(build_certificate(p, cells, {10, 5, 2, 0}));
    CHECK_THROWS(build_certificate(p, cells, {10, 5, 2, 50}));   // admissibility fails
    CHECK_THROWS(build_certificate(p, cells, {101, 2, 2, 1}));   // AB > p
    CHECK_THROWS(build_certificate(p, {}, {10, 5, 2, 3}));       // no cells
}

TEST_CASE("coset correlation sums") {
    Prime p(5);
    CosetDecomposition dec = CosetDecomposition::build(p);
    auto set_of = [&](const std::vector<u32>& idx) {
        std::vector<u64> out;
        for (u32 j : idx) {
            const auto& c = j == 0 ? dec.p_coset() : dec.cosets()[j - 1];
            out.insert(out.end(), c.begin(), c.end());
        }
        return out;
    };
    std::vector<u32> q = {1, 3}, q1 = {2}, q2 = {0, 4};
    CosetCorrelation cc = coset_correlation(p, q, q1, q2);
    auto sq = set_of(q), s1 = set_of(q1), s2 = set_of(q2);
    BigInt brute = 0;
    for (u64 x : sq)
        for (u64 a : s1)
            for (u64 b : s2)
                if ((a + x) % 25 == b % 25) ++brute;
    CHECK(cc.count == brute);
    CHECK(cc.bound_ratio > 0);
}

TEST_CASE("ordered convolution values per coset") {
    Prime p(5);
    Subgroup gam = Subgroup::build(p);
    CountTable conv = iterated_convolution(25, gam.elements(), 2);
    OrderedConvolutionValues ov = ordered_convolution_values(p, 2);
    REQUIRE(ov.coset_values.size() == 5);
    CosetDecomposition dec = CosetDecomposition::build(p);
    BigInt prev = ov.coset_values[0].second;
    for (const auto& [j, value] : ov.coset_values) {
        CHECK(value == conv.get(dec.reps()[j - 1]));
        CHECK(value <= prev);
        prev = value;
    }
    CHECK(ov.at_zero == conv.get(0));
    CHECK(ov.on_p_coset == conv.get(5));
}
