#include "heilbronn/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "heilbronn/group.hpp"
#include "heilbronn/spectral.hpp"
#include "heilbronn/stepanov.hpp"
#include "heilbronn/sums.hpp"

namespace hb {

namespace {

SuiteResult difference_lemma_suite(const Prime& p) {
    std::optional<u64> sample;
    if (p.value() > 7) sample = 50;
    auto rep = verify_difference_lemma(p, sample);
    std::ostringstream os;
    os << rep.cases_checked << " cases";
    if (!rep.ok) {
        const auto& f = rep.failures.front();
        os << "; first failure at (i,j,lambda) = (" << f.i << "," << f.j << "," << f.lambda
           << "): direct " << f.direct << " vs reduced " << f.reduced;
    }
    return {"difference-lemma", rep.ok, os.str()};
}

SuiteResult energy_oracle_suite(const Prime& p) {
    const u64 n = p.squared();
    Subgroup g = Subgroup::build(p);
    const auto& a = g.elements();
    BigInt e2 = energy(n, a, a);
    BigInt e3 = higher_energy(n, a, a, 3);
    BigInt t3 = t_k(n, a, 3);
    bool ok = true;
    std::ostringstream os;
    os << "E=" << e2 << " E3=" << e3 << " T3=" << t3;
    if (p.value() <= 13) {
        // brute-force tuple enumeration
        BigInt be2 = 0;
        for (u64 a1 : a)
            for (u64 b1 : a)
                for (u64 a2 : a)
                    for (u64 b2 : a)
                        if ((a1 + b1) % n == (a2 + b2) % n) ++be2;
        BigInt be3 = 0, bt3 = 0;
        for (u64 a1 : a)
            for (u64 a2 : a)
                for (u64 a3 : a)
                    for (u64 b1 : a)
                        for (u64 b2 : a)
                            for (u64 b3 : a) {
                                u64 d1 = (a1 + n - b1) % n;
                                if (d1 == (a2 + n - b2) % n && d1 == (a3 + n - b3) % n) ++be3;
                                if ((a1 + a2 + a3) % n == (b1 + b2 + b3) % n) ++bt3;
                            }
        ok = e2 == be2 && e3 == be3 && t3 == bt3;
        if (!ok) os << " (brute force: " << be2 << "," << be3 << "," << bt3 << ")";
    } else {
        // cross-route: E_2 must equal E and T_2; C_3 second moment equals E_3
        ok = higher_energy(n, a, a, 2) == e2 && t_k(n, a, 2) == e2;
    }
    return {"energy-oracle", ok, os.str()};
}

SuiteResult heilbronn_invariant_suite(const Prime& p) {
    const u64 pv = p.value();
    const u64 n = p.squared();
    bool ok = true;
    std::ostringstream os;
    double unit_sq = 0;
    for (u64 j = 1; j <= pv; ++j) {
        SumResult s = heilbronn_sum(p, (1 + pv * j) % n);
        if (std::abs(s.value.imag()) > 1e-9 * (1.0 + s.abs)) {
            ok = false;
            os << "Im S(" << s.a << ") = " << s.value.imag() << "; ";
        }
        unit_sq += s.abs * s.abs;
    }
    Subgroup g = Subgroup::build(p);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> pick_a(1, n - 1);
    std::uniform_int_distribution<std::size_t> pick_g(0, g.order() - 1);
    for (int t = 0; t < 20; ++t) {
        u64 a = pick_a(rng);
        if (a % pv == 0) a = 1;
        u64 gg = g.elements()[pick_g(rng)];
        SumResult s1 = heilbronn_sum(p, a);
        SumResult s2 = heilbronn_sum(p, mul_mod(a, gg, n));
        if (std::abs(s1.value - s2.value) > 1e-9 * (1.0 + s1.abs)) {
            ok = false;
            os << "S(a g) != S(a) at a=" << a << " g=" << gg << "; ";
        }
    }
    double total = static_cast<double>(pv) * pv + (pv - 1.0) * unit_sq;
    for (u64 k = 1; k < pv; ++k) {
        SumResult s = heilbronn_sum(p, pv * k);
        total += s.abs * s.abs;
    }
    double p3 = static_cast<double>(pv) * pv * pv;
    if (std::abs(total - p3) > 1e-6 * p3) {
        ok = false;
        os << "Parseval total " << total << " vs p^3 " << p3 << "; ";
    }
    if (ok) os << "realness, coset invariance, Parseval";
    return {"heilbronn-invariant", ok, os.str()};
}

SuiteResult derivative_decomposition_suite(const Prime& p) {
    const u64 pv = p.value();
    PolyFp f = f_poly(p);
    PolyFp xx1 = PolyFp(pv, {0, 1}) * PolyFp(pv, {1, pv - 1});
    PolyFp xp_minus_x = PolyFp::monomial(pv, pv) - PolyFp::monomial(pv, 1);
    bool ok = true;
    std::ostringstream os;
    u64 rmax = std::min<u64>(pv - 1, 30);
    for (u64 r = 1; r <= rmax; ++r) {
        auto [q, h] = derivative_decompose(p, r);
        PolyFp lhs = xx1.pow(r) * f.derivative(r);
        if (!(lhs == q + xp_minus_x * h)) {
            ok = false;
            os << "identity fails at r=" << r << "; ";
        }
        if (r == 1 && !(q.is_zero() && h == PolyFp::constant(pv, pv - 1))) {
            ok = false;
            os << "(q_1, h_1) != (0, -1); ";
        }
    }
    if (ok) os << "r = 1.." << rmax;
    return {"derivative-decomposition", ok, os.str()};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const Prime& p) {
    return {difference_lemma_suite(p), energy_oracle_suite(p),
            heilbronn_invariant_suite(p), derivative_decomposition_suite(p)};
}

}  // namespace hb
