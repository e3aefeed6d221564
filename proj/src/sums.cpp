#include "heilbronn/sums.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hb {

namespace {

std::complex<double> circle(u64 num, u64 den) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(ang), std::sin(ang)};
}

std::string format_real(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

SumResult heilbronn_sum(const Prime& p, u64 a) {
    const u64 pv = p.value();
    const u64 n = p.squared();
    a %= n;
    std::complex<double> acc = 0;
    for (u64 m = 1; m <= pv; ++m)
        acc += circle(mul_mod(a, pow_mod(m, pv, n), n), n);
    return {pv, a, acc, std::abs(acc)};
}

std::complex<double> interval_sum(const Prime& p, u64 a, u64 m, u64 n_terms) {
    const u64 pv = p.value();
    const u64 n = p.squared();
    if (m < 1) throw std::invalid_argument("interval_sum: M must be >= 1");
    if (n_terms < 1 || n_terms > pv)
        throw std::invalid_argument("interval_sum: N must be in [1, p]");
    a %= n;
    std::complex<double> acc = 0;
    for (u64 t = 0; t < n_terms; ++t)
        acc += circle(mul_mod(a, pow_mod(m + t, pv, n), n), n);
    return acc;
}

BoundReport scan_bounds(const Prime& p, u64 energy_cap) {
    const u64 pv = p.value();
    if (pv > energy_cap)
        throw std::invalid_argument("scan_bounds: p exceeds the energy cap");
    const u64 n = p.squared();
    const double pd = static_cast<double>(pv);
    const double lg = std::log2(pd);

    BoundReport rep;
    rep.p = pv;

    Subgroup gamma = Subgroup::build(p);
    const double t = static_cast<double>(gamma.order());

    // |S(a)| is constant on each unit coset (a -> ag reindexes Gamma), so
    // only the p representatives xi_j need evaluating.
    double max_abs = 0;
    double unit_sq_total = 0;
    for (u64 j = 1; j <= pv; ++j) {
        u64 xi = (1 + pv * j) % n;
        std::complex<double> s = 1.0;  // the n = p term: p^p = 0 mod p^2
        for (u64 g : gamma.elements()) s += circle(mul_mod(xi, g, n), n);
        double abs = std::abs(s);
        max_abs = std::max(max_abs, abs);
        unit_sq_total += abs * abs;
    }
    {
        double bound = std::pow(pd, 31.0 / 36.0) * std::pow(lg, 1.0 / 6.0);
        rep.rows.push_back({"max_abs_S", format_real(max_abs), "p^(31/36) log^(1/6) p",
                            max_abs, max_abs / bound});
    }

    // Parseval total: a = 0 contributes p^2; each unit coset value occurs
    // p-1 times; the nonzero multiples of p are the p-1 values a = pk.
    double total_sq = pd * pd + (pd - 1.0) * unit_sq_total;
    for (u64 k = 1; k < pv; ++k) {
        SumResult s = heilbronn_sum(p, pv * k);
        total_sq += s.abs * s.abs;
    }
    rep.rows.push_back({"parseval_sum_sq", format_real(total_sq), "p^3", total_sq,
                        total_sq / (pd * pd * pd)});

    // Exact energies from the autocorrelation of Gamma.
    CountTable ind = CountTable::indicator(n, gamma.elements());
    CountTable corr = correlate(ind, ind);
    BigInt e2 = 0, e3 = 0;
    for (u64 x = 0; x < n; ++x) {
        BigInt v = corr.get(x);
        if (v == 0) continue;
        e2 += v * v;
        e3 += v * v * v;
    }
    double e2d = e2.convert_to<double>();
    double e3d = e3.convert_to<double>();
    rep.rows.push_back({"E_gamma", e2.str(), "t^(5/2)", e2d, e2d / std::pow(t, 2.5)});
    rep.rows.push_back({"E_gamma", e2.str(), "p^(22/9) log^(2/3) p", e2d,
                        e2d / (std::pow(pd, 22.0 / 9.0) * std::pow(lg, 2.0 / 3.0))});
    rep.rows.push_back({"E3_gamma", e3.str(), "t^3 log t", e3d,
                        e3d / (t * t * t * std::log2(t))});

    // T_3 = sum_x ((Gamma*Gamma)*Gamma)(x)^2.  Gamma*Gamma is
    // Gamma-invariant, so the outer convolution is evaluated at one
    // representative per coset only.
    CountTable conv2 = convolve(ind, ind);
    CosetDecomposition dec = CosetDecomposition::build(p);
    auto conv3_at = [&](u64 x) {
        u64 acc = 0;
        for (u64 g : gamma.elements()) acc += conv2.get64((x + n - g) % n);
        return acc;
    };
    BigInt t3 = 0;
    for (u64 j = 1; j <= pv; ++j) {
        BigInt v(conv3_at(dec.reps()[j - 1]));
        t3 += v * v * (pv - 1);
    }
    {
        BigInt v0(conv3_at(0));
        BigInt vp(conv3_at(dec.p_coset().front()));
        t3 += v0 * v0 + vp * vp * (pv - 1);
    }
    double t3d = t3.convert_to<double>();
    rep.rows.push_back({"T3_gamma", t3.str(), "t^(151/36) log^(2/3) t", t3d,
                        t3d / (std::pow(t, 151.0 / 36.0) * std::pow(std::log2(t), 2.0 / 3.0))});
    return rep;
}

}  // namespace hb
