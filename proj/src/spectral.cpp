#include "heilbronn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hb {

namespace {

void require_same_modulus(const CountTable& a, const CountTable& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("CountTable: modulus mismatch");
}

bool mul_ok(u64 a, u64 b, u64& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add_ok(u64& acc, u64 v) { return !__builtin_add_overflow(acc, v, &acc); }

}  // namespace

CountTable::CountTable(u64 n) : n_(n) {
    if (n == 0) throw std::invalid_argument("CountTable: zero modulus");
    if (n > kMaxTableSize)
        throw std::invalid_argument("CountTable: modulus exceeds dense-table cap");
    small_.assign(n, 0);
}

CountTable CountTable::indicator(u64 n, std::span<const u64> set) {
    CountTable t(n);
    for (u64 x : set) {
        u64 i = x % n;
        if (t.small_[i] != 0)
            throw std::invalid_argument("indicator: repeated element");
        t.small_[i] = 1;
    }
    return t;
}

CountTable CountTable::delta(u64 n, u64 at) {
    CountTable t(n);
    t.small_[at % n] = 1;
    return t;
}

void CountTable::promote() {
    if (wide_) return;
    big_.assign(small_.begin(), small_.end());
    small_.clear();
    small_.shrink_to_fit();
    wide_ = true;
}

BigInt CountTable::get(u64 i) const { return wide_ ? big_[i] : BigInt(small_[i]); }

u64 CountTable::get64(u64 i) const {
    if (wide_) throw std::logic_error("CountTable::get64 on wide table");
    return small_[i];
}

void CountTable::add(u64 i, u64 v) {
    if (!wide_) {
        if (add_ok(small_[i], v)) return;
        small_[i] -= v;  // undo the wrapped add before promoting
        promote();
    }
    big_[i] += v;
}

void CountTable::add_big(u64 i, const BigInt& v) {
    if (!wide_) promote();
    big_[i] += v;
}

std::vector<u64> CountTable::support() const {
    std::vector<u64> s;
    for (u64 i = 0; i < n_; ++i) {
        bool nz = wide_ ? big_[i] != 0 : small_[i] != 0;
        if (nz) s.push_back(i);
    }
    return s;
}

BigInt CountTable::total() const {
    BigInt t = 0;
    for (u64 i = 0; i < n_; ++i) t += get(i);
    return t;
}

BigInt CountTable::max_value() const {
    BigInt m = 0;
    for (u64 i = 0; i < n_; ++i) m = std::max(m, get(i));
    return m;
}

bool CountTable::is_even() const {
    for (u64 i = 0; i < n_; ++i)
        if (get(i) != get((n_ - i) % n_)) return false;
    return true;
}

std::vector<double> CountTable::to_real() const {
    std::vector<double> r(n_);
    for (u64 i = 0; i < n_; ++i)
        r[i] = wide_ ? big_[i].convert_to<double>() : static_cast<double>(small_[i]);
    return r;
}

bool operator==(const CountTable& a, const CountTable& b) {
    if (a.n_ != b.n_) return false;
    for (u64 i = 0; i < a.n_; ++i)
        if (a.get(i) != b.get(i)) return false;
    return true;
}

namespace {

// Double loop over supports; index_of(y, z) gives the output slot.
template <class IndexOf>
CountTable bilinear(const CountTable& f, const CountTable& g, IndexOf index_of) {
    require_same_modulus(f, g);
    const u64 n = f.modulus();
    auto fs = f.support();
    auto gs = g.support();
    CountTable out(n);
    if (!f.wide() && !g.wide()) {
        bool overflow = false;
        for (u64 y : fs) {
            u64 fy = f.get64(y);
            for (u64 z : gs) {
                u64 prod;
                if (!mul_ok(fy, g.get64(z), prod)) { overflow = true; break; }
                out.add(index_of(y, z), prod);
            }
            if (overflow) break;
        }
        if (!overflow) return out;
        out = CountTable(n);  // retry exactly, in arbitrary precision
    }
    out.promote();
    for (u64 y : fs) {
        BigInt fy = f.get(y);
        for (u64 z : gs) out.add_big(index_of(y, z), fy * g.get(z));
    }
    return out;
}

}  // namespace

CountTable convolve(const CountTable& f, const CountTable& g) {
    const u64 n = f.modulus();
    return bilinear(f, g, [n](u64 y, u64 z) { return (y + z) % n; });
}

CountTable correlate(const CountTable& f, const CountTable& g) {
    const u64 n = f.modulus();
    return bilinear(f, g, [n](u64 y, u64 z) { return (z + n - y % n) % n; });
}

CountTable iterated_convolution(u64 n, std::span<const u64> a, u64 d) {
    if (d < 1) throw std::invalid_argument("iterated_convolution: d must be >= 1");
    CountTable ind = CountTable::indicator(n, a);
    CountTable acc = ind;
    for (u64 i = 1; i < d; ++i) acc = convolve(acc, ind);
    return acc;
}

namespace {

BigInt sum_of_squares(const CountTable& t) {
    BigInt s = 0;
    for (u64 i = 0; i < t.modulus(); ++i) {
        BigInt v = t.get(i);
        s += v * v;
    }
    return s;
}

}  // namespace

BigInt energy(u64 n, std::span<const u64> a, std::span<const u64> b) {
    CountTable ia = CountTable::indicator(n, a);
    CountTable ib = CountTable::indicator(n, b);
    BigInt via_conv = sum_of_squares(convolve(ia, ib));
    BigInt via_corr = sum_of_squares(correlate(ia, ib));
    CountTable aa = correlate(ia, ia);
    CountTable bb = correlate(ib, ib);
    BigInt via_auto = 0;
    for (u64 x = 0; x < n; ++x) via_auto += aa.get(x) * bb.get(x);
    if (via_conv != via_corr || via_conv != via_auto)
        throw std::logic_error("energy: the three convolution forms disagree");
    return via_conv;
}

BigInt higher_energy(u64 n, std::span<const u64> a, std::span<const u64> b, u64 k) {
    if (k < 2) throw std::invalid_argument("higher_energy: k must be >= 2");
    CountTable aa = correlate(CountTable::indicator(n, a), CountTable::indicator(n, a));
    CountTable bb = correlate(CountTable::indicator(n, b), CountTable::indicator(n, b));
    BigInt s = 0;
    for (u64 x = 0; x < n; ++x) {
        BigInt bv = bb.get(x);
        if (bv == 0) continue;
        BigInt pw = 1;
        for (u64 i = 0; i + 1 < k; ++i) pw *= bv;
        s += aa.get(x) * pw;
    }
    return s;
}

BigInt t_k(u64 n, std::span<const u64> a, u64 k) {
    if (k < 1) throw std::invalid_argument("t_k: k must be >= 1");
    if (k == 1) return BigInt(a.size());
    return sum_of_squares(iterated_convolution(n, a, k));
}

const BigInt& CkTable::at(std::span<const u64> x) const {
    if (x.size() + 1 != k) throw std::invalid_argument("CkTable::at: wrong arity");
    u64 idx = 0, stride = 1;
    for (u64 i = 0; i < x.size(); ++i) {
        idx += (x[i] % n) * stride;
        stride *= n;
    }
    return values[idx];
}

CkTable c_k(u64 n, std::span<const std::vector<u64>> sets, u64 memory_cap) {
    const u64 k = sets.size();
    if (k < 2) throw std::invalid_argument("c_k: need at least two functions");
    u64 cells = 1;
    for (u64 i = 0; i + 1 < k; ++i) {
        if (cells > memory_cap / n)
            throw std::length_error(
                "c_k: N^{k-1} exceeds the memory cap; use streaming evaluation");
        cells *= n;
    }
    CkTable t;
    t.n = n;
    t.k = k;
    t.values.assign(cells, BigInt(0));
    // Every nonzero contribution has z in supp(f_0) and z + x_i in supp(f_i),
    // so enumerate support tuples directly: x_i = s_i - z.
    std::vector<u64> idx(k - 1, 0);
    for (u64 z : sets[0]) {
        u64 zr = z % n;
        // odometer over supp(f_1) x ... x supp(f_{k-1})
        std::vector<u64> pos(k - 1, 0);
        while (true) {
            u64 cell = 0, stride = 1;
            for (u64 i = 0; i + 1 < k; ++i) {
                u64 s = sets[i + 1][pos[i]] % n;
                cell += ((s + n - zr) % n) * stride;
                stride *= n;
            }
            t.values[cell] += 1;
            u64 i = 0;
            for (; i + 1 < k; ++i) {
                if (++pos[i] < sets[i + 1].size()) break;
                pos[i] = 0;
            }
            if (i + 1 == k) break;
        }
    }
    return t;
}

std::vector<std::complex<double>> dft(std::span<const double> f) {
    const u64 n = f.size();
    std::vector<std::complex<double>> roots(n), out(n);
    for (u64 j = 0; j < n; ++j) {
        double ang = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        roots[j] = {std::cos(ang), std::sin(ang)};
    }
    for (u64 xi = 0; xi < n; ++xi) {
        std::complex<double> acc = 0;
        for (u64 x = 0; x < n; ++x) {
            if (f[x] == 0.0) continue;
            acc += f[x] * roots[(xi * x) % n];
        }
        out[xi] = acc;
    }
    return out;
}

std::vector<std::complex<double>> dft(const CountTable& f) { return dft(f.to_real()); }

CountTable psi_k(const Prime& p, u64 k) {
    if (k < 1) throw std::invalid_argument("psi_k: k must be >= 1");
    Subgroup g = Subgroup::build(p);
    CountTable conv = iterated_convolution(g.modulus(), g.elements(), k);
    return correlate(conv, conv);
}

LevelSetFamily level_sets(const CountTable& psi, const Rational& d) {
    if (d <= 0) throw std::invalid_argument("level_sets: threshold must be positive");
    LevelSetFamily fam;
    fam.threshold = d;
    const u64 n = psi.modulus();
    for (u64 x = 1; x < n; ++x) {
        Rational v(psi.get(x));
        if (v <= d) continue;
        // smallest i >= 1 with v <= 2^i d
        u64 i = 1;
        Rational bound = d * 2;
        while (v > bound) {
            bound *= 2;
            ++i;
        }
        if (fam.sets.size() < i) fam.sets.resize(i);
        fam.sets[i - 1].push_back(x);
    }
    return fam;
}

TripleProductResult triple_product_check(u64 n, std::span<const u64> a,
                                         const CountTable& psi,
                                         bool skip_dft_check) {
    if (psi.modulus() != n)
        throw std::invalid_argument("triple_product_check: modulus mismatch");
    if (a.empty()) throw std::invalid_argument("triple_product_check: empty set");
    if (!psi.is_even())
        throw std::invalid_argument("triple_product_check: psi is not even");
    if (!skip_dft_check) {
        auto hat = dft(psi);
        double maxabs = 0, minre = 0;
        for (auto& c : hat) {
            maxabs = std::max(maxabs, std::abs(c));
            minre = std::min(minre, c.real());
        }
        if (minre < -1e-6 * maxabs)
            throw std::invalid_argument("triple_product_check: psi_hat has negative part");
    }
    std::vector<u64> av;
    av.reserve(a.size());
    for (u64 x : a) av.push_back(x % n);
    CountTable ia = CountTable::indicator(n, av);
    CountTable aa = correlate(ia, ia);
    BigInt s = 0;
    for (u64 x = 0; x < n; ++x) s += psi.get(x) * aa.get(x);
    BigInt cube = s * s * s;
    BigInt asz(a.size());
    Rational lhs(cube, asz * asz * asz);

    BigInt rhs = 0;
    for (u64 x : av)
        for (u64 y : av) {
            BigInt pxy = psi.get((x + n - y) % n);
            if (pxy == 0) continue;
            for (u64 z : av)
                rhs += pxy * psi.get((x + n - z) % n) * psi.get((y + n - z) % n);
        }
    return {lhs, rhs, lhs <= Rational(rhs)};
}

}  // namespace hb
