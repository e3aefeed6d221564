#pragma once

// Exact convolution/correlation tables over Z_N, additive energies E, E_k,
// T_k, generalized convolutions C_k, discrete Fourier transforms, dyadic
// level sets and the triple-product inequality check.
//
// All counting is exact: entries live in 64-bit words by default and the
// whole table is promoted to arbitrary precision when an operation would
// overflow.  Floating point appears only in the DFT.

#include <complex>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heilbronn/arith.hpp"
#include "heilbronn/group.hpp"

namespace hb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest dense table: N = p^2 with p up to 8192.
inline constexpr u64 kMaxTableSize = 8192ull * 8192ull;

// Exact nonnegative-integer-valued function on Z_N.
class CountTable {
public:
    explicit CountTable(u64 n);
    static CountTable indicator(u64 n, std::span<const u64> set);
    static CountTable delta(u64 n, u64 at);

    u64 modulus() const { return n_; }
    bool wide() const { return wide_; }

    BigInt get(u64 i) const;
    u64 get64(u64 i) const;  // valid only when !wide()
    void add(u64 i, u64 v);  // promotes on overflow
    void add_big(u64 i, const BigInt& v);

    std::vector<u64> support() const;
    BigInt total() const;
    BigInt max_value() const;

    // f(-x) == f(x) for all x, exactly.
    bool is_even() const;

    std::vector<double> to_real() const;

    void promote();

    friend bool operator==(const CountTable& a, const CountTable& b);

private:
    u64 n_;
    bool wide_ = false;
    std::vector<u64> small_;
    std::vector<BigInt> big_;
};

// (f*g)(x) = sum_y f(y) g(x-y), exact.
CountTable convolve(const CountTable& f, const CountTable& g);

// (f o g)(x) = sum_y f(y) g(y+x), exact.  Satisfies (f o g)(x) = (g o f)(-x).
CountTable correlate(const CountTable& f, const CountTable& g);

// d-fold sum counts: A *_{d-1} A; d = 1 gives the indicator of A.
CountTable iterated_convolution(u64 n, std::span<const u64> a, u64 d);

// E(A,B) = sum_x (A*B)(x)^2.  Computed through all three equivalent forms
// of the convolution identity; any disagreement throws.
BigInt energy(u64 n, std::span<const u64> a, std::span<const u64> b);

// E_k(A,B) = sum_x (A o A)(x) (B o B)(x)^{k-1}; E_k(A) when b == a.
BigInt higher_energy(u64 n, std::span<const u64> a, std::span<const u64> b, u64 k);

// T_k(A) = number of 2k-tuples with equal k-fold sums.
BigInt t_k(u64 n, std::span<const u64> a, u64 k);

// Generalized convolution C_k(f_0,..,f_{k-1}) as a dense (k-1)-dimensional
// table, index x_1 + N x_2 + ... + N^{k-2} x_{k-1}.
struct CkTable {
    u64 n = 0;
    u64 k = 0;
    std::vector<BigInt> values;

    const BigInt& at(std::span<const u64> x) const;
};

CkTable c_k(u64 n, std::span<const std::vector<u64>> sets,
            u64 memory_cap = u64(1) << 26);

// f_hat(xi) = sum_x f(x) e(-xi x / N), e(x) = exp(2 pi i x).
std::vector<std::complex<double>> dft(std::span<const double> f);
std::vector<std::complex<double>> dft(const CountTable& f);

// psi_k = (Gamma *_{k-1} Gamma) o (Gamma *_{k-1} Gamma), an even table with
// nonnegative Fourier transform.
CountTable psi_k(const Prime& p, u64 k);

// Dyadic level sets S_i = { x != 0 : 2^{i-1} d < psi(x) <= 2^i d }, i in [l].
struct LevelSetFamily {
    Rational threshold;
    std::vector<std::vector<u64>> sets;  // sets[i-1] is S_i
};

LevelSetFamily level_sets(const CountTable& psi, const Rational& d);

// (1/|A|^3) (sum_x psi(x)(A o A)(x))^3  <=  sum_{x,y,z in A} psi(x-y) psi(x-z) psi(y-z)
// for even psi with nonnegative Fourier transform.  Both sides exact; the
// positivity precondition is checked numerically unless skip_dft_check.
struct TripleProductResult {
    Rational lhs;
    BigInt rhs;
    bool holds = false;
};

TripleProductResult triple_product_check(u64 n, std::span<const u64> a,
                                         const CountTable& psi,
                                         bool skip_dft_check = false);

}  // namespace hb
