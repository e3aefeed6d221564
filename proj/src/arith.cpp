#include "heilbronn/arith.hpp"

namespace hb {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 inv_mod(u64 x, u64 m) {
    // Extended Euclid on (x, m); signed intermediates stay within i64
    // because m < 2^63.
    i64 old_r = static_cast<i64>(x % m), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw std::domain_error("not a unit");
    i64 inv = old_s % static_cast<i64>(m);
    if (inv < 0) inv += static_cast<i64>(m);
    return static_cast<u64>(inv);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    a %= n;
    if (a == 0) return true;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 2^64 (Sinclair).
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Prime::Prime(u64 value) : value_(value) {
    if (value < 3) throw std::invalid_argument("Prime: must be >= 3");
    if (value >= (1ull << 31)) throw std::invalid_argument("Prime: must be < 2^31");
    if (!is_prime(value)) throw std::invalid_argument("Prime: value is not prime");
}

Residue project(const Residue& x, const Prime& p) {
    u64 m = x.modulus;
    u64 pv = p.value();
    if (m % pv != 0 || m == pv)
        throw std::invalid_argument("project: modulus is not p^r with r >= 2");
    // Confirm m is a pure power of p.
    u64 t = m;
    while (t % pv == 0) t /= pv;
    if (t != 1) throw std::invalid_argument("project: modulus is not a power of p");
    if (!x.is_unit()) throw std::domain_error("project: input is not a unit");
    return Residue(x.value % (m / pv), m / pv);
}

}  // namespace hb
