#pragma once

// Exact modular arithmetic over Z_p, Z_{p^2} and Z_{p^r}, deterministic
// primality testing, and the unit-group projection Z*_{p^r} -> Z*_{p^(r-1)}.
//
// Moduli are restricted so that p^2 < 2^63; every product is formed in a
// 128-bit intermediate before reduction, so all results are exact.

#include <cstdint>
#include <stdexcept>

namespace hb {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;            // a, b < m <= 2^63, no wrap
    return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + m - b;
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Extended-gcd inverse; throws std::domain_error("not a unit") when
// gcd(x, m) != 1.
u64 inv_mod(u64 x, u64 m);

u64 gcd_u64(u64 a, u64 b);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

// An odd prime p with p^2 < 2^63 (so p < 2^31), validated on construction.
class Prime {
public:
    explicit Prime(u64 value);

    u64 value() const { return value_; }
    u64 squared() const { return value_ * value_; }

private:
    u64 value_;
};

// An element of Z_N carried together with its modulus.
struct Residue {
    u64 value = 0;
    u64 modulus = 1;

    Residue() = default;
    Residue(u64 v, u64 m) : value(v % m), modulus(m) {
        if (m == 0) throw std::invalid_argument("Residue: zero modulus");
    }

    bool is_unit() const { return gcd_u64(value, modulus) == 1; }

    Residue pow(u64 exp) const { return Residue(pow_mod(value, exp, modulus), modulus); }
    Residue inverse() const { return Residue(inv_mod(value, modulus), modulus); }

    friend Residue operator*(Residue a, Residue b) {
        require_same(a, b);
        return Residue(mul_mod(a.value, b.value, a.modulus), a.modulus);
    }
    friend Residue operator+(Residue a, Residue b) {
        require_same(a, b);
        return Residue(add_mod(a.value, b.value, a.modulus), a.modulus);
    }
    friend Residue operator-(Residue a, Residue b) {
        require_same(a, b);
        return Residue(sub_mod(a.value, b.value, a.modulus), a.modulus);
    }
    friend bool operator==(const Residue& a, const Residue& b) {
        return a.value == b.value && a.modulus == b.modulus;
    }

private:
    static void require_same(const Residue& a, const Residue& b) {
        if (a.modulus != b.modulus)
            throw std::invalid_argument("Residue: modulus mismatch");
    }
};

// Reduction Z*_{p^r} -> Z*_{p^(r-1)} for r >= 2.  The input modulus must be
// p^r with r >= 2 and x must be a unit.  Restricted to a subgroup of order
// dividing p-1 the map is injective; that is checked by tests, not assumed.
Residue project(const Residue& x, const Prime& p);

}  // namespace hb
