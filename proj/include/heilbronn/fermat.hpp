#pragma once

// Fermat quotients q(n) = (n^{p-1} - 1)/p mod p, the statistic l_p (least n
// with q(n) != 0), batch prime-range scans with a resumable CSV cache, and
// the congruence count N over u x = y (mod p^2) with u in Gamma and x, y in
// a symmetric interval.

#include <filesystem>
#include <optional>
#include <vector>

#include "heilbronn/arith.hpp"

namespace hb {

struct QuotientValue {
    u64 p = 0;
    u64 n = 0;
    u64 q = 0;  // residue mod p
};

// Exact: q = ((n^{p-1} mod p^2) - 1)/p.  Requires gcd(n, p) = 1.
QuotientValue fermat_quotient(const Prime& p, u64 n);

struct LpRecord {
    u64 p = 0;
    u64 l_p = 0;  // always >= 2
};

LpRecord smallest_nonvanishing(const Prime& p);

// Number of triples (u, x, y) with u in Gamma, 0 < |x|, |y| <= H and
// u x = y (mod p^2).  Requires H < p^2 / 2.
u64 congruence_count(const Prime& p, u64 h);

// All primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

// l_p for every prime in [p_min, p_max], ascending.  When a cache directory
// is given, previously computed records are reused and new ones appended
// (append-only CSV `lp.csv` with columns p,l_p).
std::vector<LpRecord> lp_scan(u64 p_min, u64 p_max, unsigned threads = 1,
                              const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

}  // namespace hb
