#include "heilbronn/fermat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <thread>

namespace hb {

QuotientValue fermat_quotient(const Prime& p, u64 n) {
    const u64 pv = p.value();
    if (n % pv == 0) throw std::domain_error("fermat_quotient: p divides n");
    u64 r = pow_mod(n, pv - 1, p.squared());
    // r = 1 (mod p) by Fermat's little theorem, so the division is exact.
    return {pv, n, ((r - 1) / pv) % pv};
}

LpRecord smallest_nonvanishing(const Prime& p) {
    const u64 pv = p.value();
    const u64 n2 = p.squared();
    for (u64 n = 2;; ++n) {
        if (n % pv == 0) continue;
        if (pow_mod(n, pv - 1, n2) != 1) return {pv, n};
    }
}

u64 congruence_count(const Prime& p, u64 h) {
    const u64 n = p.squared();
    if (h == 0 || 2 * h >= n)
        throw std::invalid_argument("congruence_count: H must satisfy 0 < H < p^2/2");
    const u64 pv = p.value();
    u64 count = 0;
    for (u64 m = 1; m < pv; ++m) {
        u64 u = pow_mod(m, pv, n);
        // x runs over {1..H} u {-H..-1}; y = ux is determined, test |y| <= H.
        for (u64 x = 1; x <= h; ++x) {
            u64 y1 = mul_mod(u, x, n);
            u64 y2 = n - y1;  // u * (-x)
            if (y1 <= h || n - y1 <= h) ++count;
            if (y2 <= h || n - y2 <= h) ++count;
        }
    }
    return count;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<u64>(lo, 2);
    // Segmented sieve over [lo, hi] with base primes up to sqrt(hi).
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<bool> base(root + 1, true);
    std::vector<u64> base_primes;
    for (u64 i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (u64 j = i * i; j <= root; j += i) base[j] = false;
    }
    std::vector<bool> seg(hi - lo + 1, true);
    for (u64 q : base_primes) {
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 j = start; j <= hi; j += q) seg[j - lo] = false;
    }
    for (u64 i = lo; i <= hi; ++i)
        if (seg[i - lo]) out.push_back(i);
    return out;
}

namespace {

u64 lp_of(u64 p) {
    u64 n2 = p * p;
    for (u64 n = 2;; ++n) {
        if (n % p == 0) continue;
        if (pow_mod(n, p - 1, n2) != 1) return n;
    }
}

std::map<u64, u64> load_lp_cache(const std::filesystem::path& file) {
    std::map<u64, u64> cache;
    std::ifstream in(file);
    if (!in) return cache;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        cache[std::stoull(line.substr(0, comma))] = std::stoull(line.substr(comma + 1));
    }
    return cache;
}

}  // namespace

std::vector<LpRecord> lp_scan(u64 p_min, u64 p_max, unsigned threads,
                              const std::optional<std::filesystem::path>& cache_dir) {
    if (p_max >= (1ull << 31)) throw std::invalid_argument("lp_scan: p_max must be < 2^31");
    std::map<u64, u64> cache;
    std::filesystem::path cache_file;
    if (cache_dir) {
        std::filesystem::create_directories(*cache_dir);
        cache_file = *cache_dir / "lp.csv";
        cache = load_lp_cache(cache_file);
    }

    std::vector<u64> primes = primes_in_range(std::max<u64>(p_min, 3), p_max);
    std::vector<LpRecord> records(primes.size());
    std::vector<u64> todo_idx;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        auto it = cache.find(primes[i]);
        if (it != cache.end())
            records[i] = {primes[i], it->second};
        else
            todo_idx.push_back(i);
    }

    if (!todo_idx.empty()) {
        unsigned nthreads = std::max(1u, threads);
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= todo_idx.size()) break;
                    u64 idx = todo_idx[k];
                    records[idx] = {primes[idx], lp_of(primes[idx])};
                }
            });
        for (auto& th : pool) th.join();

        if (cache_dir) {
            // single writer, records appended in ascending p order
            bool fresh = !std::filesystem::exists(cache_file);
            std::ofstream out(cache_file, std::ios::app);
            if (fresh) out << "p,l_p\n";
            for (u64 idx : todo_idx)
                out << records[idx].p << ',' << records[idx].l_p << '\n';
        }
    }
    return records;
}

}  // namespace hb
