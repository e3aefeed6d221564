#include "heilbronn/group.hpp"

#include <algorithm>
#include <unordered_map>

namespace hb {

Subgroup Subgroup::build(const Prime& p) {
    Subgroup g(p);
    const u64 pv = p.value();
    const u64 n = p.squared();
    g.elements_.reserve(pv - 1);
    for (u64 m = 1; m < pv; ++m) g.elements_.push_back(pow_mod(m, pv, n));
    std::sort(g.elements_.begin(), g.elements_.end());
    // m^p mod p^2 is injective on [1, p-1]: distinct residues mod p project
    // to distinct residues mod p.
    if (std::adjacent_find(g.elements_.begin(), g.elements_.end()) != g.elements_.end())
        throw std::logic_error("Subgroup: duplicate elements (arithmetic bug)");
    return g;
}

bool Subgroup::contains(u64 x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x % modulus());
}

u64 Subgroup::lift(u64 x) const {
    u64 r = x % p_.value();
    if (r == 0) throw std::domain_error("Subgroup::lift: x divisible by p");
    return pow_mod(r, p_.value(), modulus());
}

CosetDecomposition CosetDecomposition::build(const Prime& p) {
    CosetDecomposition d(p);
    const u64 pv = p.value();
    const u64 n = p.squared();
    d.reps_.reserve(pv);
    d.cosets_.reserve(pv);
    std::vector<bool> seen(n, false);
    u64 covered = 0;
    for (u64 j = 1; j <= pv; ++j) {
        u64 xi = (1 + pv * j) % n;
        d.reps_.push_back(xi);
        std::vector<u64> coset;
        coset.reserve(pv - 1);
        for (u64 g : d.gamma_.elements()) coset.push_back(mul_mod(xi, g, n));
        std::sort(coset.begin(), coset.end());
        for (u64 x : coset) {
            if (seen[x]) throw std::logic_error("CosetDecomposition: cosets overlap");
            seen[x] = true;
            ++covered;
        }
        d.cosets_.push_back(std::move(coset));
    }
    d.p_coset_.reserve(pv - 1);
    for (u64 g : d.gamma_.elements()) d.p_coset_.push_back(mul_mod(pv, g, n));
    std::sort(d.p_coset_.begin(), d.p_coset_.end());
    for (u64 x : d.p_coset_) {
        if (seen[x]) throw std::logic_error("CosetDecomposition: pGamma overlaps units");
        seen[x] = true;
        ++covered;
    }
    if (seen[0]) throw std::logic_error("CosetDecomposition: zero covered twice");
    ++covered;
    if (covered != n)
        throw std::logic_error("CosetDecomposition: partition does not cover Z_{p^2}");
    return d;
}

CosetLabel CosetDecomposition::classify(u64 x) const {
    const u64 pv = p_.value();
    const u64 n = p_.squared();
    x %= n;
    if (x == 0) return {CosetKind::Zero, 0};
    if (x % pv == 0) return {CosetKind::PCoset, 0};
    // x = xi_j * g with g = lift(x mod p); recover xi_j = x * g^{-1}.
    u64 g = gamma_.lift(x);
    u64 xi = mul_mod(x, inv_mod(g, n), n);
    // xi = 1 + p*j for some j in [p] (j = p when xi == 1).
    u64 j = ((xi + n - 1) % n) / pv;
    if (j == 0) j = pv;
    if (reps_[j - 1] != xi)
        throw std::logic_error("classify: representative mismatch (arithmetic bug)");
    return {CosetKind::UnitCoset, static_cast<u32>(j)};
}

bool CosetDecomposition::is_gamma_invariant(std::span<const u64> q) const {
    const u64 pv = p_.value();
    // Count members per coset; invariance means each touched coset is full.
    std::unordered_map<u64, u64> counts;  // key: j in [1,p], p+1 for pGamma, 0 for zero
    for (u64 x : q) {
        CosetLabel l = classify(x);
        u64 key = l.kind == CosetKind::UnitCoset ? l.j
                : l.kind == CosetKind::PCoset    ? pv + 1
                                                 : 0;
        ++counts[key];
    }
    for (auto [key, c] : counts) {
        u64 full = key == 0 ? 1 : pv - 1;
        if (c != full) return false;
    }
    return true;
}

}  // namespace hb
