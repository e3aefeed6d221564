#pragma once

// The multiplicative subgroup Gamma = { m^p : 1 <= m <= p-1 } of Z*_{p^2}
// and the decomposition  Z*_{p^2} = disjoint union of (1+pj)Gamma, j in [p],
// with Z_{p^2} \ Z*_{p^2} = {0} u pGamma.

#include <span>
#include <vector>

#include "heilbronn/arith.hpp"

namespace hb {

class Subgroup {
public:
    static Subgroup build(const Prime& p);

    const Prime& p() const { return p_; }
    u64 modulus() const { return p_.squared(); }
    // Sorted residues mod p^2; size p-1.
    const std::vector<u64>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(u64 x) const;

    // The unique g in Gamma with g = x (mod p), for x not divisible by p.
    // This is the inverse of the projection restricted to Gamma.
    u64 lift(u64 x) const;

private:
    explicit Subgroup(const Prime& p) : p_(p) {}
    Prime p_;
    std::vector<u64> elements_;
};

enum class CosetKind { UnitCoset, PCoset, Zero };

struct CosetLabel {
    CosetKind kind = CosetKind::Zero;
    u32 j = 0;  // index in [p] when kind == UnitCoset

    friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

class CosetDecomposition {
public:
    static CosetDecomposition build(const Prime& p);

    const Prime& p() const { return p_; }
    const Subgroup& gamma() const { return gamma_; }
    // xi_j = 1 + p*j mod p^2 for j in [p]; reps()[j-1] is xi_j.
    const std::vector<u64>& reps() const { return reps_; }
    // cosets()[j-1] is the sorted set xi_j * Gamma.
    const std::vector<std::vector<u64>>& cosets() const { return cosets_; }
    const std::vector<u64>& p_coset() const { return p_coset_; }

    CosetLabel classify(u64 x) const;

    // True iff Q (a set of distinct residues mod p^2) is a union of cosets
    // from {xi_j Gamma} u {pGamma} u {0}, equivalently Q*g = Q for g in Gamma.
    bool is_gamma_invariant(std::span<const u64> q) const;

private:
    explicit CosetDecomposition(const Prime& p) : p_(p), gamma_(Subgroup::build(p)) {}
    Prime p_;
    Subgroup gamma_;
    std::vector<u64> reps_;
    std::vector<std::vector<u64>> cosets_;
    std::vector<u64> p_coset_;
};

}  // namespace hb
