#pragma once

// Dense univariate polynomials over Z_p, lowest-degree coefficient first.

#include <vector>

#include "heilbronn/arith.hpp"

namespace hb {

class PolyFp;

struct PolyDivMod;
struct PolyLinearDiv;

class PolyFp {
public:
    PolyFp() = default;
    explicit PolyFp(u64 p) : p_(p) {}
    PolyFp(u64 p, std::vector<u64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
        for (auto& c : coeffs_) c %= p_;
        trim();
    }

    static PolyFp zero(u64 p) { return PolyFp(p); }
    static PolyFp constant(u64 p, u64 c) { return PolyFp(p, {c}); }
    static PolyFp monomial(u64 p, u64 deg, u64 c = 1);

    u64 p() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    u64 coeff(u64 i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<u64>& coeffs() const { return coeffs_; }

    u64 eval(u64 x) const;
    PolyFp derivative() const;
    PolyFp derivative(u64 order) const;
    PolyFp scaled(u64 c) const;
    PolyFp pow(u64 e) const;

    // Euclidean division by a polynomial with invertible leading coefficient.
    PolyDivMod divmod(const PolyFp& divisor) const;

    // Division by (X - root); remainder is the value at root.
    PolyLinearDiv divide_linear(u64 root) const;

    // Multiplicity of root as a zero of *this (0 if not a root).
    u64 vanishing_order(u64 root) const;

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
    friend bool operator==(const PolyFp& a, const PolyFp& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    static void require_same(const PolyFp& a, const PolyFp& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("PolyFp: field mismatch");
    }
    u64 p_ = 0;
    std::vector<u64> coeffs_;
};

struct PolyDivMod {
    PolyFp quotient;
    PolyFp remainder;
};

struct PolyLinearDiv {
    PolyFp quotient;
    u64 remainder;
};

}  // namespace hb
