#include "heilbronn/poly.hpp"

namespace hb {

PolyFp PolyFp::monomial(u64 p, u64 deg, u64 c) {
    std::vector<u64> v(deg + 1, 0);
    v[deg] = c % p;
    return PolyFp(p, std::move(v));
}

u64 PolyFp::eval(u64 x) const {
    x %= p_;
    u64 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = (mul_mod(acc, x, p_) + *it) % p_;
    return acc;
}

PolyFp PolyFp::derivative() const {
    if (coeffs_.size() <= 1) return PolyFp(p_);
    std::vector<u64> d(coeffs_.size() - 1);
    for (u64 i = 1; i < coeffs_.size(); ++i) d[i - 1] = mul_mod(i % p_, coeffs_[i], p_);
    return PolyFp(p_, std::move(d));
}

PolyFp PolyFp::derivative(u64 order) const {
    PolyFp r = *this;
    for (u64 i = 0; i < order; ++i) r = r.derivative();
    return r;
}

PolyFp PolyFp::scaled(u64 c) const {
    c %= p_;
    std::vector<u64> v(coeffs_.size());
    for (u64 i = 0; i < coeffs_.size(); ++i) v[i] = mul_mod(coeffs_[i], c, p_);
    return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::pow(u64 e) const {
    PolyFp result = constant(p_, 1);
    PolyFp base = *this;
    while (e) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    PolyFp::require_same(a, b);
    std::vector<u64> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (u64 i = 0; i < v.size(); ++i) v[i] = add_mod(a.coeff(i), b.coeff(i), a.p_);
    return PolyFp(a.p_, std::move(v));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    PolyFp::require_same(a, b);
    std::vector<u64> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (u64 i = 0; i < v.size(); ++i) v[i] = sub_mod(a.coeff(i), b.coeff(i), a.p_);
    return PolyFp(a.p_, std::move(v));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    PolyFp::require_same(a, b);
    if (a.is_zero() || b.is_zero()) return PolyFp(a.p_);
    std::vector<u64> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (u64 i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (u64 j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = (v[i + j] + mul_mod(a.coeffs_[i], b.coeffs_[j], a.p_)) % a.p_;
    }
    return PolyFp(a.p_, std::move(v));
}

PolyDivMod PolyFp::divmod(const PolyFp& divisor) const {
    require_same(*this, divisor);
    if (divisor.is_zero()) throw std::invalid_argument("PolyFp: division by zero");
    u64 lead_inv = inv_mod(divisor.coeffs_.back(), p_);
    std::vector<u64> rem = coeffs_;
    int dd = divisor.degree();
    std::vector<u64> quot(rem.size() > static_cast<u64>(dd) ? rem.size() - dd : 0, 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
        u64 c = rem[d];
        if (c == 0) continue;
        u64 q = mul_mod(c, lead_inv, p_);
        quot[d - dd] = q;
        for (int i = 0; i <= dd; ++i)
            rem[d - dd + i] = sub_mod(rem[d - dd + i], mul_mod(q, divisor.coeffs_[i], p_), p_);
    }
    return {PolyFp(p_, std::move(quot)), PolyFp(p_, std::move(rem))};
}

PolyLinearDiv PolyFp::divide_linear(u64 root) const {
    root %= p_;
    if (is_zero()) return {PolyFp(p_), 0};
    std::vector<u64> quot(coeffs_.size() - 1, 0);
    u64 acc = 0;
    for (u64 i = coeffs_.size(); i-- > 0;) {
        acc = (mul_mod(acc, root, p_) + coeffs_[i]) % p_;
        if (i > 0) quot[i - 1] = acc;
    }
    return {PolyFp(p_, std::move(quot)), acc};
}

u64 PolyFp::vanishing_order(u64 root) const {
    if (is_zero()) throw std::invalid_argument("vanishing_order of zero polynomial");
    u64 order = 0;
    PolyFp cur = *this;
    while (!cur.is_zero()) {
        auto [quot, rem] = cur.divide_linear(root);
        if (rem != 0) break;
        ++order;
        cur = std::move(quot);
    }
    return order;
}

}  // namespace hb
