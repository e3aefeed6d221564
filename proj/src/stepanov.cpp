#include "heilbronn/stepanov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hb {

PolyFp f_poly(const Prime& p) {
    const u64 pv = p.value();
    std::vector<u64> coeffs(pv, 0);
    for (u64 i = 1; i < pv; ++i) coeffs[i] = inv_mod(i, pv);
    return PolyFp(pv, std::move(coeffs));
}

DerivativeDecomposition derivative_decompose(const Prime& p, u64 r) {
    const u64 pv = p.value();
    if (r < 1) throw std::invalid_argument("derivative_decompose: r must be >= 1");
    if (r > pv - 1) throw std::invalid_argument("derivative_decompose: r must be <= p-1");
    PolyFp xx1 = PolyFp(pv, {0, 1}) * PolyFp(pv, {1, pv - 1});  // X(1-X)
    PolyFp lhs = xx1.pow(r) * f_poly(p).derivative(r);
    // Divide by X^p - X: quotient is h_r, remainder is q_r.
    PolyFp divisor = PolyFp::monomial(pv, pv) - PolyFp::monomial(pv, 1);
    auto [h, q] = lhs.divmod(divisor);
    if (q.degree() > static_cast<int>(r) + 1 || h.degree() > static_cast<int>(r) - 1)
        throw std::logic_error("derivative_decompose: degree bound violated");
    return {q, h};
}

MCell MCell::make(const Prime& p, u32 i, u32 j, u64 lambda) {
    const u64 pv = p.value();
    const u64 n = p.squared();
    if (i > pv || j > pv) throw std::invalid_argument("MCell: coset index out of [0, p]");
    lambda %= n;
    if (gcd_u64(lambda, n) != 1) throw std::invalid_argument("MCell: lambda is not a unit");
    MCell c;
    c.p = pv;
    c.i = i;
    c.j = j;
    c.lambda = lambda;
    c.g = pow_mod(lambda % pv, pv, n);  // the Gamma element congruent to lambda mod p
    u64 u = mul_mod(lambda, inv_mod(c.g, n), n);  // u = 1 + sp
    c.s = ((u + n - 1) % n) / pv;
    if (c.s == 0) c.s = pv;
    if (mul_mod((1 + c.s * pv) % n, c.g, n) != lambda)
        throw std::logic_error("MCell: decomposition lambda = (1+sp)g failed");
    return c;
}

u64 m_cell_count_direct(const MCell& cell, const CosetDecomposition& dec) {
    const u64 n = dec.p().squared();
    const auto& xs = cell.i == 0 ? dec.p_coset() : dec.cosets()[cell.i - 1];
    const auto& ys = cell.j == 0 ? dec.p_coset() : dec.cosets()[cell.j - 1];
    u64 count = 0;
    for (u64 x : xs) {
        u64 y = (x + n - cell.lambda) % n;
        if (std::binary_search(ys.begin(), ys.end(), y)) ++count;
    }
    return count;
}

ReducedCount m_cell_count_reduced(const MCell& cell) {
    if (cell.i == 0 || cell.j == 0)
        throw std::invalid_argument("m_cell_count_reduced: unit-coset cells only");
    const u64 pv = cell.p;
    Prime p(pv);
    PolyFp f = f_poly(p);
    u64 alpha = (cell.i + pv - cell.j % pv) % pv;              // i - j
    u64 beta = (cell.j + pv - cell.s % pv) % pv;               // j - s
    ReducedCount rc;
    for (u64 b = 0; b < pv; ++b) {
        if (f.eval(b) == (mul_mod(alpha, b, pv) + beta) % pv) {
            rc.solutions.push_back(b);
            ++rc.unrestricted;
            if (b != 0 && b != 1) ++rc.restricted;
        }
    }
    return rc;
}

DifferenceLemmaReport verify_difference_lemma(const Prime& p, std::optional<u64> sample,
                                              u64 seed) {
    const u64 pv = p.value();
    const u64 n = p.squared();
    CosetDecomposition dec = CosetDecomposition::build(p);
    std::vector<u64> units;
    units.reserve(n - pv);
    for (u64 a = 1; a < n; ++a)
        if (a % pv != 0) units.push_back(a);

    std::mt19937_64 rng(seed);
    DifferenceLemmaReport rep;
    for (u32 i = 1; i <= pv; ++i) {
        for (u32 j = 1; j <= pv; ++j) {
            std::vector<u64> lambdas;
            if (sample && *sample < units.size()) {
                std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
                for (u64 t = 0; t < *sample; ++t) lambdas.push_back(units[pick(rng)]);
            } else {
                lambdas = units;
            }
            for (u64 lambda : lambdas) {
                MCell cell = MCell::make(p, i, j, lambda);
                u64 direct = m_cell_count_direct(cell, dec);
                u64 reduced = m_cell_count_reduced(cell).restricted;
                ++rep.cases_checked;
                if (direct != reduced) {
                    rep.ok = false;
                    rep.failures.push_back({i, j, lambda, direct, reduced});
                }
            }
        }
        // boundary cells: counts are at most 1
        std::vector<u64> blambdas;
        if (sample && *sample < units.size()) {
            std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
            for (u64 t = 0; t < *sample; ++t) blambdas.push_back(units[pick(rng)]);
        } else {
            blambdas = units;
        }
        for (u64 lambda : blambdas) {
            MCell top = MCell::make(p, i, 0, lambda);
            MCell bot = MCell::make(p, 0, i, lambda);
            u64 ct = m_cell_count_direct(top, dec);
            u64 cb = m_cell_count_direct(bot, dec);
            rep.cases_checked += 2;
            if (ct > 1) {
                rep.ok = false;
                rep.failures.push_back({i, 0, lambda, ct, 1});
            }
            if (cb > 1) {
                rep.ok = false;
                rep.failures.push_back({0, i, lambda, cb, 1});
            }
        }
    }
    return rep;
}

StepanovParams default_params(const Prime& p, u64 s) {
    double pd = static_cast<double>(p.value());
    double sd = static_cast<double>(s);
    StepanovParams q;
    q.A = static_cast<u64>(std::cbrt(pd * pd / sd));
    q.B = q.C = static_cast<u64>(std::cbrt(pd * sd));
    q.D = static_cast<u64>(std::cbrt(pd * pd / sd) / 32.0);
    return q;
}

namespace {

// Constraint-row builder for one cell.  Expresses, for every derivative
// order n < D, the value [X(1-X)]^n (d/dX)^n X^a f(X)^b X^{cp} at cell
// points as a low-degree polynomial:
//   - d/dX annihilates X^{cp} in characteristic p, and x^{cp} = x^c on Z_p;
//   - derivatives of f enter through Faa di Bruno, with each
//     (X(1-X))^r f^{(r)} replaced by q_r (the X^p - X part vanishes on Z_p);
//   - f itself is replaced by the cell's linear form (i-j)X + (j-s).
class CellReducer {
public:
    CellReducer(const Prime& p, const StepanovParams& params, u64 alpha, u64 beta)
        : p_(p.value()), params_(params), lin_(p_, {beta, alpha}) {
        const u64 d = params.D;
        // q_r for 1 <= r <= D-1
        qs_.push_back(PolyFp::zero(p_));  // unused slot r = 0
        for (u64 r = 1; r < d; ++r) qs_.push_back(derivative_decompose(p, r).q);
        // Bell polynomials B_{r,k} evaluated at (q_1, q_2, ...).
        bell_.assign(d, std::vector<PolyFp>(d, PolyFp::zero(p_)));
        bell_[0][0] = PolyFp::constant(p_, 1);
        for (u64 r = 1; r < d; ++r)
            for (u64 k = 1; k <= r; ++k) {
                PolyFp acc = PolyFp::zero(p_);
                for (u64 i = 1; i + k <= r + 1; ++i)
                    acc = acc + (qs_[i] * bell_[r - i][k - 1]).scaled(binom(r - 1, i - 1));
                bell_[r][k] = acc;
            }
        // powers of the linear form up to B-1
        lin_pow_.push_back(PolyFp::constant(p_, 1));
        for (u64 b = 1; b < params.B; ++b) lin_pow_.push_back(lin_pow_.back() * lin_);
        PolyFp xx1 = PolyFp(p_, {0, 1}) * PolyFp(p_, {1, p_ - 1});
        xx1_pow_.push_back(PolyFp::constant(p_, 1));
        for (u64 m = 1; m < d; ++m) xx1_pow_.push_back(xx1_pow_.back() * xx1);
    }

    // Reduced polynomial agreeing with [X(1-X)]^n (d^n/dX^n)(X^a f^b X^{cp})
    // at all cell points.
    PolyFp reduced(u64 n, u64 a, u64 b, u64 c) const {
        PolyFp acc = PolyFp::zero(p_);
        for (u64 m = 0; m <= n && m <= a; ++m) {
            u64 coef = mul_mod(binom(n, m), falling(a, m), p_);
            if (coef == 0) continue;
            PolyFp term = PolyFp::monomial(p_, a - m, coef) * xx1_pow_[m] * h_poly(n - m, b);
            acc = acc + term;
        }
        return PolyFp::monomial(p_, c) * acc;
    }

private:
    // (X(1-X))^r d^r (f^b), reduced on the cell.
    PolyFp h_poly(u64 r, u64 b) const {
        if (r == 0) return lin_pow_[b];
        PolyFp acc = PolyFp::zero(p_);
        for (u64 k = 1; k <= r && k <= b; ++k)
            acc = acc + (lin_pow_[b - k] * bell_[r][k]).scaled(falling(b, k));
        return acc;
    }

    u64 binom(u64 n, u64 k) const {
        if (k > n) return 0;
        u64 num = 1, den = 1;
        for (u64 i = 0; i < k; ++i) {
            num = mul_mod(num, (n - i) % p_, p_);
            den = mul_mod(den, (i + 1) % p_, p_);
        }
        return mul_mod(num, inv_mod(den, p_), p_);
    }

    u64 falling(u64 x, u64 k) const {
        u64 r = 1;
        for (u64 i = 0; i < k; ++i) r = mul_mod(r, (x >= i ? (x - i) % p_ : 0), p_);
        return r;
    }

    u64 p_;
    StepanovParams params_;
    PolyFp lin_;
    std::vector<PolyFp> qs_;
    std::vector<std::vector<PolyFp>> bell_;
    std::vector<PolyFp> lin_pow_;
    std::vector<PolyFp> xx1_pow_;
};

// Reduced row echelon form mod p; returns pivot column -> row map.
std::vector<std::pair<u64, u64>> rref(std::vector<std::vector<u64>>& m, u64 p) {
    std::vector<std::pair<u64, u64>> pivots;
    const u64 cols = m.empty() ? 0 : m[0].size();
    u64 row = 0;
    for (u64 col = 0; col < cols && row < m.size(); ++col) {
        u64 sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        u64 inv = inv_mod(m[row][col], p);
        for (auto& v : m[row]) v = mul_mod(v, inv, p);
        for (u64 r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            u64 c = m[r][col];
            for (u64 k = col; k < cols; ++k)
                m[r][k] = sub_mod(m[r][k], mul_mod(c, m[row][k], p), p);
        }
        pivots.emplace_back(col, row);
        ++row;
    }
    return pivots;
}

PolyFp expand_psi(const Prime& p, const StepanovParams& params,
                  const std::vector<u64>& phi) {
    const u64 pv = p.value();
    PolyFp f = f_poly(p);
    std::vector<PolyFp> fpow;
    fpow.push_back(PolyFp::constant(pv, 1));
    for (u64 b = 1; b < params.B; ++b) fpow.push_back(fpow.back() * f);
    PolyFp psi = PolyFp::zero(pv);
    for (u64 a = 0; a < params.A; ++a)
        for (u64 b = 0; b < params.B; ++b)
            for (u64 c = 0; c < params.C; ++c) {
                u64 lam = phi[(a * params.B + b) * params.C + c];
                if (lam == 0) continue;
                psi = psi + PolyFp::monomial(pv, a + c * pv, lam) * fpow[b];
            }
    return psi;
}

std::vector<u64> cell_points(const MCell& cell) {
    return m_cell_count_reduced(cell).solutions;
}

std::vector<u64> cell_points_restricted(const MCell& cell) {
    std::vector<u64> pts;
    for (u64 b : cell_points(cell))
        if (b != 0 && b != 1) pts.push_back(b);
    return pts;
}

}  // namespace

Certificate build_certificate(const Prime& p, const std::vector<MCell>& cells,
                              const StepanovParams& params) {
    const u64 pv = p.value();
    if (cells.empty()) throw std::invalid_argument("build_certificate: empty cell list");
    const u64 A = params.A, B = params.B, C = params.C, D = params.D;
    if (A == 0 || B == 0 || C == 0 || D == 0)
        throw std::invalid_argument("build_certificate: parameters must be positive");
    const u64 s = cells.size();
    const u64 row_cap = A + B + C + 2 * D;
    if (s * D * row_cap >= A * B * C) {
        std::ostringstream os;
        os << "build_certificate: inadmissible parameters, sD(A+B+C+2D) = "
           << s * D * row_cap << " is not < ABC = " << A * B * C;
        throw std::invalid_argument(os.str());
    }
    if (A * B > pv)
        throw std::invalid_argument("build_certificate: inadmissible parameters, AB > p");
    if (D >= pv)
        throw std::invalid_argument("build_certificate: D must be < p");

    const u64 ncols = A * B * C;
    std::vector<std::vector<u64>> matrix;
    matrix.reserve(s * D * row_cap);
    for (const MCell& cell : cells) {
        if (cell.p != pv) throw std::invalid_argument("build_certificate: cell prime mismatch");
        if (cell.i == 0 || cell.j == 0)
            throw std::invalid_argument("build_certificate: unit-coset cells only");
        if (cell_points_restricted(cell).empty())
            throw std::invalid_argument("build_certificate: cell has no points");
        u64 alpha = (cell.i + pv - cell.j % pv) % pv;
        u64 beta = (cell.j + pv - cell.s % pv) % pv;
        CellReducer reducer(p, params, alpha, beta);
        for (u64 n = 0; n < D; ++n) {
            // columns of the coefficient matrix for this block of rows
            std::vector<PolyFp> col_polys;
            col_polys.reserve(ncols);
            for (u64 a = 0; a < A; ++a)
                for (u64 b = 0; b < B; ++b)
                    for (u64 c = 0; c < C; ++c) {
                        PolyFp e = reducer.reduced(n, a, b, c);
                        if (e.degree() >= static_cast<int>(row_cap))
                            throw std::logic_error(
                                "build_certificate: reduced polynomial exceeds degree bound");
                        col_polys.push_back(std::move(e));
                    }
            for (u64 d = 0; d < row_cap; ++d) {
                std::vector<u64> row(ncols);
                for (u64 c = 0; c < ncols; ++c) row[c] = col_polys[c].coeff(d);
                matrix.push_back(std::move(row));
            }
        }
    }

    auto pivots = rref(matrix, pv);
    std::vector<bool> is_pivot(ncols, false);
    for (auto [col, row] : pivots) is_pivot[col] = true;
    u64 free_col = ncols;
    for (u64 c = 0; c < ncols; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col == ncols)
        throw std::logic_error("build_certificate: empty nullspace (contradicts dimension count)");

    // Nullspace vector: first free column set to 1, pivot entries solved.
    std::vector<u64> phi(ncols, 0);
    phi[free_col] = 1;
    for (auto [col, row] : pivots)
        phi[col] = (pv - matrix[row][free_col]) % pv;

    Certificate cert;
    cert.p = pv;
    cert.params = params;
    cert.cells = cells;
    cert.phi = std::move(phi);
    cert.psi = expand_psi(p, params, cert.phi);
    if (cert.psi.is_zero())
        throw std::logic_error("build_certificate: Psi vanished identically");

    for (const MCell& cell : cells) {
        CellTranscript tr;
        tr.i = cell.i;
        tr.j = cell.j;
        tr.lambda = cell.lambda;
        tr.points = cell_points_restricted(cell);
        for (u64 x : tr.points) tr.orders.push_back(cert.psi.vanishing_order(x));
        cert.transcript.push_back(std::move(tr));
    }
    return cert;
}

CertificateVerification verify_certificate(const Certificate& cert) {
    CertificateVerification v;
    v.bound = cert.bound();
    Prime p(cert.p);
    if (cert.phi.size() != cert.params.A * cert.params.B * cert.params.C) {
        v.failure = "phi tensor has wrong size";
        return v;
    }
    PolyFp psi = expand_psi(p, cert.params, cert.phi);
    v.psi_nonzero = !psi.is_zero();
    if (!v.psi_nonzero) {
        v.failure = "Psi is identically zero";
        return v;
    }
    if (!(psi == cert.psi)) {
        v.failure = "stored Psi does not match Phi(X, f(X), X^p)";
        return v;
    }
    const u64 D = cert.params.D;
    for (const MCell& cell : cert.cells) {
        CellTranscript tr;
        tr.i = cell.i;
        tr.j = cell.j;
        tr.lambda = cell.lambda;
        tr.points = cell_points_restricted(cell);
        for (u64 x : tr.points) {
            u64 order = psi.vanishing_order(x);
            tr.orders.push_back(order);
            ++v.total_points;
            if (order < D) {
                std::ostringstream os;
                os << "vanishing order " << order << " < D at x = " << x
                   << " in cell (" << cell.i << "," << cell.j << ")";
                v.failure = os.str();
            }
        }
        v.transcript.push_back(std::move(tr));
    }
    if (!v.failure.empty()) return v;
    if (static_cast<double>(v.total_points) > v.bound) {
        v.failure = "cell point count exceeds (A + p(B+C))/D";
        return v;
    }
    v.ok = true;
    return v;
}

CosetCorrelation coset_correlation(const Prime& p, const std::vector<u32>& q,
                                   const std::vector<u32>& q1,
                                   const std::vector<u32>& q2) {
    const u64 n = p.squared();
    CosetDecomposition dec = CosetDecomposition::build(p);
    auto expand = [&](const std::vector<u32>& idx) {
        std::vector<u64> out;
        for (u32 j : idx) {
            const auto& coset = j == 0 ? dec.p_coset() : dec.cosets().at(j - 1);
            out.insert(out.end(), coset.begin(), coset.end());
        }
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw std::invalid_argument("coset_correlation: repeated coset index");
        return out;
    };
    std::vector<u64> sq = expand(q), s1 = expand(q1), s2 = expand(q2);
    std::vector<bool> in_q(n, false);
    for (u64 x : sq) in_q[x] = true;
    BigInt count = 0;
    for (u64 y : s1)
        for (u64 z : s2)
            if (in_q[(z + n - y) % n]) ++count;
    double sizes = static_cast<double>(sq.size()) * static_cast<double>(s1.size()) *
                   static_cast<double>(s2.size());
    double bound = std::pow(static_cast<double>(p.value()), -1.0 / 3.0) *
                   std::pow(sizes, 2.0 / 3.0);
    return {count, count.convert_to<double>() / bound};
}

OrderedConvolutionValues ordered_convolution_values(const Prime& p, u64 d) {
    if (d < 2) throw std::invalid_argument("ordered_convolution_values: d must be >= 2");
    CosetDecomposition dec = CosetDecomposition::build(p);
    CountTable conv = iterated_convolution(p.squared(), dec.gamma().elements(), d);
    OrderedConvolutionValues out;
    for (u32 j = 1; j <= p.value(); ++j) {
        const auto& coset = dec.cosets()[j - 1];
        BigInt v = conv.get(coset.front());
        for (u64 x : coset)
            if (conv.get(x) != v)
                throw std::logic_error("ordered_convolution_values: not constant on coset");
        out.coset_values.emplace_back(j, std::move(v));
    }
    out.at_zero = conv.get(0);
    out.on_p_coset = conv.get(dec.p_coset().front());
    for (u64 x : dec.p_coset())
        if (conv.get(x) != out.on_p_coset)
            throw std::logic_error("ordered_convolution_values: not constant on pGamma");
    std::stable_sort(out.coset_values.begin(), out.coset_values.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                     });
    return out;
}

}  // namespace hb
