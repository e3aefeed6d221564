#pragma once

// Polynomial machinery over Z_p tied to the subgroup Gamma of Z*_{p^2}:
// the truncated logarithm f(X) = X + X^2/2 + ... + X^{p-1}/(p-1), the
// derivative decomposition (X(1-X))^r f^{(r)} = q_r + (X^p - X) h_r, the
// difference-counting lemma relating |{x - y = lambda}| across cosets to
// point counts of f(b) = (i-j)b + (j-s) in Z_p, and the auxiliary-polynomial
// certificate: a nonzero Psi = Phi(X, f(X), X^p) vanishing to order >= D at
// every counted point, which bounds the count by (A + p(B+C))/D.

#include <optional>
#include <string>
#include <vector>

#include "heilbronn/group.hpp"
#include "heilbronn/poly.hpp"
#include "heilbronn/spectral.hpp"

namespace hb {

// f(X) = sum_{i=1}^{p-1} X^i / i over Z_p.
PolyFp f_poly(const Prime& p);

struct DerivativeDecomposition {
    PolyFp q;  // deg <= r+1
    PolyFp h;  // deg <= r-1
};

// (X(1-X))^r f^{(r)}(X) = q_r(X) + (X^p - X) h_r(X), 1 <= r <= p-1.
DerivativeDecomposition derivative_decompose(const Prime& p, u64 r);

// A difference-count cell: x - y = lambda with x in xi_i Gamma, y in
// xi_j Gamma.  Index 0 marks the p-coset (x in pGamma or y in pGamma).
// lambda decomposes as (1+sp)g with s in [p] and g in Gamma.
struct MCell {
    u64 p = 0;
    u32 i = 0;  // in [p], or 0 for the p-coset
    u32 j = 0;  // in [p], or 0 for the p-coset
    u64 lambda = 1;
    u64 s = 0;  // in [p]
    u64 g = 1;  // in Gamma, g = lambda (mod p)

    static MCell make(const Prime& p, u32 i, u32 j, u64 lambda);
};

// |{ x - y = lambda (mod p^2) }| by brute force over the two cosets.
u64 m_cell_count_direct(const MCell& cell, const CosetDecomposition& dec);

struct ReducedCount {
    u64 unrestricted = 0;            // b over all of Z_p
    u64 restricted = 0;              // b over Z_p \ {0, 1}
    std::vector<u64> solutions;      // all b with f(b) = (i-j)b + (j-s)
};

// Solutions of f(b) = (i-j)b + (j-s) in Z_p (unit-coset cells only).
ReducedCount m_cell_count_reduced(const MCell& cell);

struct DifferenceLemmaFailure {
    u32 i, j;
    u64 lambda;
    u64 direct, reduced;
};

struct DifferenceLemmaReport {
    bool ok = true;
    u64 cases_checked = 0;
    std::vector<DifferenceLemmaFailure> failures;
};

// Checks direct count == restricted reduced count for all (i,j) and all unit
// lambda (or `sample` random lambdas per (i,j)), plus the <= 1 bounds for the
// p-coset cells.
DifferenceLemmaReport verify_difference_lemma(const Prime& p,
                                              std::optional<u64> sample = std::nullopt,
                                              u64 seed = 1);

struct StepanovParams {
    u64 A = 0, B = 0, C = 0, D = 0;
};

// A = [p^{2/3} s^{-1/3}], B = C = [p^{1/3} s^{1/3}], D = [p^{2/3} s^{-1/3}/32].
StepanovParams default_params(const Prime& p, u64 s);

struct CellTranscript {
    u32 i, j;
    u64 lambda;
    std::vector<u64> points;  // cell points, excluding 0 and 1
    std::vector<u64> orders;  // verified vanishing order of Psi per point
};

struct Certificate {
    u64 p = 0;
    StepanovParams params;
    std::vector<MCell> cells;
    std::vector<u64> phi;  // lambda_{a,b,c}, row-major in (a, b, c)
    PolyFp psi;            // Phi(X, f(X), X^p)
    std::vector<CellTranscript> transcript;

    u64 phi_coeff(u64 a, u64 b, u64 c) const {
        return phi[(a * params.B + b) * params.C + c];
    }
    // Degree/order bound on the total number of cell points.
    double bound() const {
        return (double(params.A) + double(p) * double(params.B + params.C)) /
               double(params.D);
    }
};

// Solves for a nonzero coefficient tensor making Psi vanish to order >= D at
// every cell point (0 and 1 excluded).  Requires admissibility
// s*D*(A+B+C+2D) < A*B*C and A*B <= p, and every cell nonempty.
Certificate build_certificate(const Prime& p, const std::vector<MCell>& cells,
                              const StepanovParams& params);

struct CertificateVerification {
    bool ok = false;
    bool psi_nonzero = false;
    u64 total_points = 0;
    double bound = 0;
    std::vector<CellTranscript> transcript;
    std::string failure;
};

// Independent check: recomputes Psi from phi by direct expansion, confirms
// Psi != 0 and (X - x)^D | Psi by repeated synthetic division at every cell
// point outside {0, 1}.
CertificateVerification verify_certificate(const Certificate& cert);

// Sum over x in Q of (Q1 o Q2)(x) for unions of cosets (coset indices in
// [p] for unit cosets, 0 for pGamma), and its ratio to
// p^{-1/3} (|Q||Q1||Q2|)^{2/3}.
struct CosetCorrelation {
    BigInt count;
    double bound_ratio;
};

CosetCorrelation coset_correlation(const Prime& p, const std::vector<u32>& q,
                                   const std::vector<u32>& q1,
                                   const std::vector<u32>& q2);

// (Gamma *_{d-1} Gamma) evaluated at one representative per unit coset
// (constancy on cosets asserted), sorted by descending value, ties by
// ascending coset index.
struct OrderedConvolutionValues {
    std::vector<std::pair<u32, BigInt>> coset_values;  // (j, value)
    BigInt at_zero;
    BigInt on_p_coset;
};

OrderedConvolutionValues ordered_convolution_values(const Prime& p, u64 d);

}  // namespace hb
