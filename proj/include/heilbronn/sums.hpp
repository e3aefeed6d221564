#pragma once

// The complete exponential sum S(a) = sum_{n=1}^p e(a n^p / p^2), partial
// interval sums, and bound-ratio reports: exact energies of Gamma and the
// measured maximum of |S(a)| set against the asymptotic bound formulas.

#include <complex>
#include <string>
#include <vector>

#include "heilbronn/group.hpp"
#include "heilbronn/spectral.hpp"

namespace hb {

struct SumResult {
    u64 p = 0;
    u64 a = 0;
    std::complex<double> value;
    double abs = 0;
};

// Exponents n^p mod p^2 are computed exactly before the circle map.
SumResult heilbronn_sum(const Prime& p, u64 a);

// N terms starting at n = M (the interval convention is fixed at exactly N
// terms).  Requires 1 <= N <= p.
std::complex<double> interval_sum(const Prime& p, u64 a, u64 m, u64 n_terms);

struct BoundRow {
    std::string quantity;
    std::string value;          // exact integer as decimal, or a formatted real
    std::string bound_formula;
    double numeric_value = 0;
    double ratio = 0;           // value / bound (logs base 2)
};

struct BoundReport {
    u64 p = 0;
    std::vector<BoundRow> rows;
};

// Rows: max_a |S(a)| over one representative per unit coset, the Parseval
// total sum_a |S(a)|^2 against p^3, and exact E, E_3, T_3 of Gamma against
// their bound formulas.  Energy rows require p <= energy_cap.
BoundReport scan_bounds(const Prime& p, u64 energy_cap = 2003);

}  // namespace hb
