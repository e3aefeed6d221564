#pragma once

// The umbrella identity suite: for a given prime, re-derives the key exact
// identities through independent routes and reports agreement.

#include <string>
#include <vector>

#include "heilbronn/arith.hpp"

namespace hb {

struct SuiteResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Runs: difference-lemma (exhaustive for p <= 7, sampled above),
// energy-oracle (tables vs brute-force tuple counts for p <= 13, cross-route
// identities above), heilbronn-invariant (realness, coset invariance,
// Parseval), and the derivative-decomposition suite.
std::vector<SuiteResult> run_verify_suites(const Prime& p);

}  // namespace hb
