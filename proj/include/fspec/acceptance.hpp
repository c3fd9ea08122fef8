#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fspec {

// The verification suite behind `fractal-spectrum verify-all` and the
// acceptance test binary: twelve self-contained checks covering the exact
// index-level operator identities, the certified transform, the measure
// decompositions, and the density estimates. Each check prints one line.
//
// Two checks are expected to FAIL and are kept failing on purpose:
//
//  * Check 11 (truncation-deficit decay): the truncated scaling matrix at
//    depth L embeds entrywise into the depth-(L+1) truncation (subsample
//    rows and columns at the digit-0 residue), so the max-column-sum
//    deficit of I - A*A can never decrease with depth.
//
//  * Check 12, Fejer-positivity clause: the closed-form moment functionals
//    are diagonals of the relabeling isometries A_k rather than of the
//    powers U^k (which leave the spectrum from k = 2 on), so they need not
//    be positive definite; genuinely positive true moments cannot be
//    computed to these tolerances (the certified truncation error decays
//    like the square root of the expansion tail).
//
// Both failure messages carry the structural reason; the checks document
// these facts instead of redefining the quantities until they pass.

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceConfig {
    std::uint64_t seed = 20250810;
    int kmax = 12;
    int gridsize = 512;
};

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

// "[PASS] criterion  3: ..." / "[FAIL] criterion 11: ..."
std::string format_result(const CriterionResult& r);

} // namespace fspec
