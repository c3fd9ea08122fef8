#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fspec/hilbert_vectors.hpp"
#include "fspec/spectrum_index.hpp"

namespace fspec {

// The measure induced by a spectrum-supported vector v on the compact group
// X = prod {0,1} of infinite binary words: a stored index gamma is identified
// with its digit word padded by zeros, and the mass of the cylinder A(prefix)
// is the sum of |amplitude|^2 over the indices whose padded word extends the
// prefix. All masses here are finite exact sums.

struct CylinderSet {
    GammaWord prefix;
};

// Throws support_not_in_gamma_error for frequencies outside the spectrum.
double cylinder_mass(const FreqVector& v, const GammaWord& prefix);

struct CylinderReport {
    int depth = 0;
    // Mass for every prefix of length <= depth; lexicographic key order.
    std::map<GammaWord, double> masses;
    double total = 0.0;                    // mass of the empty prefix
    double max_additivity_violation = 0.0; // max |m(p) - m(p0) - m(p1)|
};

CylinderReport cylinder_tree(const FreqVector& v, int depth);

// Masses along a fixed path: entry d is the mass of the length-d prefix of
// `path` (entry 0 is the whole space, giving |v|^2). The path is padded with
// zeros beyond its stored length. The sequence is nonincreasing.
std::vector<double> atom_scan(const FreqVector& v, const GammaWord& path, int depth);

// Checks |S1* S0*^k v|^2 == mass of the cylinder (0,...,0,1) with k zeros,
// for k = 0..k_max. Both sides are the same filtered sum of |amplitude|^2 in
// the same order, so equality is exact (diff identically zero).
struct WeightIdentityReport {
    int k_max = 0;
    std::vector<std::pair<double, double>> pairs; // (operator norm^2, cylinder mass)
    double max_abs_diff = 0.0;
    bool exact = false;
};

WeightIdentityReport weight_identity_check(const FreqVector& v, int k_max);

} // namespace fspec
