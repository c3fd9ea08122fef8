#pragma once

#include <random>

#include "fspec/cuntz_rep.hpp"
#include "fspec/hilbert_vectors.hpp"

namespace fspec {

// Deterministic generators shared by the property tests and the acceptance
// suite. All draws come from the passed engine, so a fixed seed fixes every
// instance.

// Unit vector supported on Gamma_depth with `support` distinct frequencies
// and complex gaussian amplitudes.
FreqVector random_gamma_vector(int depth, int support, std::mt19937_64& rng);

// Dense operator on Gamma_depth with complex gaussian entries.
TruncOperator random_trunc_operator(int depth, std::mt19937_64& rng);

} // namespace fspec
