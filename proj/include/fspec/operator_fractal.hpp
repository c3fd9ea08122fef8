#pragma once

#include <Eigen/Dense>

#include "fspec/cuntz_rep.hpp"
#include "fspec/hilbert_vectors.hpp"

namespace fspec {

// The 5-scaling unitary U e_gamma = e_{5 gamma} (defined on the spectrum
// basis; 5*Gamma is again a spectrum, so U is unitary), the multiplication
// unitary M e_n = e_{n+1}, and their composite MU e_gamma = e_{5 gamma + 1}.
// On spectrum-supported vectors everything below is an exact integer index
// map; truncated basis expansions appear only for general vectors and carry
// their Parseval deficit.

// Exact index map gamma -> 5 gamma. Throws support_not_in_gamma_error.
FreqVector u_apply(const FreqVector& v);

struct ExpandedImage {
    FreqVector vec;
    double parseval_deficit = 0.0;
};

// U on a general vector: expand in Gamma_depth coordinates, then scale
// indices by 5.
ExpandedImage u_apply_general(const FreqVector& f, int depth,
                              const TransformConfig& cfg = {});

// U*: coordinates against { e_{5 gamma} }, then 5 gamma -> gamma. Exact
// (deficit 0) when the support lies in 5 * Gamma_depth.
ExpandedImage u_adjoint(const FreqVector& f, int depth,
                        const TransformConfig& cfg = {});

// Exact index map n -> n + 1 on all frequencies.
FreqVector m_apply(const FreqVector& f);

// The k-fold iterate of the label map n -> 5n + 1: gamma -> 5^k gamma +
// (5^k - 1)/4 on every frequency, always an integer, semigroup in k. For
// k <= 1 on spectrum support this is (MU)^k; for larger k it is the
// relabeling isometry whose diagonal mu_moments evaluates (see
// spectral_measures.hpp on closed forms versus true powers).
FreqVector mu_pow_apply(const FreqVector& v, unsigned k);

// Index-level verification of the intertwining relations on Gamma_depth:
// S0 U = U S0, S1* U S1 = M U, and U commutes with the range projection
// S1 S1*. All equalities hold exactly in integer arithmetic.
struct RelationReport {
    int depth = 0;
    bool s0_commutes = false;
    bool s1_compression_is_mu = false;
    bool range_projection_commutes = false;

    bool all_pass() const {
        return s0_commutes && s1_compression_is_mu && range_projection_commutes;
    }
};

RelationReport relation_checks(int depth);

// Index-level verification of the block picture of U: U e_0 = e_0 and
// U (S0^k S1 e_gamma) = S0^k S1 (MU e_gamma) for k <= levels, gamma in
// Gamma_depth; both sides equal e at index 5 * 4^k * (4 gamma + 1).
struct BlockReport {
    int depth = 0;
    int levels = 0;
    bool fixed_vector_ok = false;
    bool blocks_ok = false;

    bool all_pass() const { return fixed_vector_ok && blocks_ok; }
};

BlockReport block_structure_check(int depth, int levels);

// Dense truncation of U: matrix[xi, gamma] = mu_hat(xi - 5 gamma) in rank
// coordinates. unitarity_deficit is the max-column-sum norm of I - A^* A.
// Column gamma has squared norm <= 1 (a Parseval partial sum) with equality
// iff 5 gamma lies in Gamma_depth.
struct UMatrix {
    int depth = 0;
    Eigen::MatrixXcd matrix;
    double unitarity_deficit = 0.0;
    double max_entry_error = 0.0; // largest certified mu_hat bound used
    double min_column_norm_sq = 0.0;
    double max_column_norm_sq = 0.0;

    TruncOperator as_trunc_operator() const {
        return TruncOperator(depth, matrix, /*compression_note=*/true);
    }
};

UMatrix u_matrix(int depth, const TransformConfig& cfg = {});

} // namespace fspec
