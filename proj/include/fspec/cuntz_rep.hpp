#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fspec/hilbert_vectors.hpp"
#include "fspec/spectrum_index.hpp"

namespace fspec {

// The O_2 representation on L2 of the quarter-Cantor measure:
//
//     S0 e_n = e_{4n},   S1 e_n = e_{4n+1}   (all integer n),
//
// with adjoints acting by digit stripping where the residue allows it:
// S0* e_n = e_{n/4} for n = 0 mod 4, 0 for n = 1,3 mod 4; S1* e_n =
// e_{(n-1)/4} for n = 1 mod 4, 0 for n = 0,2 mod 4. The two remaining
// residues (2 for S0*, 3 for S1*) are not index maps; they are expanded in
// the truncated basis with the defining adjoint relation, and the result is
// flagged as inexact.

FreqVector s0_apply(const FreqVector& f);
FreqVector s1_apply(const FreqVector& f);

struct StripResult {
    FreqVector vec;
    // False when a truncated basis expansion was needed (residues 2 / 3),
    // i.e. the true image has components outside the returned span.
    bool exact = true;
};

StripResult s0_adjoint(const FreqVector& f, int depth,
                       const TransformConfig& cfg = {});
StripResult s1_adjoint(const FreqVector& f, int depth,
                       const TransformConfig& cfg = {});

// Letters of eta are applied first-to-last: word_apply((1,0), e_0) applies
// S1 then S0, giving e_4 = e at index 4*(4*0+1). With this order, applying
// the word of gamma to e_0 lands on the basis vector whose digit string is
// the reverse of eta.
FreqVector word_apply(const GammaWord& eta, const FreqVector& f);

// Adjoint letters applied first-to-last as well, which erases a matching
// digit prefix: word_adjoint(prefix, e_{prefix.xi}) = e_xi, and 0 when the
// prefix does not match.
StripResult word_adjoint(const GammaWord& eta, const FreqVector& f, int depth,
                         const TransformConfig& cfg = {});

// Cuntz relations checked by pure index arithmetic on every e_gamma,
// gamma in Gamma_depth: S0*S0 = S1*S1 = I, S0*S1 = S1*S0 = 0,
// S0 S0* + S1 S1* = I.
struct CuntzCheckReport {
    int depth = 0;
    bool s0_isometry = false;
    bool s1_isometry = false;
    bool cross_terms_vanish = false;
    bool range_projections_complete = false;

    bool all_pass() const {
        return s0_isometry && s1_isometry && cross_terms_vanish &&
               range_projections_complete;
    }
};

CuntzCheckReport cuntz_identity_check(int depth);

// Norms |S0*^n v| for n = 0..n_max, computed exactly by index stripping.
// The sequence is nonincreasing and stabilizes at |<e_0, v>| once n exceeds
// the maximal word length of v. Requires spectrum support.
std::vector<double> wold_sequence(const FreqVector& v, int n_max);

// Projection onto the subspace S0^k S1 L2: keeps the components with index
// in 4^k (1 + 4 Gamma). Requires spectrum support.
FreqVector p_k_project(const FreqVector& v, int k);

// A dense matrix view of an operator compressed to span{ e_gamma :
// gamma in Gamma_depth }. Row/column r corresponds to gamma_unrank(r, depth).
class TruncOperator {
public:
    TruncOperator(int depth, Eigen::MatrixXcd matrix, bool compression_note = false);

    static TruncOperator identity(int depth);

    int depth() const noexcept { return depth_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

    // Set when the underlying operator maps the span outside itself, so the
    // matrix is a genuine compression.
    bool compression_note() const noexcept { return compression_note_; }

private:
    int depth_;
    Eigen::MatrixXcd matrix_;
    bool compression_note_;
};

struct OperatorBlocks {
    int depth = 0; // depth of each block
    // block(i, j) represents S_i^* X S_j.
    Eigen::MatrixXcd m00, m01, m10, m11;
};

// alpha2(X)_{ij} = S_i* X S_j. Takes a depth-(L+1) operator to four depth-L
// blocks by exact index subsampling: (alpha2 X)_{ij}[xi, gamma] =
// X[4 xi + i, 4 gamma + j]. Throws depth_mismatch_error for depth 0.
OperatorBlocks alpha2(const TruncOperator& X);

// beta2((M_ij)) = sum_ij S_i M_ij S_j*, the exact reassembly; inverse of
// alpha2 on matrices (beta2(alpha2(X)) == X entrywise).
TruncOperator beta2(const OperatorBlocks& blocks);

// Residual of the commutant identity X = S0 X S0* + S1 S1* X S1 S1* on the
// truncation span, valid when X commutes with S0 and S0*. Returns the max
// entrywise deviation.
double commutant_identity_residual(const TruncOperator& X);

} // namespace fspec
