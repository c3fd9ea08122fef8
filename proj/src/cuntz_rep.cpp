#include "fspec/cuntz_rep.hpp"

#include <cmath>
#include <utility>

namespace fspec {

FreqVector s0_apply(const FreqVector& f) {
    FreqVector out;
    for (const auto& [n, a] : f.entries()) out.add_term(n * 4, a);
    return out;
}

FreqVector s1_apply(const FreqVector& f) {
    FreqVector out;
    for (const auto& [n, a] : f.entries()) out.add_term(n * 4 + 1, a);
    return out;
}

namespace {

// Shared implementation of the two adjoints. `offset` is 0 for S0*, 1 for
// S1*: the clean residue is `offset`, annihilated residues are handled by the
// parity table, and the leftover residue expands as
// sum_gamma mu_hat(4 gamma + offset - n) e_gamma.
StripResult adjoint_impl(const FreqVector& f, int offset, int depth,
                         const TransformConfig& cfg) {
    StripResult out;
    FreqVector expand_part;
    for (const auto& [n, a] : f.entries()) {
        const int r = residue_mod4(n);
        if (r == offset) {
            out.vec.add_term((n - offset) / 4, a);
        } else if (r == 2 + offset) {
            expand_part.add_term(n, a);
        }
        // the other two residues are annihilated
    }
    if (!expand_part.empty()) {
        out.exact = false;
        for (const BigInt& gamma : enumerate_gamma(depth)) {
            Complex c{0.0, 0.0};
            for (const auto& [n, a] : expand_part.entries())
                c += a * mu_hat_int(4 * gamma + offset - n, cfg).value;
            out.vec.add_term(gamma, c);
        }
    }
    return out;
}

} // namespace

StripResult s0_adjoint(const FreqVector& f, int depth, const TransformConfig& cfg) {
    return adjoint_impl(f, 0, depth, cfg);
}

StripResult s1_adjoint(const FreqVector& f, int depth, const TransformConfig& cfg) {
    return adjoint_impl(f, 1, depth, cfg);
}

FreqVector word_apply(const GammaWord& eta, const FreqVector& f) {
    FreqVector out = f;
    for (std::size_t i = 0; i < eta.length(); ++i)
        out = eta.bit(i) ? s1_apply(out) : s0_apply(out);
    return out;
}

StripResult word_adjoint(const GammaWord& eta, const FreqVector& f, int depth,
                         const TransformConfig& cfg) {
    StripResult out{f, true};
    for (std::size_t i = 0; i < eta.length(); ++i) {
        StripResult step = eta.bit(i) ? s1_adjoint(out.vec, depth, cfg)
                                      : s0_adjoint(out.vec, depth, cfg);
        out.vec = std::move(step.vec);
        out.exact = out.exact && step.exact;
    }
    return out;
}

CuntzCheckReport cuntz_identity_check(int depth) {
    CuntzCheckReport rep;
    rep.depth = depth;
    rep.s0_isometry = rep.s1_isometry = true;
    rep.cross_terms_vanish = rep.range_projections_complete = true;
    for (const BigInt& g : enumerate_gamma(depth)) {
        const BigInt s0g = 4 * g;
        const BigInt s1g = 4 * g + 1;
        // S_i* S_i e_g = e_g: strip what was just appended.
        if (!(residue_mod4(s0g) == 0 && s0g / 4 == g)) rep.s0_isometry = false;
        if (!(residue_mod4(s1g) == 1 && (s1g - 1) / 4 == g)) rep.s1_isometry = false;
        // S0* S1 e_g and S1* S0 e_g vanish: the residues land in the
        // annihilated classes.
        if (residue_mod4(s1g) == 0) rep.cross_terms_vanish = false;
        if (residue_mod4(s0g) == 1) rep.cross_terms_vanish = false;
        // S0 S0* + S1 S1* = I: exactly one range projection keeps e_g.
        const bool in_s0_range = residue_mod4(g) == 0;
        const bool in_s1_range = residue_mod4(g) == 1;
        if (in_s0_range == in_s1_range) rep.range_projections_complete = false;
        if (in_s0_range && 4 * (g / 4) != g) rep.range_projections_complete = false;
        if (in_s1_range && 4 * ((g - 1) / 4) + 1 != g)
            rep.range_projections_complete = false;
    }
    return rep;
}

std::vector<double> wold_sequence(const FreqVector& v, int n_max) {
    v.require_gamma_support("wold_sequence");
    // S0* strips one digit: e_n survives exactly n strips when 4^n divides n.
    // Bucket the coefficient masses by survival count and accumulate from the
    // top so that |S0*^n v|^2 = sum_{m >= n} bucket[m] is nonincreasing by
    // construction (each step adds a nonnegative term), with the e_0
    // component (which survives forever) as the base.
    std::vector<double> bucket(std::size_t(n_max) + 1, 0.0);
    double base = 0.0; // mass that survives beyond n_max strips
    for (const auto& [n, a] : v.entries()) {
        if (n == 0) {
            base += std::norm(a);
            continue;
        }
        int strips = 0;
        BigInt m = n;
        while (m % 4 == 0 && strips <= n_max) {
            m /= 4;
            ++strips;
        }
        if (strips > n_max) base += std::norm(a);
        else bucket[std::size_t(strips)] += std::norm(a);
    }
    std::vector<double> norms(std::size_t(n_max) + 1);
    double acc = base;
    for (int n = n_max; n >= 0; --n) {
        acc += bucket[std::size_t(n)];
        norms[std::size_t(n)] = std::sqrt(acc);
    }
    return norms;
}

FreqVector p_k_project(const FreqVector& v, int k) {
    v.require_gamma_support("p_k_project");
    const BigInt p4k = pow_int(4, static_cast<unsigned>(k));
    FreqVector out;
    for (const auto& [n, a] : v.entries()) {
        if (n % p4k != 0) continue;
        if ((n / p4k) % 4 == 1) out.add_term(n, a);
    }
    return out;
}

TruncOperator::TruncOperator(int depth, Eigen::MatrixXcd matrix,
                             bool compression_note)
    : depth_(depth), matrix_(std::move(matrix)), compression_note_(compression_note) {
    const Eigen::Index d = Eigen::Index(1) << depth;
    if (matrix_.rows() != d || matrix_.cols() != d)
        throw depth_mismatch_error("matrix dimension does not match 2^depth");
}

TruncOperator TruncOperator::identity(int depth) {
    const Eigen::Index d = Eigen::Index(1) << depth;
    return TruncOperator(depth, Eigen::MatrixXcd::Identity(d, d));
}

OperatorBlocks alpha2(const TruncOperator& X) {
    if (X.depth() < 1)
        throw depth_mismatch_error("alpha2 needs depth >= 1");
    const int L = X.depth() - 1;
    const Eigen::Index d = Eigen::Index(1) << L;
    OperatorBlocks B;
    B.depth = L;
    for (auto* m : {&B.m00, &B.m01, &B.m10, &B.m11}) m->resize(d, d);
    // (alpha2 X)_{ij}[xi, gamma] = <e_{4 xi + i}, X e_{4 gamma + j}>; in rank
    // coordinates appending digit i at the bottom doubles the rank and adds i.
    for (Eigen::Index col = 0; col < d; ++col) {
        for (Eigen::Index row = 0; row < d; ++row) {
            B.m00(row, col) = X.matrix()(2 * row + 0, 2 * col + 0);
            B.m01(row, col) = X.matrix()(2 * row + 0, 2 * col + 1);
            B.m10(row, col) = X.matrix()(2 * row + 1, 2 * col + 0);
            B.m11(row, col) = X.matrix()(2 * row + 1, 2 * col + 1);
        }
    }
    return B;
}

TruncOperator beta2(const OperatorBlocks& blocks) {
    const Eigen::Index d = Eigen::Index(1) << blocks.depth;
    for (const auto* m : {&blocks.m00, &blocks.m01, &blocks.m10, &blocks.m11})
        if (m->rows() != d || m->cols() != d)
            throw depth_mismatch_error("beta2: block dimension mismatch");
    Eigen::MatrixXcd out(2 * d, 2 * d);
    for (Eigen::Index col = 0; col < d; ++col) {
        for (Eigen::Index row = 0; row < d; ++row) {
            out(2 * row + 0, 2 * col + 0) = blocks.m00(row, col);
            out(2 * row + 0, 2 * col + 1) = blocks.m01(row, col);
            out(2 * row + 1, 2 * col + 0) = blocks.m10(row, col);
            out(2 * row + 1, 2 * col + 1) = blocks.m11(row, col);
        }
    }
    return TruncOperator(blocks.depth + 1, std::move(out));
}

double commutant_identity_residual(const TruncOperator& X) {
    const Eigen::Index d = X.dim();
    const auto& A = X.matrix();
    double residual = 0.0;
    for (Eigen::Index col = 0; col < d; ++col) {
        for (Eigen::Index row = 0; row < d; ++row) {
            // Ranks are base-2 readings of the digit strings, so digit 0 at
            // the bottom means even rank, digit 1 means odd rank.
            const bool r0 = (row % 2) == 0, c0 = (col % 2) == 0;
            Complex rhs{0.0, 0.0};
            if (r0 && c0) rhs = A(row / 2, col / 2);           // S0 X S0*
            else if (!r0 && !c0) rhs = A(row, col);            // S1 S1* X S1 S1*
            residual = std::max(residual, std::abs(A(row, col) - rhs));
        }
    }
    return residual;
}

} // namespace fspec
