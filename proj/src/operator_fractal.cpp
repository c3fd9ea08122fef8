#include "fspec/operator_fractal.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fspec {

FreqVector u_apply(const FreqVector& v) {
    v.require_gamma_support("u_apply");
    FreqVector out;
    for (const auto& [n, a] : v.entries()) out.add_term(n * 5, a);
    return out;
}

ExpandedImage u_apply_general(const FreqVector& f, int depth,
                              const TransformConfig& cfg) {
    const OnbCoeffs co = onb_coeffs(f, depth, cfg);
    ExpandedImage out;
    out.parseval_deficit = co.parseval_deficit;
    for (const auto& [gamma, c] : co.coeffs) out.vec.add_term(gamma * 5, c);
    return out;
}

ExpandedImage u_adjoint(const FreqVector& f, int depth, const TransformConfig& cfg) {
    const OnbCoeffs co = onb_coeffs_scaled(f, depth, cfg);
    ExpandedImage out;
    out.parseval_deficit = co.parseval_deficit;
    for (const auto& [gamma, c] : co.coeffs) out.vec.add_term(gamma, c);
    return out;
}

FreqVector m_apply(const FreqVector& f) {
    FreqVector out;
    for (const auto& [n, a] : f.entries()) out.add_term(n + 1, a);
    return out;
}

FreqVector mu_pow_apply(const FreqVector& v, unsigned k) {
    const BigInt scale = pow5(k);
    const BigInt offset = mu_offset(k);
    FreqVector out;
    for (const auto& [n, a] : v.entries()) out.add_term(scale * n + offset, a);
    return out;
}

RelationReport relation_checks(int depth) {
    RelationReport rep;
    rep.depth = depth;
    rep.s0_commutes = rep.s1_compression_is_mu = rep.range_projection_commutes = true;
    for (const BigInt& g : enumerate_gamma(depth)) {
        // S0 U e_g = e_{20 g} = U S0 e_g.
        if (4 * (5 * g) != 5 * (4 * g)) rep.s0_commutes = false;
        // S1* U S1 e_g: S1 -> 4g+1, U -> 20g+5, S1* strips (residue 1).
        const BigInt us1 = 5 * (4 * g + 1);
        const bool strips = residue_mod4(us1) == 1;
        if (!strips || (us1 - 1) / 4 != 5 * g + 1) rep.s1_compression_is_mu = false;
        // U S1S1* e_g vs S1S1* U e_g: membership of the index in 1 + 4Z is
        // preserved under multiplication by 5.
        const bool before = residue_mod4(g) == 1;
        const bool after = residue_mod4(5 * g) == 1;
        if (before != after) rep.range_projection_commutes = false;
    }
    return rep;
}

BlockReport block_structure_check(int depth, int levels) {
    BlockReport rep;
    rep.depth = depth;
    rep.levels = levels;
    rep.fixed_vector_ok = (5 * BigInt(0) == 0);
    rep.blocks_ok = true;
    const auto gammas = enumerate_gamma(depth);
    for (int k = 0; k <= levels; ++k) {
        const BigInt p4k = pow_int(4, static_cast<unsigned>(k));
        for (const BigInt& g : gammas) {
            const BigInt lhs = 5 * (p4k * (4 * g + 1));       // U S0^k S1 e_g
            const BigInt rhs = p4k * (4 * (5 * g + 1) + 1);   // S0^k S1 MU e_g
            if (lhs != rhs) rep.blocks_ok = false;
        }
    }
    return rep;
}

namespace {

int env_thread_cap() {
    if (const char* s = std::getenv("FRACTAL_SPECTRUM_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Deterministic column-parallel loop: workers claim whole columns; every
// column is written independently, so the result does not depend on the
// schedule.
void parallel_columns(Eigen::Index cols, const std::function<void(Eigen::Index)>& fn) {
    const int threads =
        static_cast<int>(std::min<Eigen::Index>(env_thread_cap(), cols));
    if (threads <= 1) {
        for (Eigen::Index c = 0; c < cols; ++c) fn(c);
        return;
    }
    std::atomic<Eigen::Index> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (Eigen::Index c = next.fetch_add(1); c < cols; c = next.fetch_add(1))
                fn(c);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

UMatrix u_matrix(int depth, const TransformConfig& cfg) {
    UMatrix um;
    um.depth = depth;
    const auto gammas = enumerate_gamma(depth);
    const Eigen::Index d = static_cast<Eigen::Index>(gammas.size());
    um.matrix.resize(d, d);

    std::vector<double> col_err(d, 0.0);
    parallel_columns(d, [&](Eigen::Index col) {
        const BigInt target = 5 * gammas[static_cast<std::size_t>(col)];
        double err = 0.0;
        for (Eigen::Index row = 0; row < d; ++row) {
            const MuHatValue mh =
                mu_hat_int(gammas[static_cast<std::size_t>(row)] - target, cfg);
            um.matrix(row, col) = mh.value;
            err = std::max(err, mh.error_bound);
        }
        col_err[static_cast<std::size_t>(col)] = err;
    });
    for (double e : col_err) um.max_entry_error = std::max(um.max_entry_error, e);

    um.min_column_norm_sq = 1.0;
    um.max_column_norm_sq = 0.0;
    double deficit = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        double colsum = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            Complex s = um.matrix.col(i).dot(um.matrix.col(j));
            if (i == j) {
                um.min_column_norm_sq = std::min(um.min_column_norm_sq, s.real());
                um.max_column_norm_sq = std::max(um.max_column_norm_sq, s.real());
                s -= 1.0;
            }
            colsum += std::abs(s);
        }
        deficit = std::max(deficit, colsum);
    }
    um.unitarity_deficit = deficit;
    return um;
}

} // namespace fspec
