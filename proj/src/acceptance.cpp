#include "fspec/acceptance.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "fspec/boundary_measures.hpp"
#include "fspec/cantor_transform.hpp"
#include "fspec/cuntz_rep.hpp"
#include "fspec/hilbert_vectors.hpp"
#include "fspec/operator_fractal.hpp"
#include "fspec/sampling.hpp"
#include "fspec/spectral_measures.hpp"
#include "fspec/spectrum_index.hpp"

namespace fspec {
namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

// Deterministic vector batch shared by criteria 5, 6 and 12.
std::vector<FreqVector> unit_vector_batch(int depth, int count,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> support(1, 1 << depth);
    std::vector<FreqVector> out;
    out.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i)
        out.push_back(random_gamma_vector(depth, support(rng), rng));
    return out;
}

CriterionResult orthonormality(const AcceptanceConfig&) {
    CriterionResult r{1, "exponential basis orthonormality on Gamma_6", false, ""};
    const TransformConfig cfg{30, 1e-12};
    const auto gammas = enumerate_gamma(6);
    double max_offdiag = 0.0;
    bool diagonal_exact = true;
    std::size_t pairs = 0;
    for (const BigInt& g : gammas) {
        for (const BigInt& x : gammas) {
            const MuHatValue mh = mu_hat_int(g - x, cfg);
            if (g == x) {
                if (mh.value != Complex{1.0, 0.0} || mh.error_bound != 0.0)
                    diagonal_exact = false;
            } else {
                ++pairs;
                max_offdiag = std::max(max_offdiag,
                                       std::abs(mh.value) + mh.error_bound);
            }
        }
    }
    r.passed = diagonal_exact && max_offdiag <= 1e-10;
    r.detail = "max |mu_hat(gamma - xi)| = " + fmt(max_offdiag) + " over " +
               std::to_string(pairs) + " pairs; diagonal exact: " +
               (diagonal_exact ? "yes" : "no");
    return r;
}

CriterionResult cuntz_relations(const AcceptanceConfig&) {
    CriterionResult r{2, "Cuntz relations exact on Gamma_8", false, ""};
    const CuntzCheckReport rep = cuntz_identity_check(8);
    r.passed = rep.all_pass();
    r.detail = std::string("isometries: ") +
               (rep.s0_isometry && rep.s1_isometry ? "ok" : "FAIL") +
               ", orthogonal ranges: " + (rep.cross_terms_vanish ? "ok" : "FAIL") +
               ", completeness: " +
               (rep.range_projections_complete ? "ok" : "FAIL") +
               " (integer arithmetic, zero tolerance)";
    return r;
}

CriterionResult scaling_relations(const AcceptanceConfig&) {
    CriterionResult r{3, "scaling relations and block structure exact on Gamma_8",
                      false, ""};
    const RelationReport rel = relation_checks(8);
    const BlockReport blk = block_structure_check(8, 6);
    r.passed = rel.all_pass() && blk.all_pass();
    r.detail = std::string("S0 U = U S0: ") + (rel.s0_commutes ? "ok" : "FAIL") +
               ", S1* U S1 = MU: " + (rel.s1_compression_is_mu ? "ok" : "FAIL") +
               ", U S0^k S1 = S0^k S1 MU (k <= 6): " +
               (blk.blocks_ok ? "ok" : "FAIL") +
               ", U e_0 = e_0: " + (blk.fixed_vector_ok ? "ok" : "FAIL");
    return r;
}

CriterionResult wold_limits(const AcceptanceConfig& cfg) {
    CriterionResult r{4, "shift-part decay: |S0*^n v| nonincreasing with exact limit",
                      false, ""};
    std::mt19937_64 rng(cfg.seed + 4);
    std::uniform_int_distribution<int> support(1, 256);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const FreqVector v = random_gamma_vector(8, support(rng), rng);
        const auto seq = wold_sequence(v, 12);
        for (std::size_t n = 1; n < seq.size(); ++n)
            if (seq[n] > seq[n - 1]) ok = false;
        const double limit = std::sqrt(std::norm(v.coefficient(0)));
        for (std::size_t n = 9; n < seq.size(); ++n)
            if (seq[n] != limit) ok = false;
    }
    r.passed = ok;
    r.detail = ok ? "100 random Gamma_8 vectors: nonincreasing, exact limit from n = 9"
                  : "monotonicity or exact limit violated";
    return r;
}

CriterionResult one_step_decomposition(const AcceptanceConfig& cfg) {
    CriterionResult r{5, "one-step measure splitting m^U_v = m^U_{S0*v} + m^{MU}_{S1*v}",
                      false, ""};
    double worst = 0.0;
    for (const FreqVector& v : unit_vector_batch(6, 50, cfg.seed + 5)) {
        const OneStepDecomposition d = decompose_once(v, cfg.kmax);
        worst = std::max(worst, d.residual);
    }
    r.passed = worst <= 1e-9;
    r.detail = "max moment residual " + fmt(worst) + " over 50 vectors, k <= " +
               std::to_string(cfg.kmax) + " (tol 1e-9)";
    return r;
}

CriterionResult iterated_decomposition(const AcceptanceConfig& cfg) {
    CriterionResult r{6, "iterated expansion: Dirac weight + MU components, convex weights",
                      false, ""};
    double worst_residual = 0.0, worst_convex = 0.0, worst_cyl = 0.0;
    for (const FreqVector& v : unit_vector_batch(6, 50, cfg.seed + 6)) {
        const MeasureDecomposition d = iterate_decomposition(v, cfg.kmax);
        worst_residual = std::max(worst_residual, d.residual);
        worst_convex = std::max(worst_convex, std::abs(d.weight_sum - 1.0));
        worst_cyl = std::max(worst_cyl, d.weight_cylinder_max_diff);
    }
    r.passed = worst_residual <= 1e-9 && worst_convex <= 1e-12 && worst_cyl == 0.0;
    r.detail = "residual " + fmt(worst_residual) + " (tol 1e-9), |weights - 1| " +
               fmt(worst_convex) + " (tol 1e-12), weight vs cylinder mass diff " +
               fmt(worst_cyl) + " (exact)";
    return r;
}

CriterionResult equal_measures(const AcceptanceConfig& cfg) {
    CriterionResult r{7, "m^U_{e_1} = m^U_{e_{4^k}} for k = 1, 2, 3", false, ""};
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k)
        worst = std::max(worst, equal_measure_check(k, cfg.kmax).max_abs_diff);
    r.passed = worst <= 1e-10;
    r.detail = "max moment difference " + fmt(worst) + " (tol 1e-10)";
    return r;
}

CriterionResult cyclic_orthogonality(const AcceptanceConfig&) {
    CriterionResult r{8, "e_4 is orthogonal to the U-cyclic span of e_1", false, ""};
    const CyclicProjection p =
        cyclic_project(FreqVector::basis(4), FreqVector::basis(1), 16);
    r.passed = p.projection_norm <= 1e-10;
    r.detail = "projection norm " + fmt(p.projection_norm) +
               " onto span{U^m e_1 : |m| <= 16} (tol 1e-10); residual " +
               fmt(p.residual_norm);
    return r;
}

CriterionResult boundary_paths(const AcceptanceConfig&) {
    CriterionResult r{9, "boundary measures: atomic path vs escaping path", false, ""};
    // e_0 concentrates on the all-zeros word: every cylinder mass along the
    // zeros path is exactly 1.
    const auto atomic = atom_scan(FreqVector::basis(0), GammaWord{}, 8);
    bool atomic_ok = true;
    for (double m : atomic)
        if (m != 1.0) atomic_ok = false;

    // Depth-6 truncation of e_2 scanned along the alternating word
    // 0,1,0,1,...: the path is not eventually zero, so it carries no atom
    // and its cylinder masses must decay. (Along the all-zeros path the
    // masses converge to |c_v(0)|^2 ~ 0.48 instead: the induced measure has
    // an atom at every eventually-zero word.)
    const FreqVector e2trunc =
        normalize(onb_coeffs(FreqVector::basis(2), 6).to_vector());
    GammaWord alternating;
    for (int i = 0; i < 6; ++i) alternating = alternating.append(i % 2);
    const auto masses = atom_scan(e2trunc, alternating, 6);
    // masses[0] = masses[1] = 1 exactly (the support is even), so the strict
    // decrease is asserted from the first binary split on.
    bool strict = true;
    for (std::size_t d = 1; d + 1 < masses.size(); ++d)
        if (!(masses[d] > masses[d + 1])) strict = false;
    const double ratio = masses.back() / masses[1];
    r.passed = atomic_ok && strict && ratio < 0.3;
    std::ostringstream os;
    os << "zeros path for e_0 constant 1: " << (atomic_ok ? "yes" : "NO")
       << "; alternating-path masses for truncated e_2 strictly decreasing: "
       << (strict ? "yes" : "NO") << ", final/initial = " << fmt(ratio)
       << " (threshold 0.3)";
    r.detail = os.str();
    return r;
}

CriterionResult block_reconstruction(const AcceptanceConfig& cfg) {
    CriterionResult r{10, "2x2 block maps reconstruct exactly; commutant identity for U",
                      false, ""};
    std::mt19937_64 rng(cfg.seed + 10);
    bool exact = true;
    for (int trial = 0; trial < 20; ++trial) {
        const TruncOperator X = random_trunc_operator(3, rng);
        const TruncOperator back = beta2(alpha2(X));
        if ((back.matrix() - X.matrix()).cwiseAbs().maxCoeff() != 0.0) exact = false;
    }
    const double id1 = commutant_identity_residual(u_matrix(6).as_trunc_operator());
    r.passed = exact && id1 <= 1e-8;
    r.detail = std::string("beta2(alpha2(X)) == X on 20 random operators: ") +
               (exact ? "exact" : "FAIL") + "; X = S0 X S0* + S1 S1* X S1 S1* for " +
               "truncated U: residual " + fmt(id1) + " (tol 1e-8)";
    return r;
}

CriterionResult deficit_decay(const AcceptanceConfig&) {
    CriterionResult r{11, "truncated-U unitarity deficit decays across depths 4, 5, 6",
                      false, ""};
    const UMatrix u4 = u_matrix(4);
    const UMatrix u5 = u_matrix(5);
    const UMatrix u6 = u_matrix(6);
    r.passed = u4.unitarity_deficit > u5.unitarity_deficit &&
               u5.unitarity_deficit > u6.unitarity_deficit;
    std::ostringstream os;
    os << "deficits " << fmt(u4.unitarity_deficit) << " -> "
       << fmt(u5.unitarity_deficit) << " -> " << fmt(u6.unitarity_deficit);
    if (!r.passed)
        os << "; EXPECTED failure: the depth-L matrix is an exact sub-block of "
              "the depth-(L+1) matrix (rows/columns at digit-0 residue), so the "
              "max-column-sum deficit of I - A*A is provably nondecreasing; the "
              "uncaptured column mass is self-similar, not vanishing";
    r.detail = os.str();
    return r;
}

CriterionResult density_positivity(const AcceptanceConfig& cfg) {
    CriterionResult r{12, "Fejer densities nonnegative; RN ratio of equal measures near 1",
                      false, ""};
    double min_density = 0.0;
    for (const FreqVector& v : unit_vector_batch(6, 50, cfg.seed + 5)) {
        const OneStepDecomposition d = decompose_once(v, cfg.kmax);
        for (const MomentSequence* ms : {&d.whole, &d.left, &d.right}) {
            const DensityEstimate de = fejer_density(*ms, cfg.kmax, cfg.gridsize);
            min_density = std::min(min_density, de.min_value);
        }
        const MeasureDecomposition md = iterate_decomposition(v, cfg.kmax);
        for (const MomentSequence& comp : md.components) {
            const DensityEstimate de = fejer_density(comp, cfg.kmax, cfg.gridsize);
            min_density = std::min(min_density, de.min_value);
        }
    }
    for (int k = 1; k <= 3; ++k) {
        const MomentSequence ms = u_moments(
            FreqVector::basis(pow_int(4, static_cast<unsigned>(k))), cfg.kmax);
        const DensityEstimate de = fejer_density(ms, cfg.kmax, cfg.gridsize);
        min_density = std::min(min_density, de.min_value);
    }

    const MomentSequence num = u_moments(FreqVector::basis(4), cfg.kmax);
    const MomentSequence den = u_moments(FreqVector::basis(1), cfg.kmax);
    const RnEstimate rn = rn_estimate(num, den, cfg.kmax, cfg.gridsize);
    double rn_lo = 1.0, rn_hi = 1.0;
    for (std::size_t j = 0; j < rn.ratio.size(); ++j) {
        if (!rn.valid[j]) continue;
        rn_lo = std::min(rn_lo, rn.ratio[j]);
        rn_hi = std::max(rn_hi, rn.ratio[j]);
    }
    r.passed = min_density >= -1e-8 && rn_lo >= 0.9 && rn_hi <= 1.1 &&
               rn.defined_count > 0;
    r.detail = "min Fejer value " + fmt(min_density) +
               " (tol -1e-8); RN ratio in [" + fmt(rn_lo) + ", " + fmt(rn_hi) +
               "] on " + std::to_string(rn.defined_count) + " grid points";
    if (min_density < -1e-8)
        r.detail +=
            "; EXPECTED failure: the index-map closed forms evaluate <v, A_k v> "
            "for the relabeling isometries A_k (e_g -> e_{5^k g}), which satisfy "
            "the decomposition identities exactly but are not the powers of one "
            "unitary -- U^k e_g leaves the spectrum for k >= 2 (U^2 e_5 = U e_25 "
            "expands over the whole basis), so the sequence need not be positive "
            "definite and its Fejer means can dip negative; true moments "
            "(u_moments_projected) are positive but carry slowly-decaying "
            "certified error far above these tolerances";
    return r;
}

} // namespace

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
    try {
        switch (id) {
            case 1: return orthonormality(cfg);
            case 2: return cuntz_relations(cfg);
            case 3: return scaling_relations(cfg);
            case 4: return wold_limits(cfg);
            case 5: return one_step_decomposition(cfg);
            case 6: return iterated_decomposition(cfg);
            case 7: return equal_measures(cfg);
            case 8: return cyclic_orthogonality(cfg);
            case 9: return boundary_paths(cfg);
            case 10: return block_reconstruction(cfg);
            case 11: return deficit_decay(cfg);
            case 12: return density_positivity(cfg);
            default:
                return {id, "unknown criterion", false, "no such criterion"};
        }
    } catch (const std::exception& e) {
        return {id, "criterion " + std::to_string(id), false,
                std::string("exception: ") + e.what()};
    }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    std::vector<CriterionResult> out;
    out.reserve(12);
    for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id, cfg));
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << (r.id < 10 ? " " : "")
       << r.id << ": " << r.name << " -- " << r.detail;
    return os.str();
}

} // namespace fspec
