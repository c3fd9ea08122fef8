#pragma once

#include <map>
#include <vector>

#include "fspec/boundary_measures.hpp"
#include "fspec/hilbert_vectors.hpp"

namespace fspec {

// Scalar spectral measures of the unitaries U and MU, handled through moment
// sequences (two finite Borel measures on the circle agree iff all moments
// agree), with c_{-k} = conj(c_k) so only k >= 0 is stored.
//
// u_moments / mu_moments evaluate the index-map closed forms
//
//     c_k = sum conj(a_{g'}) a_g mu_hat(g' - 5^k g [- (5^k-1)/4]),
//
// i.e. c_k = <v, A_k v> where A_k is the isometry relabeling e_g to
// e_{5^k g} (resp. e_{5^k g + (5^k-1)/4}). Since {e_{5^k g}} is again an
// orthonormal family, each A_k is an isometry and |c_k| <= c_0 holds; and
// the one-step / iterated / equal-measure identities below hold exactly for
// these functionals. A_k coincides with U^k as long as every intermediate
// index stays inside the spectrum (always for |k| <= 1, and e.g. for e_1 up
// to k = 3), but not in general: U^2 e_5 = U e_25 expands over the whole
// basis because 25 is not a spectrum point, so <e_5, U^2 e_5> = conj of
// mu_hat(6) while the closed form gives mu_hat(-120). In particular the
// closed-form sequence need not be positive definite for mixed vectors.
// u_moments_projected computes the true <v, U^k v> by iterated projection
// with a certified (but slowly decaying) error bound; see its note.

struct MomentSequence {
    int kmax = 0;
    std::vector<Complex> c;      // c[k], k = 0..kmax
    std::vector<double> err;     // certified bound per entry

    Complex moment(int k) const {
        const int a = k < 0 ? -k : k;
        return k < 0 ? std::conj(c[std::size_t(a)]) : c[std::size_t(a)];
    }
    double error_at(int k) const { return err[std::size_t(k < 0 ? -k : k)]; }
};

// Moments of m^U_v: c_k = sum conj(a_{g'}) a_g mu_hat(g' - 5^k g).
// Requires spectrum support.
MomentSequence u_moments(const FreqVector& v, int kmax,
                         const TransformConfig& cfg = {});

// Moments of m^{MU}_w: c_k = sum conj(a_{g'}) a_g mu_hat(g' - 5^k g - (5^k-1)/4).
MomentSequence mu_moments(const FreqVector& w, int kmax,
                          const TransformConfig& cfg = {});

// True moments <v, U^k v> by iterated projection: apply the exact index map
// on spectrum support, re-expand over Gamma_depth, and accumulate the escaped
// mass into a certified per-entry bound (err[k] <= sum of step escapes;
// escapes shrink like the square root of the expansion tail, so accuracy is
// limited -- around 1e-3 at depth 12 for low-lying vectors). This is the
// honest reference the closed forms are compared against.
MomentSequence u_moments_projected(const FreqVector& v, int kmax, int depth,
                                   const TransformConfig& cfg = {});

// True <w, (MU)^k w> = <S1 w, U^k S1 w> (S1 is an exact index map).
MomentSequence mu_moments_projected(const FreqVector& w, int kmax, int depth,
                                    const TransformConfig& cfg = {});

// One-step splitting m^U_v = m^U_{S0* v} + m^{MU}_{S1* v} for spectrum-
// supported v (both adjoints are exact index strips). residual is the max
// moment deviation over |k| <= kmax.
struct OneStepDecomposition {
    MomentSequence whole;  // m^U_v
    MomentSequence left;   // m^U_{S0* v}
    MomentSequence right;  // m^{MU}_{S1* v}
    double residual = 0.0;
};

OneStepDecomposition decompose_once(const FreqVector& v, int kmax,
                                    const TransformConfig& cfg = {});

// Full expansion m^U_v = |<v,e_0>|^2 delta_1 + sum_k m^{MU}_{S1* S0*^k v}.
// For spectrum-supported v the sum terminates at the maximal word length.
struct MeasureDecomposition {
    double dirac_weight = 0.0;             // |<v, e_0>|^2
    std::vector<double> level_weights;     // |P_k v|^2 = |S1* S0*^k v|^2
    std::vector<MomentSequence> components; // normalized per level (zero level -> zeros)
    double residual = 0.0;                 // max moment deviation
    double weight_sum = 0.0;               // dirac + sum of level weights
    double norm_sq = 0.0;                  // |v|^2 for comparison
    // Max |level weight - boundary cylinder mass of (0^k 1)|; identically 0.
    double weight_cylinder_max_diff = 0.0;
};

MeasureDecomposition iterate_decomposition(const FreqVector& v, int kmax,
                                           const TransformConfig& cfg = {});

// Trigonometric polynomial phi(z) = sum_{|m| <= degree} a_m z^m on the circle.
class TrigPoly {
public:
    TrigPoly() = default;

    static TrigPoly one() {
        TrigPoly p;
        p.coef_[0] = 1.0;
        return p;
    }

    void set(int m, Complex a) {
        if (a == Complex{0.0, 0.0}) coef_.erase(m); else coef_[m] = a;
    }
    Complex coefficient(int m) const {
        auto it = coef_.find(m);
        return it == coef_.end() ? Complex{0.0, 0.0} : it->second;
    }
    const std::map<int, Complex>& coefficients() const { return coef_; }
    int degree() const;

private:
    std::map<int, Complex> coef_;
};

// Integral of phi against the measure given by a moment sequence.
Complex integrate(const TrigPoly& phi, const MomentSequence& ms);

// Fejer means f_N(theta) = sum_{|k|<=N} (1 - |k|/(N+1)) c_k e^{-ik theta} on a
// uniform grid; nonnegative (up to certified error) for positive measures.
struct DensityEstimate {
    int degree = 0;
    std::vector<double> theta;
    std::vector<double> values;
    double min_value = 0.0;
};

// Throws degree_too_large_error when degree exceeds ms.kmax.
DensityEstimate fejer_density(const MomentSequence& ms, int degree, int gridsize);

// Pointwise ratio of Fejer densities; entries where the denominator does not
// exceed the floor are flagged invalid (ratio NaN). A nonpositive `floor`
// selects the default 1e-6 * max denominator density.
struct RnEstimate {
    std::vector<double> theta;
    std::vector<double> ratio;
    std::vector<std::uint8_t> valid;
    double floor_used = 0.0;
    std::size_t defined_count = 0;
};

RnEstimate rn_estimate(const MomentSequence& numerator,
                       const MomentSequence& denominator, int degree,
                       int gridsize, double floor = 0.0);

// Least-squares projection of w onto span{ U^m v : |m| <= degree } through
// the Toeplitz Gram matrix of u_moments and closed-form cross products.
struct CyclicProjection {
    double projection_norm = 0.0;
    double residual_norm = 0.0;
    int effective_rank = 0;
    int dimension = 0;
    bool ill_conditioned = false; // rank-deficient at the pseudo-inverse cut
};

CyclicProjection cyclic_project(const FreqVector& w, const FreqVector& v,
                                int degree, const TransformConfig& cfg = {},
                                double sv_rel_threshold = 1e-10);

// max_{|m| <= kmax} |c_m(m^U_{e_1}) - c_m(m^U_{e_{4^k}})|; the scaling
// reduction makes the two moment sequences identical, so this is exactly 0.
struct EqualMeasureReport {
    int k = 0;
    int kmax = 0;
    double max_abs_diff = 0.0;
};

EqualMeasureReport equal_measure_check(int k, int kmax,
                                       const TransformConfig& cfg = {});

// Where the spectral measure of a plain exponential e_n lives: n even gives
// e_n = S0 h with m^U_{e_n} = m^U_h, n odd gives e_n = S1 h' with
// m^U_{e_n} = m^{MU}_{h'}. The reduced vector is exact for residues 0 and 1
// mod 4 and a truncated expansion (with deficit) for residues 2 and 3.
struct ExponentialClass {
    enum class Kind { even_u, odd_mu };
    Kind kind = Kind::even_u;
    FreqVector reduced;
    bool exact = true;
    double deficit = 0.0; // 1 - |reduced|^2
};

ExponentialClass exponential_measure_class(const BigInt& n, int depth,
                                           const TransformConfig& cfg = {});

// Both routes to the integral of phi against m^{MU}_{S1* S0*^k v}:
// through mu_moments of the stripped vector, and through the closed form
// <P_k v, phi(U) v>. Reports the absolute discrepancy.
struct TransitivityReport {
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double discrepancy = 0.0;
};

TransitivityReport transitivity_check(const FreqVector& v, int k,
                                      const TrigPoly& phi,
                                      const TransformConfig& cfg = {});

} // namespace fspec
