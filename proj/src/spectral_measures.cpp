#include "fspec/spectral_measures.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "fspec/cuntz_rep.hpp"
#include "fspec/operator_fractal.hpp"

namespace fspec {
namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// c_k = sum_{g',g} conj(a_{g'}) a_g mu_hat(g' - scale*g - offset) for
// scale = 5^k and offset 0 (U) or (5^k - 1)/4 (MU).
MomentSequence moments_impl(const FreqVector& v, int kmax, bool with_offset,
                            const TransformConfig& cfg, const char* who) {
    v.require_gamma_support(who);
    MomentSequence ms;
    ms.kmax = kmax;
    ms.c.resize(std::size_t(kmax) + 1);
    ms.err.resize(std::size_t(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        const BigInt scale = pow5(static_cast<unsigned>(k));
        const BigInt offset = with_offset ? mu_offset(static_cast<unsigned>(k)) : BigInt(0);
        Complex sum{0.0, 0.0};
        double err = 0.0;
        for (const auto& [gp, ap] : v.entries()) {
            for (const auto& [g, a] : v.entries()) {
                const MuHatValue mh = mu_hat_int(gp - scale * g - offset, cfg);
                sum += std::conj(ap) * a * mh.value;
                err += std::abs(ap) * std::abs(a) * mh.error_bound;
            }
        }
        ms.c[std::size_t(k)] = sum;
        ms.err[std::size_t(k)] = err;
    }
    return ms;
}

// Exact digit strips for spectrum-supported vectors.
FreqVector strip_s0(const FreqVector& v) {
    FreqVector out;
    for (const auto& [n, a] : v.entries())
        if (n % 4 == 0) out.add_term(n / 4, a);
    return out;
}

FreqVector strip_s1(const FreqVector& v) {
    FreqVector out;
    for (const auto& [n, a] : v.entries())
        if (n % 4 == 1) out.add_term((n - 1) / 4, a);
    return out;
}

} // namespace

MomentSequence u_moments(const FreqVector& v, int kmax, const TransformConfig& cfg) {
    return moments_impl(v, kmax, /*with_offset=*/false, cfg, "u_moments");
}

MomentSequence mu_moments(const FreqVector& w, int kmax, const TransformConfig& cfg) {
    return moments_impl(w, kmax, /*with_offset=*/true, cfg, "mu_moments");
}

MomentSequence u_moments_projected(const FreqVector& v, int kmax, int depth,
                                   const TransformConfig& cfg) {
    v.require_gamma_support("u_moments_projected");
    const auto gammas = enumerate_gamma(depth);

    MomentSequence ms;
    ms.kmax = kmax;
    ms.c.resize(std::size_t(kmax) + 1);
    ms.err.resize(std::size_t(kmax) + 1);
    ms.c[0] = Complex{v.coeff_norm_sq(), 0.0};
    ms.err[0] = 0.0;

    const double vnorm = std::sqrt(v.coeff_norm_sq());
    FreqVector w = v;
    double escape_sum = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        const FreqVector img = u_apply(w); // exact: the 5*Gamma family is orthonormal
        const double img_norm_sq = w.coeff_norm_sq();
        FreqVector next;
        double captured = 0.0;
        double float_err = 0.0;
        for (const BigInt& gamma : gammas) {
            Complex c{0.0, 0.0};
            double e = 0.0;
            for (const auto& [n, a] : img.entries()) {
                const MuHatValue mh = mu_hat_int(gamma - n, cfg);
                c += a * mh.value;
                e += std::abs(a) * mh.error_bound;
            }
            if (c != Complex{0.0, 0.0}) next.add_term(gamma, c);
            captured += std::norm(c);
            float_err += e * e;
        }
        escape_sum += std::sqrt(std::max(0.0, img_norm_sq - captured)) +
                      std::sqrt(float_err);
        w = std::move(next);
        ms.c[std::size_t(k)] = inner_with_bound(v, w, cfg).value;
        ms.err[std::size_t(k)] = escape_sum * vnorm;
    }
    return ms;
}

MomentSequence mu_moments_projected(const FreqVector& w, int kmax, int depth,
                                    const TransformConfig& cfg) {
    return u_moments_projected(s1_apply(w), kmax, depth, cfg);
}

OneStepDecomposition decompose_once(const FreqVector& v, int kmax,
                                    const TransformConfig& cfg) {
    v.require_gamma_support("decompose_once");
    OneStepDecomposition out;
    out.whole = u_moments(v, kmax, cfg);
    out.left = u_moments(strip_s0(v), kmax, cfg);
    out.right = mu_moments(strip_s1(v), kmax, cfg);
    for (int k = 0; k <= kmax; ++k) {
        const double d = std::abs(out.whole.c[std::size_t(k)] -
                                  out.left.c[std::size_t(k)] -
                                  out.right.c[std::size_t(k)]);
        out.residual = std::max(out.residual, d);
    }
    return out;
}

MeasureDecomposition iterate_decomposition(const FreqVector& v, int kmax,
                                           const TransformConfig& cfg) {
    v.require_gamma_support("iterate_decomposition");
    MeasureDecomposition out;
    out.norm_sq = v.coeff_norm_sq();
    out.dirac_weight = std::norm(v.coefficient(0));

    const std::size_t maxlen = v.max_word_length();
    const int levels = maxlen == 0 ? 0 : static_cast<int>(maxlen);

    std::vector<MomentSequence> raw; // unnormalized component moments
    FreqVector tail = v;             // S0*^k v
    for (int k = 0; k < levels; ++k) {
        const FreqVector wk = strip_s1(tail);
        double weight = 0.0;
        for (const auto& [n, a] : wk.entries()) weight += std::norm(a);
        const double cyl =
            cylinder_mass(v, GammaWord::zeros(std::size_t(k)).append(1));
        out.weight_cylinder_max_diff =
            std::max(out.weight_cylinder_max_diff, std::abs(weight - cyl));

        MomentSequence comp = mu_moments(wk, kmax, cfg);
        raw.push_back(comp);
        if (weight > 0.0) {
            for (auto& c : comp.c) c /= weight;
            for (auto& e : comp.err) e /= weight;
        }
        out.level_weights.push_back(weight);
        out.components.push_back(std::move(comp));
        tail = strip_s0(tail);
    }

    out.weight_sum = out.dirac_weight;
    for (double w : out.level_weights) out.weight_sum += w;

    const MomentSequence whole = u_moments(v, kmax, cfg);
    for (int k = 0; k <= kmax; ++k) {
        Complex rhs{out.dirac_weight, 0.0}; // delta_1 has every moment 1
        for (const auto& comp : raw) rhs += comp.c[std::size_t(k)];
        out.residual =
            std::max(out.residual, std::abs(whole.c[std::size_t(k)] - rhs));
    }
    return out;
}

int TrigPoly::degree() const {
    int d = 0;
    for (const auto& [m, a] : coef_) d = std::max(d, m < 0 ? -m : m);
    return d;
}

Complex integrate(const TrigPoly& phi, const MomentSequence& ms) {
    if (phi.degree() > ms.kmax)
        throw degree_too_large_error("trig polynomial degree exceeds moment range");
    Complex s{0.0, 0.0};
    for (const auto& [m, a] : phi.coefficients()) s += a * ms.moment(m);
    return s;
}

DensityEstimate fejer_density(const MomentSequence& ms, int degree, int gridsize) {
    if (degree > ms.kmax)
        throw degree_too_large_error("Fejer degree " + std::to_string(degree) +
                                     " exceeds kmax " + std::to_string(ms.kmax));
    DensityEstimate de;
    de.degree = degree;
    de.theta.resize(std::size_t(gridsize));
    de.values.resize(std::size_t(gridsize));
    de.min_value = std::numeric_limits<double>::infinity();
    for (int j = 0; j < gridsize; ++j) {
        const double th = kTwoPi * j / gridsize;
        double val = ms.c[0].real();
        for (int k = 1; k <= degree; ++k) {
            const double w = 1.0 - double(k) / double(degree + 1);
            const Complex e{std::cos(k * th), -std::sin(k * th)};
            val += 2.0 * w * (ms.c[std::size_t(k)] * e).real();
        }
        de.theta[std::size_t(j)] = th;
        de.values[std::size_t(j)] = val;
        de.min_value = std::min(de.min_value, val);
    }
    return de;
}

RnEstimate rn_estimate(const MomentSequence& numerator,
                       const MomentSequence& denominator, int degree,
                       int gridsize, double floor) {
    const DensityEstimate num = fejer_density(numerator, degree, gridsize);
    const DensityEstimate den = fejer_density(denominator, degree, gridsize);
    RnEstimate rn;
    rn.theta = num.theta;
    rn.ratio.resize(std::size_t(gridsize));
    rn.valid.resize(std::size_t(gridsize));
    double dmax = 0.0;
    for (double d : den.values) dmax = std::max(dmax, d);
    rn.floor_used = floor > 0.0 ? floor : 1e-6 * dmax;
    for (int j = 0; j < gridsize; ++j) {
        const bool ok = den.values[std::size_t(j)] > rn.floor_used;
        rn.valid[std::size_t(j)] = ok ? 1 : 0;
        rn.ratio[std::size_t(j)] =
            ok ? num.values[std::size_t(j)] / den.values[std::size_t(j)]
               : std::numeric_limits<double>::quiet_NaN();
        if (ok) ++rn.defined_count;
    }
    return rn;
}

CyclicProjection cyclic_project(const FreqVector& w, const FreqVector& v,
                                int degree, const TransformConfig& cfg,
                                double sv_rel_threshold) {
    w.require_gamma_support("cyclic_project");
    v.require_gamma_support("cyclic_project");

    const int M = degree;
    const int dim = 2 * M + 1;
    const MomentSequence ms = u_moments(v, 2 * M, cfg);

    Eigen::MatrixXcd G(dim, dim);
    for (int j = -M; j <= M; ++j)
        for (int k = -M; k <= M; ++k)
            G(j + M, k + M) = ms.moment(k - j); // <U^j v, U^k v> = c_{k-j}

    Eigen::VectorXcd b(dim);
    for (int j = -M; j <= M; ++j) {
        Complex s{0.0, 0.0};
        const BigInt scale = pow5(static_cast<unsigned>(j < 0 ? -j : j));
        for (const auto& [g, a] : v.entries()) {
            for (const auto& [x, bx] : w.entries()) {
                // j >= 0: <U^j v, w> uses mu_hat(5^j g - x);
                // j <  0: <U^j v, w> = <v, U^{-j} w> uses mu_hat(g - 5^{-j} x).
                const BigInt arg = j >= 0 ? BigInt(scale * g - x) : BigInt(g - scale * x);
                s += std::conj(a) * bx * mu_hat_int(arg, cfg).value;
            }
        }
        b(j + M) = s;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(sv_rel_threshold);
    const Eigen::VectorXcd x = svd.solve(b);

    CyclicProjection out;
    out.dimension = dim;
    out.effective_rank = static_cast<int>(svd.rank());
    out.ill_conditioned = out.effective_rank < dim;
    const double proj_sq = std::max(0.0, x.dot(b).real());
    out.projection_norm = std::sqrt(proj_sq);
    const double w_sq = w.coeff_norm_sq();
    out.residual_norm = std::sqrt(std::max(0.0, w_sq - proj_sq));
    return out;
}

EqualMeasureReport equal_measure_check(int k, int kmax, const TransformConfig& cfg) {
    EqualMeasureReport rep;
    rep.k = k;
    rep.kmax = kmax;
    const MomentSequence a = u_moments(FreqVector::basis(1), kmax, cfg);
    const MomentSequence b =
        u_moments(FreqVector::basis(pow_int(4, static_cast<unsigned>(k))), kmax, cfg);
    for (int m = 0; m <= kmax; ++m)
        rep.max_abs_diff = std::max(
            rep.max_abs_diff, std::abs(a.c[std::size_t(m)] - b.c[std::size_t(m)]));
    return rep;
}

ExponentialClass exponential_measure_class(const BigInt& n, int depth,
                                           const TransformConfig& cfg) {
    ExponentialClass out;
    const FreqVector en = FreqVector::basis(n);
    if (residue_mod4(n) % 2 == 0) {
        out.kind = ExponentialClass::Kind::even_u;
        const StripResult h = s0_adjoint(en, depth, cfg); // e_n = S0 h
        out.reduced = h.vec;
        out.exact = h.exact;
    } else {
        out.kind = ExponentialClass::Kind::odd_mu;
        const StripResult h = s1_adjoint(en, depth, cfg); // e_n = S1 h
        out.reduced = h.vec;
        out.exact = h.exact;
    }
    out.deficit = 1.0 - out.reduced.coeff_norm_sq();
    return out;
}

TransitivityReport transitivity_check(const FreqVector& v, int k,
                                      const TrigPoly& phi,
                                      const TransformConfig& cfg) {
    v.require_gamma_support("transitivity_check");
    TransitivityReport rep;

    // Left side: integrate phi against m^{MU} of the stripped vector.
    FreqVector tail = v;
    for (int i = 0; i < k; ++i) tail = strip_s0(tail);
    const FreqVector wk = strip_s1(tail);
    const MomentSequence comp = mu_moments(wk, phi.degree(), cfg);
    rep.lhs = integrate(phi, comp);

    // Right side: <P_k v, phi(U) v> in closed form.
    const FreqVector pkv = p_k_project(v, k);
    Complex rhs{0.0, 0.0};
    for (const auto& [m, am] : phi.coefficients()) {
        const BigInt scale = pow5(static_cast<unsigned>(m < 0 ? -m : m));
        Complex s{0.0, 0.0};
        for (const auto& [gp, ap] : pkv.entries()) {
            for (const auto& [g, a] : v.entries()) {
                // m >= 0: <P_k v, U^m v> uses mu_hat(g' - 5^m g);
                // m <  0: <P_k v, U^m v> = <U^{-m} P_k v, v> uses
                //         mu_hat(5^{-m} g' - g).
                const BigInt arg =
                    m >= 0 ? BigInt(gp - scale * g) : BigInt(scale * gp - g);
                s += std::conj(ap) * a * mu_hat_int(arg, cfg).value;
            }
        }
        rhs += am * s;
    }
    rep.rhs = rhs;
    rep.discrepancy = std::abs(rep.lhs - rep.rhs);
    return rep;
}

} // namespace fspec
