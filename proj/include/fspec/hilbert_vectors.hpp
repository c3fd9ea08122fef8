#pragma once

#include <complex>
#include <map>

#include "fspec/bigint.hpp"
#include "fspec/cantor_transform.hpp"
#include "fspec/errors.hpp"

namespace fspec {

using Complex = std::complex<double>;

// A finite combination sum_n a_n e_n of exponentials e_n(t) = exp(2 pi i n t),
// n ranging over (arbitrary-precision) integers. Canonical form: exact-zero
// amplitudes are never stored. The map ordering fixes every summation order,
// which keeps results deterministic and makes several identities bit-exact.
class FreqVector {
public:
    FreqVector() = default;

    static FreqVector basis(const BigInt& n) {
        FreqVector f;
        f.entries_.emplace(n, Complex{1.0, 0.0});
        return f;
    }

    // Accumulates a term; removes the entry if the amplitude becomes 0.
    void add_term(const BigInt& n, Complex a);

    const std::map<BigInt, Complex>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t support_size() const noexcept { return entries_.size(); }
    Complex coefficient(const BigInt& n) const;

    bool support_in_gamma() const;
    void require_gamma_support(const char* who) const;

    // Longest base-4 digit string over the support (0 for the zero vector and
    // for v = c e_0). Requires spectrum support.
    std::size_t max_word_length() const;

    // sum |a_n|^2 in ascending-frequency order. Equals the squared L2 norm
    // when the support lies in the spectrum (Parseval).
    double coeff_norm_sq() const;

    FreqVector& operator+=(const FreqVector& g);
    FreqVector& operator-=(const FreqVector& g);
    FreqVector& operator*=(Complex c);

    friend FreqVector operator+(FreqVector f, const FreqVector& g) { return f += g; }
    friend FreqVector operator-(FreqVector f, const FreqVector& g) { return f -= g; }
    friend FreqVector operator*(Complex c, FreqVector f) { return f *= c; }

    bool operator==(const FreqVector&) const = default;

private:
    std::map<BigInt, Complex> entries_;
};

struct InnerValue {
    Complex value{0.0, 0.0};
    double error_bound = 0.0; // additive propagation of the mu_hat bounds
};

// <f, g> = sum_{m,n} conj(a_m) b_n mu_hat(m - n); conjugate-linear in the
// FIRST argument, so coefficient extraction reads c_v(gamma) = <e_gamma, v>.
InnerValue inner_with_bound(const FreqVector& f, const FreqVector& g,
                            const TransformConfig& cfg = {});
Complex inner(const FreqVector& f, const FreqVector& g,
              const TransformConfig& cfg = {});

struct OnbCoeffs {
    int depth = 0;
    std::map<BigInt, Complex> coeffs; // keyed by gamma (unscaled index)
    double norm_sq = 0.0;             // |f|^2 from the Gram
    double parseval_deficit = 0.0;    // |f|^2 - sum |coeffs|^2

    FreqVector to_vector() const;
};

// Coordinates of f against { e_gamma : gamma in Gamma_depth }:
// coeffs(gamma) = sum_n a_n mu_hat(gamma - n). Exact (deficit identically 0)
// when the support of f lies inside Gamma_depth.
OnbCoeffs onb_coeffs(const FreqVector& f, int depth, const TransformConfig& cfg = {});

// Coordinates against the rescaled basis { e_{5 gamma} : gamma in Gamma_depth }
// (also an orthonormal basis): coeffs(gamma) = sum_n a_n mu_hat(5 gamma - n).
OnbCoeffs onb_coeffs_scaled(const FreqVector& f, int depth,
                            const TransformConfig& cfg = {});

double norm(const FreqVector& f, const TransformConfig& cfg = {});

// f / norm(f); throws zero_vector_error when the norm vanishes.
FreqVector normalize(const FreqVector& f, const TransformConfig& cfg = {});

} // namespace fspec
