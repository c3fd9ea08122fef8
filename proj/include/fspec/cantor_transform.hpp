#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fspec/bigint.hpp"
#include "fspec/errors.hpp"

namespace fspec {

// Fourier transform of the quarter-Cantor measure mu (the invariant measure
// of the maps x -> x/4 and x -> (x+2)/4 with equal weights), under the
// convention
//
//     mu_hat(s) = integral exp(-2 pi i s t) dmu(t),
//
// so that <e_m, e_n> = mu_hat(m - n) with the inner product conjugate-linear
// in the first slot. The invariance equation gives the product formula
//
//     mu_hat(t) = prod_{k>=1} (1 + exp(-pi i t 4^{1-k})) / 2,
//
// from which the exact facts used below follow: mu_hat(0) = 1,
// mu_hat(odd integer) = 0, mu_hat(4m) = mu_hat(m), and
// mu_hat(-n) = conj(mu_hat(n)). Integer arguments are reduced by these rules
// before any floating-point work, so mu_hat vanishes *exactly* on
// 4^k * (odd), and only residues 2 mod 4 ever reach the truncated product.

struct TransformConfig {
    // Product factors beyond the argument-size-driven count
    // ceil(log4 max(|t|,1)). The tail beyond K factors is bounded by
    // sum_{k>K} pi |t| 4^{1-k} = (4 pi / 3) |t| 4^{-K}.
    int extra_terms = 30;
    double abs_tol = 1e-12;
};

struct MuHatValue {
    std::complex<double> value{0.0, 0.0};
    double error_bound = 0.0;
};

// Certified evaluation at an integer argument. Exact reductions first; the
// residual case n = 2 mod 4 uses the truncated product with the tail bound
// above plus a roundoff allowance. Throws tolerance_unreachable_error when
// the bound cannot meet cfg.abs_tol.
MuHatValue mu_hat_int(const BigInt& n, const TransformConfig& cfg = {});

// Same product evaluated at a real argument, without integer reductions
// (plain truncated product; used by quadrature cross-checks and densities).
MuHatValue mu_hat_real(double t, const TransformConfig& cfg = {});

// Exact zero-set decision: mu_hat(n) = 0 iff n = 4^k (2m+1); false for n = 0.
bool is_zero_of_mu_hat(const BigInt& n);

// mu_hat_int plus the list of exact reductions applied, for the CLI trace.
MuHatValue mu_hat_int_traced(const BigInt& n, const TransformConfig& cfg,
                             std::vector<std::string>& trace);

} // namespace fspec
