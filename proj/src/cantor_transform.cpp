#include "fspec/cantor_transform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace fspec {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Hard ceiling on product factors; arguments needing more than this cannot
// be certified at any tolerance we care about.
constexpr int kMaxFactors = 600;

// Per-factor floating-point allowance: argument reduction, sin/cos and the
// running product each contribute O(eps).
constexpr double kRoundoffPerFactor = 5e-16;

int factor_count(const BigInt& m, int extra_terms) {
    // ceil(log4 m) <= (msb(m) + 2) / 2 for m >= 1.
    const unsigned bits = (m > 0) ? boost::multiprecision::msb(m) : 0u;
    return static_cast<int>(bits + 2) / 2 + extra_terms;
}

double tail_bound(int extra_terms, int factors) {
    // sum_{k>K} pi*|t|*4^{1-k} = (4 pi/3) |t| 4^{-K} <= (4 pi/3) 4^{-extra}
    // because K >= ceil(log4 |t|) + extra.
    return (4.0 * kPi / 3.0) * std::scalbn(1.0, -2 * extra_terms) +
           double(factors) * kRoundoffPerFactor;
}

// r / 2^denom_log2 in [0,1), keeping the leading 62 bits of r so the double
// conversion cannot overflow for wide r.
double dyadic_fraction(const BigInt& r, int denom_log2) {
    if (r == 0) return 0.0;
    const int bits = static_cast<int>(boost::multiprecision::msb(r)) + 1;
    const int shift = bits > 62 ? bits - 62 : 0;
    const double top = to_double(BigInt(r >> shift));
    return std::scalbn(top, shift - denom_log2);
}

// Product over k = 1..K of (1 + exp(-i pi x_k))/2 with x_k = m 4^{1-k} mod 2.
// The modular reduction is done in integer arithmetic: only the parity of
// m div 4^{k-1} and the fractional part m mod 4^{k-1} / 4^{k-1} survive.
std::complex<double> truncated_product_int(const BigInt& m, int factors) {
    std::complex<double> p{1.0, 0.0};
    BigInt q = m; // m div 4^{k-1}, maintained by shifting
    BigInt pow = 1; // 4^{k-1}
    for (int k = 1; k <= factors; ++k) {
        const BigInt r = m - q * pow;
        const double frac = dyadic_fraction(r, 2 * (k - 1));
        const double x = ((q & 1) != 0) ? 1.0 + frac : frac;
        const double a = kPi * x;
        p *= std::complex<double>((1.0 + std::cos(a)) * 0.5, -std::sin(a) * 0.5);
        q >>= 2;
        pow <<= 2;
    }
    return p;
}

struct CacheKey {
    BigInt reduced; // positive, = 2 mod 4
    int extra_terms;
    bool operator<(const CacheKey& o) const {
        if (extra_terms != o.extra_terms) return extra_terms < o.extra_terms;
        return reduced < o.reduced;
    }
};

// Read-shared write-once cache keyed by the fully reduced argument; a race
// recomputes the same value, which is harmless.
std::shared_mutex cache_mutex;
std::map<CacheKey, MuHatValue> cache;

MuHatValue product_value_cached(const BigInt& m, const TransformConfig& cfg) {
    const CacheKey key{m, cfg.extra_terms};
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int factors = factor_count(m, cfg.extra_terms);
    if (factors > kMaxFactors)
        throw tolerance_unreachable_error(
            "argument needs " + std::to_string(factors) +
            " product factors, above the ceiling " + std::to_string(kMaxFactors));
    MuHatValue out{truncated_product_int(m, factors),
                   tail_bound(cfg.extra_terms, factors)};
    {
        std::unique_lock lock(cache_mutex);
        cache.emplace(key, out);
    }
    return out;
}

} // namespace

MuHatValue mu_hat_int(const BigInt& n, const TransformConfig& cfg) {
    if (n == 0) return {{1.0, 0.0}, 0.0};
    const bool negated = n < 0;
    BigInt m = negated ? BigInt(-n) : n;
    while (m % 4 == 0) m /= 4;
    if (m % 2 == 1) return {{0.0, 0.0}, 0.0};

    MuHatValue v = product_value_cached(m, cfg);
    if (v.error_bound > cfg.abs_tol)
        throw tolerance_unreachable_error(
            "certified bound " + std::to_string(v.error_bound) +
            " exceeds abs_tol " + std::to_string(cfg.abs_tol));
    if (negated) v.value = std::conj(v.value);
    return v;
}

MuHatValue mu_hat_int_traced(const BigInt& n, const TransformConfig& cfg,
                             std::vector<std::string>& trace) {
    if (n == 0) {
        trace.push_back("mu_hat(0) = 1 (total mass)");
        return {{1.0, 0.0}, 0.0};
    }
    BigInt m = n;
    if (m < 0) {
        trace.push_back("mu_hat(" + m.str() + ") = conj(mu_hat(" + BigInt(-m).str() +
                        "))");
        m = -m;
    }
    while (m % 4 == 0) {
        trace.push_back("mu_hat(" + m.str() + ") = mu_hat(" + BigInt(m / 4).str() +
                        ") (4-scaling invariance)");
        m /= 4;
    }
    if (m % 2 == 1) {
        trace.push_back("mu_hat(" + m.str() + ") = 0 (odd argument)");
        return {{0.0, 0.0}, 0.0};
    }
    trace.push_back("mu_hat(" + m.str() + ") via truncated product, " +
                    std::to_string(factor_count(m, cfg.extra_terms)) + " factors");
    return mu_hat_int(n, cfg);
}

MuHatValue mu_hat_real(double t, const TransformConfig& cfg) {
    if (!(std::isfinite(t)))
        throw tolerance_unreachable_error("non-finite argument");
    const double a = std::abs(t);
    const int lead = a <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(a) / 2.0));
    const int factors = lead + cfg.extra_terms;
    if (factors > kMaxFactors)
        throw tolerance_unreachable_error("argument too large for the factor budget");
    std::complex<double> p{1.0, 0.0};
    for (int k = 1; k <= factors; ++k) {
        // t * 4^{1-k} is an exact scaling by a power of two; reduce mod 2.
        double x = std::fmod(std::scalbn(t, 2 - 2 * k), 2.0);
        if (x < 0.0) x += 2.0;
        const double ang = kPi * x;
        p *= std::complex<double>((1.0 + std::cos(ang)) * 0.5, -std::sin(ang) * 0.5);
    }
    MuHatValue out{p, tail_bound(cfg.extra_terms, factors)};
    if (out.error_bound > cfg.abs_tol)
        throw tolerance_unreachable_error(
            "certified bound " + std::to_string(out.error_bound) +
            " exceeds abs_tol " + std::to_string(cfg.abs_tol));
    return out;
}

bool is_zero_of_mu_hat(const BigInt& n) {
    if (n == 0) return false;
    BigInt m = n < 0 ? BigInt(-n) : n;
    while (m % 4 == 0) m /= 4;
    return m % 2 == 1;
}

} // namespace fspec
