#include "fspec/hilbert_vectors.hpp"

#include <cmath>

#include "fspec/spectrum_index.hpp"

namespace fspec {

void FreqVector::add_term(const BigInt& n, Complex a) {
    auto [it, inserted] = entries_.try_emplace(n, a);
    if (!inserted) it->second += a;
    if (it->second == Complex{0.0, 0.0}) entries_.erase(it);
}

Complex FreqVector::coefficient(const BigInt& n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

bool FreqVector::support_in_gamma() const {
    for (const auto& [n, a] : entries_)
        if (!is_in_gamma(n)) return false;
    return true;
}

void FreqVector::require_gamma_support(const char* who) const {
    for (const auto& [n, a] : entries_)
        if (!is_in_gamma(n))
            throw support_not_in_gamma_error(std::string(who) + ": frequency " +
                                             n.str() + " is not in the spectrum");
}

std::size_t FreqVector::max_word_length() const {
    require_gamma_support("max_word_length");
    std::size_t len = 0;
    for (const auto& [n, a] : entries_)
        len = std::max(len, index_to_word(n).length());
    return len;
}

double FreqVector::coeff_norm_sq() const {
    double s = 0.0;
    for (const auto& [n, a] : entries_) s += std::norm(a);
    return s;
}

FreqVector& FreqVector::operator+=(const FreqVector& g) {
    for (const auto& [n, a] : g.entries_) add_term(n, a);
    return *this;
}

FreqVector& FreqVector::operator-=(const FreqVector& g) {
    for (const auto& [n, a] : g.entries_) add_term(n, -a);
    return *this;
}

FreqVector& FreqVector::operator*=(Complex c) {
    if (c == Complex{0.0, 0.0}) {
        entries_.clear();
        return *this;
    }
    for (auto& [n, a] : entries_) a *= c;
    return *this;
}

InnerValue inner_with_bound(const FreqVector& f, const FreqVector& g,
                            const TransformConfig& cfg) {
    InnerValue out;
    for (const auto& [m, a] : f.entries()) {
        for (const auto& [n, b] : g.entries()) {
            const MuHatValue mh = mu_hat_int(m - n, cfg);
            out.value += std::conj(a) * b * mh.value;
            out.error_bound += std::abs(a) * std::abs(b) * mh.error_bound;
        }
    }
    return out;
}

Complex inner(const FreqVector& f, const FreqVector& g, const TransformConfig& cfg) {
    return inner_with_bound(f, g, cfg).value;
}

FreqVector OnbCoeffs::to_vector() const {
    FreqVector v;
    for (const auto& [g, a] : coeffs) v.add_term(g, a);
    return v;
}

namespace {

OnbCoeffs coeffs_against(const FreqVector& f, int depth, const BigInt& scale,
                         const TransformConfig& cfg) {
    OnbCoeffs out;
    out.depth = depth;
    double captured = 0.0;
    for (const BigInt& gamma : enumerate_gamma(depth)) {
        Complex c{0.0, 0.0};
        const BigInt base = scale * gamma;
        for (const auto& [n, a] : f.entries())
            c += a * mu_hat_int(base - n, cfg).value;
        if (c != Complex{0.0, 0.0}) out.coeffs.emplace(gamma, c);
        captured += std::norm(c);
    }
    out.norm_sq = inner_with_bound(f, f, cfg).value.real();
    out.parseval_deficit = out.norm_sq - captured;
    return out;
}

} // namespace

OnbCoeffs onb_coeffs(const FreqVector& f, int depth, const TransformConfig& cfg) {
    return coeffs_against(f, depth, 1, cfg);
}

OnbCoeffs onb_coeffs_scaled(const FreqVector& f, int depth,
                            const TransformConfig& cfg) {
    return coeffs_against(f, depth, 5, cfg);
}

double norm(const FreqVector& f, const TransformConfig& cfg) {
    const double n2 = inner_with_bound(f, f, cfg).value.real();
    return n2 <= 0.0 ? 0.0 : std::sqrt(n2);
}

FreqVector normalize(const FreqVector& f, const TransformConfig& cfg) {
    const double n = norm(f, cfg);
    if (n == 0.0) throw zero_vector_error("normalize: zero vector");
    FreqVector out = f;
    out *= Complex{1.0 / n, 0.0};
    return out;
}

} // namespace fspec
