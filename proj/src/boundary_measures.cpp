#include "fspec/boundary_measures.hpp"

#include <cmath>

namespace fspec {
namespace {

// Does the padded digit word of n extend `prefix`? n must be in the spectrum.
bool extends_prefix(const BigInt& n, const GammaWord& prefix) {
    BigInt m = n;
    for (std::size_t i = 0; i < prefix.length(); ++i) {
        const int digit = static_cast<int>(m % 4);
        if (digit != prefix.bit(i)) return false;
        m /= 4;
    }
    return true;
}

} // namespace

double cylinder_mass(const FreqVector& v, const GammaWord& prefix) {
    v.require_gamma_support("cylinder_mass");
    double mass = 0.0;
    for (const auto& [n, a] : v.entries())
        if (extends_prefix(n, prefix)) mass += std::norm(a);
    return mass;
}

CylinderReport cylinder_tree(const FreqVector& v, int depth) {
    v.require_gamma_support("cylinder_tree");
    CylinderReport rep;
    rep.depth = depth;

    // Depth-first over the prefix tree; each node recomputes its own filtered
    // sum so that reported masses agree exactly with cylinder_mass.
    std::vector<GammaWord> stack{GammaWord{}};
    while (!stack.empty()) {
        GammaWord p = std::move(stack.back());
        stack.pop_back();
        rep.masses.emplace(p, cylinder_mass(v, p));
        if (p.length() < static_cast<std::size_t>(depth)) {
            stack.push_back(p.append(1));
            stack.push_back(p.append(0));
        }
    }
    rep.total = rep.masses.at(GammaWord{});
    for (const auto& [p, m] : rep.masses) {
        if (p.length() >= static_cast<std::size_t>(depth)) continue;
        const double split = rep.masses.at(p.append(0)) + rep.masses.at(p.append(1));
        rep.max_additivity_violation =
            std::max(rep.max_additivity_violation, std::abs(m - split));
    }
    return rep;
}

std::vector<double> atom_scan(const FreqVector& v, const GammaWord& path, int depth) {
    v.require_gamma_support("atom_scan");
    std::vector<double> masses;
    masses.reserve(std::size_t(depth) + 1);
    std::vector<std::uint8_t> prefix;
    for (int d = 0; d <= depth; ++d) {
        masses.push_back(cylinder_mass(v, GammaWord(prefix)));
        prefix.push_back(static_cast<std::uint8_t>(path.bit(std::size_t(d))));
    }
    return masses;
}

WeightIdentityReport weight_identity_check(const FreqVector& v, int k_max) {
    v.require_gamma_support("weight_identity_check");
    WeightIdentityReport rep;
    rep.k_max = k_max;
    rep.exact = true;
    for (int k = 0; k <= k_max; ++k) {
        // |S1* S0*^k v|^2 by index stripping: survivors are the indices
        // divisible by 4^k whose quotient is 1 mod 4.
        const BigInt p4k = pow_int(4, static_cast<unsigned>(k));
        double stripped = 0.0;
        for (const auto& [n, a] : v.entries()) {
            if (n % p4k != 0) continue;
            if ((n / p4k) % 4 == 1) stripped += std::norm(a);
        }
        const double cyl = cylinder_mass(v, GammaWord::zeros(std::size_t(k)).append(1));
        rep.pairs.emplace_back(stripped, cyl);
        const double diff = std::abs(stripped - cyl);
        rep.max_abs_diff = std::max(rep.max_abs_diff, diff);
        if (diff != 0.0) rep.exact = false;
    }
    return rep;
}

} // namespace fspec
