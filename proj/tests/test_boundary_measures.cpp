#include <doctest.h>

#include <cmath>
#include <random>

#include "fspec/boundary_measures.hpp"
#include "fspec/sampling.hpp"

using namespace fspec;

namespace {

GammaWord word(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> b;
    for (int x : bits) b.push_back(static_cast<std::uint8_t>(x));
    return GammaWord(b);
}

} // namespace

TEST_CASE("cylinder masses of basis vectors") {
    // e_0 sits on the all-zeros word
    for (int len = 0; len <= 6; ++len)
        CHECK(cylinder_mass(FreqVector::basis(0), GammaWord::zeros(std::size_t(len))) ==
              1.0);

    // e_gamma sits on the word of gamma padded with zeros
    const BigInt g = 20;
    const GammaWord padded = index_to_word(g, 6);
    CHECK(cylinder_mass(FreqVector::basis(g), padded) == 1.0);
    CHECK(cylinder_mass(FreqVector::basis(g), word({1})) == 0.0);

    const double s = 1.0 / std::sqrt(2.0);
    FreqVector v;
    v.add_term(0, {s, 0});
    v.add_term(1, {s, 0});
    CHECK(cylinder_mass(v, word({1})) == doctest::Approx(0.5));

    CHECK_THROWS_AS(cylinder_mass(FreqVector::basis(2), word({0})),
                    support_not_in_gamma_error);
}

TEST_CASE("cylinder tree masses and additivity") {
    const CylinderReport zero_tree = cylinder_tree(FreqVector::basis(0), 4);
    CHECK(zero_tree.total == 1.0);
    for (const auto& [p, m] : zero_tree.masses) {
        const bool all_zeros = p.value() == 0;
        CHECK(m == (all_zeros ? 1.0 : 0.0));
    }
    CHECK(zero_tree.max_additivity_violation == 0.0);

    const double s = 1.0 / std::sqrt(2.0);
    FreqVector v;
    v.add_term(1, {s, 0});
    v.add_term(5, {s, 0});
    const CylinderReport t = cylinder_tree(v, 2);
    CHECK(t.total == doctest::Approx(1.0));
    CHECK(t.masses.at(word({1})) == doctest::Approx(1.0));
    CHECK(t.masses.at(word({1, 0})) == doctest::Approx(0.5));
    CHECK(t.masses.at(word({1, 1})) == doctest::Approx(0.5));
    CHECK(t.masses.at(word({0})) == 0.0);
}

TEST_CASE("tree masses agree with direct cylinder sums on random vectors") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        const FreqVector v = random_gamma_vector(5, 11, rng);
        const CylinderReport t = cylinder_tree(v, 4);
        CHECK(t.total == v.coeff_norm_sq());
        CHECK(t.max_additivity_violation < 1e-15);
    }
}

TEST_CASE("path scans") {
    const auto atom = atom_scan(FreqVector::basis(0), GammaWord{}, 8);
    for (double m : atom) CHECK(m == 1.0);

    const auto e1 = atom_scan(FreqVector::basis(1), GammaWord{}, 5);
    CHECK(e1[0] == 1.0);
    for (std::size_t d = 1; d < e1.size(); ++d) CHECK(e1[d] == 0.0);
}

TEST_CASE("path masses are nonincreasing") {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const FreqVector v = random_gamma_vector(5, 13, rng);
        std::vector<std::uint8_t> p(6);
        for (auto& x : p) x = std::uint8_t(bit(rng));
        const auto masses = atom_scan(v, GammaWord(p), 6);
        for (std::size_t d = 1; d < masses.size(); ++d)
            CHECK(masses[d] <= masses[d - 1]);
    }
}

TEST_CASE("truncated even exponential: atom on the zeros path, decay elsewhere") {
    const FreqVector v =
        normalize(onb_coeffs(FreqVector::basis(2), 6).to_vector());

    // along the all-zeros word the masses decrease strictly but converge to
    // the atom weight |c_v(0)|^2 (the induced measure charges every
    // eventually-zero word with its coefficient mass)
    const auto zeros = atom_scan(v, GammaWord{}, 6);
    CHECK(zeros[1] == zeros[0]); // support is even, first split is trivial
    for (std::size_t d = 1; d + 1 < zeros.size(); ++d)
        CHECK(zeros[d] > zeros[d + 1]);
    // at depth 6 only gamma = 0 is left on the path: the atom weight
    CHECK(zeros.back() == std::norm(v.coefficient(0)));
    CHECK(zeros.back() > 0.4);

    // along the alternating word the masses decay toward zero
    GammaWord alternating;
    for (int i = 0; i < 6; ++i) alternating = alternating.append(i % 2);
    const auto alt = atom_scan(v, alternating, 6);
    for (std::size_t d = 1; d + 1 < alt.size(); ++d) CHECK(alt[d] > alt[d + 1]);
    CHECK(alt.back() < 1e-4);
}

TEST_CASE("operator weights equal cylinder masses exactly") {
    CHECK(weight_identity_check(FreqVector::basis(5), 0).pairs[0] ==
          std::pair<double, double>{1.0, 1.0});
    const auto rep = weight_identity_check(FreqVector::basis(5), 1);
    CHECK(rep.pairs[1] == std::pair<double, double>{0.0, 0.0});
    CHECK(weight_identity_check(FreqVector::basis(4), 1).pairs[1] ==
          std::pair<double, double>{1.0, 1.0});

    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        const FreqVector v = random_gamma_vector(6, 9, rng);
        const auto r = weight_identity_check(v, 6);
        CHECK(r.exact);
        CHECK(r.max_abs_diff == 0.0);
    }
}

TEST_CASE("level masses exhaust the norm") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const FreqVector v = random_gamma_vector(5, 8, rng);
        double total = std::norm(v.coefficient(0));
        for (int k = 0; k <= 5; ++k)
            total += cylinder_mass(v, GammaWord::zeros(std::size_t(k)).append(1));
        CHECK(total == doctest::Approx(v.coeff_norm_sq()).epsilon(1e-12));
    }
}
