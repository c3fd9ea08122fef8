#include <doctest.h>

#include <cmath>
#include <random>

#include "fspec/cuntz_rep.hpp"
#include "fspec/sampling.hpp"

using namespace fspec;

namespace {

GammaWord word(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> b;
    for (int x : bits) b.push_back(static_cast<std::uint8_t>(x));
    return GammaWord(b);
}

} // namespace

TEST_CASE("isometries act by index maps on all integers") {
    CHECK(s0_apply(FreqVector::basis(1)) == FreqVector::basis(4));
    CHECK(s0_apply(FreqVector::basis(0)) == FreqVector::basis(0));
    CHECK(s0_apply(FreqVector::basis(-1)) == FreqVector::basis(-4));
    CHECK(s1_apply(FreqVector::basis(0)) == FreqVector::basis(1));
    CHECK(s1_apply(FreqVector::basis(1)) == FreqVector::basis(5));
    CHECK(s1_apply(FreqVector::basis(-1)) == FreqVector::basis(-3));
}

TEST_CASE("adjoints strip digits on clean residues") {
    const StripResult a = s0_adjoint(FreqVector::basis(20), 4);
    CHECK(a.exact);
    CHECK(a.vec == FreqVector::basis(5));

    const StripResult b = s0_adjoint(FreqVector::basis(5), 4);
    CHECK(b.exact);
    CHECK(b.vec.empty());

    const StripResult c = s1_adjoint(FreqVector::basis(5), 4);
    CHECK(c.exact);
    CHECK(c.vec == FreqVector::basis(1));

    const StripResult d = s1_adjoint(FreqVector::basis(4), 4);
    CHECK(d.exact);
    CHECK(d.vec.empty());
}

TEST_CASE("leftover residues expand in the truncated basis") {
    // S0* e_2 = sum mu_hat(4 gamma - 2) e_gamma, every coefficient nonzero
    const StripResult r = s0_adjoint(FreqVector::basis(2), 4);
    CHECK_FALSE(r.exact);
    for (const BigInt& g : enumerate_gamma(4)) {
        const Complex expected = mu_hat_int(4 * g - 2).value;
        CHECK(std::abs(r.vec.coefficient(g) - expected) < 1e-13);
        CHECK(std::abs(expected) > 1e-7);
    }

    // S1* e_3 carries the same coefficients mu_hat(4 gamma - 2)
    const StripResult s = s1_adjoint(FreqVector::basis(3), 4);
    CHECK_FALSE(s.exact);
    CHECK(s.vec == r.vec);
}

TEST_CASE("adjoint pairing matches the isometries") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const FreqVector f = random_gamma_vector(4, 7, rng);
        // pair against a vector with all four residues present
        FreqVector g;
        g.add_term(2, {0.7, -0.1});
        g.add_term(3, {-0.2, 0.4});
        g.add_term(4, {0.1, 0.1});
        g.add_term(5, {0.5, 0.0});
        const Complex lhs0 = inner(s0_apply(f), g);
        const Complex rhs0 = inner(f, s0_adjoint(g, 4).vec);
        CHECK(std::abs(lhs0 - rhs0) < 1e-12);
        const Complex lhs1 = inner(s1_apply(f), g);
        const Complex rhs1 = inner(f, s1_adjoint(g, 4).vec);
        CHECK(std::abs(lhs1 - rhs1) < 1e-12);
    }
}

TEST_CASE("ranges of the two isometries are orthogonal") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const FreqVector f = random_gamma_vector(3, 5, rng);
        const FreqVector g = random_gamma_vector(3, 5, rng);
        CHECK(inner(s0_apply(f), s1_apply(g)) == Complex{0.0, 0.0});
    }
}

TEST_CASE("word application composes letters first to last") {
    CHECK(word_apply(word({1, 0}), FreqVector::basis(0)) == FreqVector::basis(4));
    CHECK(word_apply(word({1}), FreqVector::basis(1)) == FreqVector::basis(5));
    CHECK(word_apply(GammaWord{}, FreqVector::basis(7)) == FreqVector::basis(7));
}

TEST_CASE("word adjoints erase matching prefixes") {
    CHECK(word_adjoint(word({1}), FreqVector::basis(5), 3).vec ==
          FreqVector::basis(1));
    CHECK(word_adjoint(word({0}), FreqVector::basis(5), 3).vec.empty());

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> p(1 + std::size_t(rng() % 4));
        std::vector<std::uint8_t> t(std::size_t(rng() % 4));
        for (auto& x : p) x = std::uint8_t(bit(rng));
        for (auto& x : t) x = std::uint8_t(bit(rng));
        const GammaWord prefix(p), tail(t);
        const BigInt whole = word_to_index(concat(prefix, tail));
        const StripResult hit =
            word_adjoint(prefix, FreqVector::basis(whole), 3);
        CHECK(hit.exact);
        CHECK(hit.vec == FreqVector::basis(word_to_index(tail)));

        // flip one prefix bit: annihilated
        std::vector<std::uint8_t> q = p;
        q[rng() % q.size()] ^= 1;
        if (GammaWord(q) != prefix) {
            const StripResult miss =
                word_adjoint(GammaWord(q), FreqVector::basis(whole), 3);
            CHECK(miss.vec.empty());
        }
    }
}

TEST_CASE("cuntz relations hold exactly") {
    const CuntzCheckReport rep = cuntz_identity_check(3);
    CHECK(rep.s0_isometry);
    CHECK(rep.s1_isometry);
    CHECK(rep.cross_terms_vanish);
    CHECK(rep.range_projections_complete);
    CHECK(cuntz_identity_check(8).all_pass());
}

TEST_CASE("wold sequences") {
    const auto ones = wold_sequence(FreqVector::basis(0), 6);
    for (double x : ones) CHECK(x == 1.0);

    const auto e1 = wold_sequence(FreqVector::basis(1), 6);
    CHECK(e1[0] == 1.0);
    for (std::size_t n = 1; n < e1.size(); ++n) CHECK(e1[n] == 0.0);

    const double s = 1.0 / std::sqrt(2.0);
    FreqVector v;
    v.add_term(0, {s, 0});
    v.add_term(4, {s, 0});
    const auto seq = wold_sequence(v, 5);
    CHECK(seq[0] == doctest::Approx(1.0));
    CHECK(seq[1] == doctest::Approx(1.0));
    for (std::size_t n = 2; n < seq.size(); ++n)
        CHECK(seq[n] == doctest::Approx(s));

    CHECK_THROWS_AS(wold_sequence(FreqVector::basis(2), 3),
                    support_not_in_gamma_error);
}

TEST_CASE("wold sequences stabilize at the word length") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const FreqVector v = random_gamma_vector(6, 12, rng);
        const auto seq = wold_sequence(v, 10);
        for (std::size_t n = 1; n < seq.size(); ++n) CHECK(seq[n] <= seq[n - 1]);
        const double limit = std::sqrt(std::norm(v.coefficient(0)));
        for (std::size_t n = v.max_word_length() + 1; n < seq.size(); ++n)
            CHECK(seq[n] == limit);
    }
}

TEST_CASE("level projectors") {
    CHECK(p_k_project(FreqVector::basis(5), 0) == FreqVector::basis(5));
    CHECK(p_k_project(FreqVector::basis(5), 1).empty());
    CHECK(p_k_project(FreqVector::basis(4), 1) == FreqVector::basis(4));
}

TEST_CASE("level projectors decompose the vector exactly") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const FreqVector v = random_gamma_vector(5, 10, rng);
        FreqVector sum;
        for (int k = 0; k <= 5; ++k) sum += p_k_project(v, k);
        Complex c0 = v.coefficient(0);
        if (c0 != Complex{0.0, 0.0}) sum.add_term(0, c0);
        CHECK(sum == v);
    }
}

TEST_CASE("block maps on the identity") {
    const OperatorBlocks b = alpha2(TruncOperator::identity(3));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    CHECK((b.m00 - id).cwiseAbs().maxCoeff() == 0.0);
    CHECK((b.m11 - id).cwiseAbs().maxCoeff() == 0.0);
    CHECK(b.m01.cwiseAbs().maxCoeff() == 0.0);
    CHECK(b.m10.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("block reassembly is the exact inverse") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const TruncOperator X = random_trunc_operator(3, rng);
        const TruncOperator back = beta2(alpha2(X));
        CHECK(back.depth() == X.depth());
        CHECK((back.matrix() - X.matrix()).cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK_THROWS_AS(alpha2(TruncOperator::identity(0)), depth_mismatch_error);
}

TEST_CASE("commutant identity on operators commuting with the shift") {
    CHECK(commutant_identity_residual(TruncOperator::identity(4)) == 0.0);
}
