#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fspec/bigint.hpp"
#include "fspec/errors.hpp"

namespace fspec {

// Exact arithmetic for the spectrum Gamma = { sum_i a_i 4^i : a_i in {0,1} }
// = {0, 1, 4, 5, 16, 17, 20, 21, ...}. A word stores the digits a_i with the
// least significant first. Trailing zeros are significant: concatenation
// depends on the word length, not just on the integer value, so (0,1) and
// (0,1,0) are different words with the same value 4.

inline constexpr int kMaxEnumerationDepth = 24;

class GammaWord {
public:
    GammaWord() = default;

    // Throws not_in_gamma_error if any entry is not 0 or 1.
    explicit GammaWord(std::vector<std::uint8_t> bits);

    static GammaWord zeros(std::size_t n) {
        return GammaWord(std::vector<std::uint8_t>(n, 0));
    }

    std::size_t length() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    // Digit at position i; positions beyond the stored length read as 0,
    // matching the identification of gamma with the infinite word gamma,0,0,...
    int bit(std::size_t i) const noexcept {
        return i < bits_.size() ? bits_[i] : 0;
    }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    BigInt value() const;

    GammaWord concat(const GammaWord& tail) const;
    GammaWord append(int b) const;

    bool operator==(const GammaWord&) const = default;

    // Shortlex-free ordering (plain lexicographic with shorter-prefix-first);
    // stable key for report maps.
    bool operator<(const GammaWord& other) const { return bits_ < other.bits_; }

    // Digits in storage order, e.g. (0,1,1) -> "011".
    std::string to_string() const;

private:
    std::vector<std::uint8_t> bits_;
};

// value(w) = sum_i w_i 4^i.
BigInt word_to_index(const GammaWord& w);

// Inverse codec; pads with trailing zeros up to min_len.
// Throws not_in_gamma_error when n is negative or has a base-4 digit 2 or 3.
GammaWord index_to_word(const BigInt& n, std::size_t min_len = 0);

// True iff n >= 0 and every base-4 digit of n is 0 or 1.
bool is_in_gamma(const BigInt& n);

GammaWord concat(const GammaWord& g, const GammaWord& x);

// All 2^depth values { sum_{i<depth} a_i 4^i } in increasing order.
// Throws depth_too_large_error when depth exceeds max_depth.
std::vector<BigInt> enumerate_gamma(int depth, int max_depth = kMaxEnumerationDepth);

// Mathematical residue in {0,1,2,3} (nonnegative also for negative n).
int residue_mod4(const BigInt& n);

// Position of gamma in enumerate_gamma(depth) without materializing the list:
// reading the base-4 digits a_i as base-2 gives the rank, and the map is
// order-preserving. Throws not_in_gamma_error / depth_too_large_error.
int gamma_rank(const BigInt& gamma, int depth);

// Inverse of gamma_rank.
BigInt gamma_unrank(int rank, int depth);

} // namespace fspec
