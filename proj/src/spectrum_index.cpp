#include "fspec/spectrum_index.hpp"

#include <algorithm>

namespace fspec {

GammaWord::GammaWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1)
            throw not_in_gamma_error("word digit must be 0 or 1, got " +
                                     std::to_string(int(b)));
    }
}

BigInt GammaWord::value() const {
    BigInt v = 0;
    for (std::size_t i = bits_.size(); i-- > 0;) {
        v <<= 2;
        v += bits_[i];
    }
    return v;
}

GammaWord GammaWord::concat(const GammaWord& tail) const {
    std::vector<std::uint8_t> out = bits_;
    out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
    return GammaWord(std::move(out));
}

GammaWord GammaWord::append(int b) const {
    if (b != 0 && b != 1)
        throw not_in_gamma_error("word digit must be 0 or 1");
    std::vector<std::uint8_t> out = bits_;
    out.push_back(static_cast<std::uint8_t>(b));
    return GammaWord(std::move(out));
}

std::string GammaWord::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

BigInt word_to_index(const GammaWord& w) { return w.value(); }

GammaWord index_to_word(const BigInt& n, std::size_t min_len) {
    if (n < 0)
        throw not_in_gamma_error("negative index " + n.str() +
                                 " is not in the spectrum");
    std::vector<std::uint8_t> bits;
    BigInt m = n;
    while (m > 0) {
        int d = static_cast<int>(m % 4);
        if (d > 1)
            throw not_in_gamma_error("index " + n.str() +
                                     " has base-4 digit " + std::to_string(d));
        bits.push_back(static_cast<std::uint8_t>(d));
        m /= 4;
    }
    if (bits.size() < min_len) bits.resize(min_len, 0);
    return GammaWord(std::move(bits));
}

bool is_in_gamma(const BigInt& n) {
    if (n < 0) return false;
    BigInt m = n;
    while (m > 0) {
        if (m % 4 > 1) return false;
        m /= 4;
    }
    return true;
}

GammaWord concat(const GammaWord& g, const GammaWord& x) { return g.concat(x); }

std::vector<BigInt> enumerate_gamma(int depth, int max_depth) {
    if (depth < 0 || depth > max_depth)
        throw depth_too_large_error("enumeration depth " + std::to_string(depth) +
                                    " outside [0, " + std::to_string(max_depth) + "]");
    std::vector<BigInt> out;
    out.reserve(std::size_t(1) << depth);
    out.push_back(0);
    BigInt p = 1; // 4^i
    for (int i = 0; i < depth; ++i) {
        const std::size_t half = out.size();
        for (std::size_t j = 0; j < half; ++j) out.push_back(out[j] + p);
        p <<= 2;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int residue_mod4(const BigInt& n) {
    BigInt r = n % 4;
    if (r < 0) r += 4;
    return static_cast<int>(r);
}

int gamma_rank(const BigInt& gamma, int depth) {
    if (depth < 0 || depth > kMaxEnumerationDepth)
        throw depth_too_large_error("rank depth " + std::to_string(depth));
    BigInt m = gamma;
    int rank = 0;
    for (int i = 0; i < depth; ++i) {
        int d = residue_mod4(m);
        if (d > 1 || m < 0)
            throw not_in_gamma_error("value " + gamma.str() + " not in the spectrum");
        rank |= d << i;
        m /= 4;
    }
    if (m != 0)
        throw depth_too_large_error("value " + gamma.str() +
                                    " needs more than " + std::to_string(depth) +
                                    " digits");
    return rank;
}

BigInt gamma_unrank(int rank, int depth) {
    BigInt v = 0;
    for (int i = depth - 1; i >= 0; --i) {
        v <<= 2;
        if (rank & (1 << i)) v += 1;
    }
    return v;
}

} // namespace fspec
