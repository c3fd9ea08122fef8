#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fspec {

// Frequencies are arbitrary-precision: the 5-scaling operator sends an index
// gamma to 5^m * gamma, which overflows 64-bit types already for m around 20.
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// 5^k and the affine offset (5^k - 1)/4 of the k-fold map n -> 5n + 1.
inline BigInt pow5(unsigned k) { return pow_int(BigInt(5), k); }

inline BigInt mu_offset(unsigned k) { return (pow5(k) - 1) / 4; }

} // namespace fspec
