#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fspec {

// Error taxonomy for the whole library. Each throwing operation documents
// which of these it can raise.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An integer whose base-4 digits are not all 0 or 1 (or a negative integer)
// was used where a spectrum point was required.
class not_in_gamma_error : public error {
public:
    using error::error;
};

// A vector with frequencies outside the spectrum reached an operation that
// is only defined on spectrum-supported vectors.
class support_not_in_gamma_error : public error {
public:
    using error::error;
};

// Requested truncation depth exceeds the configured enumeration limit.
class depth_too_large_error : public error {
public:
    using error::error;
};

// The factor budget of the transform product cannot certify the requested
// absolute tolerance.
class tolerance_unreachable_error : public error {
public:
    using error::error;
};

class zero_vector_error : public error {
public:
    using error::error;
};

// Block depths passed to the 2x2 operator maps do not line up.
class depth_mismatch_error : public error {
public:
    using error::error;
};

// Fejer degree exceeds the available moment range.
class degree_too_large_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace fspec
