#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gf2max {

using BigInt = boost::multiprecision::cpp_int;

// Largest supported matrix dimension: one row per 64-bit word.
inline constexpr int kMaxDimension = 64;

/// Effort caps for the exhaustive and iterative routines.
///
/// Every operation that can blow up combinatorially takes a `Limits` and
/// throws `CapExceeded` instead of running unbounded.
struct Limits {
    int enumeration = 16;          // primitive polynomial scan, 2^(n-1) candidates
    int factoring = 64;            // Mersenne factoring, 2^n - 1 must fit in 64 bits
    int brute_force = 4;           // full scans of all 2^(n*n) matrix codes
    int exhaustive = 5;            // GL_n enumeration and coset walks
    int centralizer = 16;          // explicit centralizer sets hold 2^n - 1 matrices
    int full_period = 20;          // visited-state bitmap of 2^n bits
    std::uint64_t order_steps = std::uint64_t{1} << 20;
    std::uint64_t factoring_iterations = std::uint64_t{1} << 26;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public std::domain_error {
public:
    SingularMatrix() : std::domain_error("singular") {}
};

/// Parses a nonnegative integer in decimal or 0x-prefixed hexadecimal.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);
std::string to_hex(const BigInt& value);

std::string_view trim(std::string_view text);

}  // namespace gf2max
