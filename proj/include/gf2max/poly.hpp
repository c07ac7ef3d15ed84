#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2max/common.hpp"

namespace gf2max {

/// A polynomial over GF(2). Bit i of the coefficient sequence is the
/// coefficient of x^i. Storage is kept normalized (no trailing zero words),
/// so equality of values is equality of polynomials.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::uint64_t bits);

    static Gf2Poly from_words(std::vector<std::uint64_t> words);
    static Gf2Poly from_bigint(const BigInt& bits);
    static Gf2Poly monomial(std::size_t power);
    static Gf2Poly one() { return Gf2Poly(1); }
    static Gf2Poly x() { return Gf2Poly(2); }

    /// Degree of the polynomial; the zero polynomial has none.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    bool coeff(std::size_t power) const;
    void set_coeff(std::size_t power, bool value);

    std::span<const std::uint64_t> words() const { return words_; }
    // Throws std::overflow_error when the degree exceeds 63.
    std::uint64_t to_u64() const;
    BigInt to_bigint() const;

    Gf2Poly& operator+=(const Gf2Poly& other);
    Gf2Poly& shift_left(std::size_t count);

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
    // Orders as the coefficient integers.
    friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b);

private:
    void normalize();

    std::vector<std::uint64_t> words_;
};

Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b);

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& m);

/// (a * b) mod m. The modulus must have degree >= 1 ("invalid modulus").
Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
Gf2Poly poly_powmod(const Gf2Poly& a, const BigInt& exponent, const Gf2Poly& m);

/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly poly_lcm(const Gf2Poly& a, const Gf2Poly& b);

bool is_irreducible(const Gf2Poly& f);

inline Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) { return poly_add(a, b); }
inline Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) { return poly_mul(a, b); }

/// Human form, highest power first: "x^3+x+1". Zero prints as "0".
std::string to_string(const Gf2Poly& f);
/// Decimal coefficient integer: x^3+x+1 -> "11".
std::string to_integer_string(const Gf2Poly& f);

/// Accepts either the human form or a decimal / 0x-hex coefficient integer.
Gf2Poly parse_poly(std::string_view text);

// ---------------------------------------------------------------------------
// Mersenne numbers and primitivity

struct MersenneFactorization {
    int n = 0;
    std::uint64_t value = 0;  // 2^n - 1
    std::vector<std::pair<std::uint64_t, int>> factors;  // ascending by prime

    std::uint64_t product() const;
};

bool is_prime(std::uint64_t value);

/// Complete factorization of 2^n - 1, 1 <= n <= min(limits.factoring, 64).
MersenneFactorization factor_mersenne(int n, const Limits& limits = {});

std::uint64_t totient(std::uint64_t m);
std::uint64_t totient(const MersenneFactorization& fact);

/// Describes the first primitivity condition `f` fails, or nullopt if it is
/// primitive. Throws std::invalid_argument on a degree / factorization mismatch.
std::optional<std::string> primitivity_failure(const Gf2Poly& f,
                                               const MersenneFactorization& fact);
bool is_primitive(const Gf2Poly& f, const MersenneFactorization& fact);
bool is_primitive(const Gf2Poly& f, const Limits& limits = {});

/// All primitive polynomials of degree n in ascending coefficient order.
std::vector<Gf2Poly> enumerate_primitive(int n, const Limits& limits = {});

/// Phi(2^n - 1) / n.
std::uint64_t count_primitive(int n, const Limits& limits = {});

}  // namespace gf2max
