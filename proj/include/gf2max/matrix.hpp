#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2max/common.hpp"
#include "gf2max/poly.hpp"

namespace gf2max {

/// A vector in GF(2)^n with n <= 64; bit j is component j.
using Gf2Vec = std::uint64_t;

inline constexpr Gf2Vec low_mask(int n)
{
    return n >= 64 ? ~Gf2Vec{0} : (Gf2Vec{1} << n) - 1;
}

/// Square matrix over GF(2) with each row packed into one word: bit j of
/// row i is the entry a_ij. Bits at column index >= n are always clear.
class Gf2Mat {
public:
    explicit Gf2Mat(int n);

    static Gf2Mat identity(int n);
    static Gf2Mat from_rows(std::vector<std::uint64_t> rows);

    int size() const { return n_; }
    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
    void set(int i, int j, bool value);
    std::uint64_t row(int i) const { return rows_[i]; }
    void set_row(int i, std::uint64_t bits);
    std::span<const std::uint64_t> rows() const { return rows_; }

    bool is_zero() const;
    bool is_identity() const;

    Gf2Mat& operator+=(const Gf2Mat& other);

    friend bool operator==(const Gf2Mat&, const Gf2Mat&) = default;
    // Matches the ordering of the integer codes for equal dimensions.
    friend std::strong_ordering operator<=>(const Gf2Mat& a, const Gf2Mat& b);

private:
    int n_;
    std::vector<std::uint64_t> rows_;
};

Gf2Mat mat_add(const Gf2Mat& a, const Gf2Mat& b);
Gf2Mat mat_mul(const Gf2Mat& a, const Gf2Mat& b);
Gf2Mat transpose(const Gf2Mat& m);

/// Column-vector action s -> A s.
Gf2Vec mat_apply(const Gf2Mat& m, Gf2Vec v);

inline Gf2Mat operator+(const Gf2Mat& a, const Gf2Mat& b) { return mat_add(a, b); }
inline Gf2Mat operator*(const Gf2Mat& a, const Gf2Mat& b) { return mat_mul(a, b); }

namespace kernels {
// Row-combination product: row i of AB is the xor of the rows of B selected by row i of A.
Gf2Mat mul_rowwise(const Gf2Mat& a, const Gf2Mat& b);
// Method of four Russians with 8-bit lookup tables over the rows of B.
Gf2Mat mul_four_russians(const Gf2Mat& a, const Gf2Mat& b);
}  // namespace kernels

int mat_rank(const Gf2Mat& m);
bool is_invertible(const Gf2Mat& m);
/// Gauss-Jordan inverse; throws SingularMatrix.
Gf2Mat mat_inverse(const Gf2Mat& m);

Gf2Mat mat_pow(const Gf2Mat& m, const BigInt& exponent);
Gf2Mat mat_pow(const Gf2Mat& m, std::uint64_t exponent);

/// Companion matrix of a monic f of degree n: ones on the subdiagonal and
/// the coefficients a_0..a_{n-1} in the last column.
Gf2Mat companion(const Gf2Poly& f);

/// det(xI + A), via reduction to upper Hessenberg form.
Gf2Poly char_poly(const Gf2Mat& m);

/// Monic generator of {g : g(A) v = 0}.
Gf2Poly krylov_annihilator(const Gf2Mat& m, Gf2Vec v);
/// Dimension of span{v, Av, A^2 v, ...}.
int krylov_rank(const Gf2Mat& m, Gf2Vec v);
/// lcm of the Krylov annihilators of the standard basis vectors.
Gf2Poly min_poly(const Gf2Mat& m);

bool is_cyclic(const Gf2Mat& m);
std::optional<Gf2Vec> find_cyclic_vector(const Gf2Mat& m);

Gf2Mat poly_eval_at_matrix(const Gf2Poly& g, const Gf2Mat& m);

/// Multiplicative order, or nullopt for a singular matrix.
///
/// With a factorization of 2^n - 1 and A^(2^n-1) = I the exact order is
/// found by dividing out prime factors. Otherwise powers are accumulated one
/// at a time, throwing CapExceeded("order cap exceeded") after
/// `limits.order_steps` steps.
std::optional<std::uint64_t> mat_order(const Gf2Mat& m, const MersenneFactorization& fact,
                                       const Limits& limits = {});
std::optional<std::uint64_t> mat_order(const Gf2Mat& m, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Integer codec: code = sum a_ij 2^(i n + j)

struct MatCode {
    int n = 0;
    BigInt code = 0;

    friend bool operator==(const MatCode&, const MatCode&) = default;
};

MatCode encode(const Gf2Mat& m);
Gf2Mat decode(const MatCode& c);

// Fast paths for n <= 8, where the code fits in 64 bits.
std::uint64_t encode_u64(const Gf2Mat& m);
Gf2Mat decode_u64(int n, std::uint64_t code);

/// Decimal for n <= 8, 0x-hex above.
std::string format_code(const MatCode& c);
std::string format_code(const Gf2Mat& m);

/// Rows of 0/1 characters (column 0 leftmost) joined by `row_separator`.
std::string format_grid(const Gf2Mat& m, std::string_view row_separator = "\n");

/// Accepts a code (decimal or 0x-hex) or a grid whose rows are separated by
/// newlines, '/', ';', ',' or spaces. A code without `n` is decoded at the
/// smallest dimension whose code space contains it.
Gf2Mat parse_matrix(std::string_view text, std::optional<int> n = std::nullopt);

}  // namespace gf2max
