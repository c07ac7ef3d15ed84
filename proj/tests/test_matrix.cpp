#include <doctest.h>

#include <random>

#include "gf2max/matrix.hpp"
#include "oracles.hpp"

using namespace gf2max;

namespace {

Gf2Mat M3(std::uint64_t code) { return decode_u64(3, code); }

const Gf2Poly kF1 = parse_poly("x^3+x+1");
const Gf2Poly kF2 = parse_poly("x^3+x^2+1");

}  // namespace

TEST_SUITE("gf2mat") {

TEST_CASE("mat_mul examples")
{
    const Gf2Mat a = companion(kF1);
    CHECK(Gf2Mat::identity(3) * a == a);
    CHECK(encode_u64(a * a) == 370);
    const Gf2Mat swap = Gf2Mat::from_rows({0b10, 0b01});
    CHECK((swap * swap).is_identity());
    CHECK_THROWS_AS(Gf2Mat::identity(2) * Gf2Mat::identity(3), std::invalid_argument);
}

TEST_CASE("mat_add examples")
{
    const Gf2Mat m = M3(301);
    CHECK((m + m).is_zero());
    CHECK(encode_u64(M3(172) + M3(273)) == 445);
    CHECK(m + Gf2Mat(3) == m);
    CHECK_THROWS_AS(Gf2Mat(2) + Gf2Mat(3), std::invalid_argument);
}

TEST_CASE("rows reject bits beyond column n-1")
{
    Gf2Mat m(3);
    CHECK_THROWS_AS(m.set_row(0, 0b1000), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Mat(0), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Mat(65), std::invalid_argument);
    CHECK_NOTHROW(Gf2Mat(64).set_row(63, ~std::uint64_t{0}));
}

TEST_CASE("word-parallel kernels equal the naive triple loop")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Gf2Mat a = oracle::random_matrix(n, rng), b = oracle::random_matrix(n, rng);
        const auto expected = oracle::multiply(oracle::to_dense(a), oracle::to_dense(b));
        REQUIRE(oracle::to_dense(kernels::mul_rowwise(a, b)) == expected);
        REQUIRE(oracle::to_dense(kernels::mul_four_russians(a, b)) == expected);
        REQUIRE(oracle::to_dense(a * b) == expected);
    }
}

TEST_CASE("multiplication is associative with identity")
{
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 8; ++n) {
        const Gf2Mat id = Gf2Mat::identity(n);
        for (int trial = 0; trial < 200; ++trial) {
            const Gf2Mat a = oracle::random_matrix(n, rng), b = oracle::random_matrix(n, rng),
                         c = oracle::random_matrix(n, rng);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * id == a);
            REQUIRE(id * a == a);
        }
    }
}

TEST_CASE("mat_inverse")
{
    CHECK(mat_inverse(Gf2Mat::identity(5)).is_identity());
    const Gf2Mat a = companion(kF1);
    CHECK((mat_inverse(a) * a).is_identity());
    CHECK_THROWS_WITH_AS(mat_inverse(Gf2Mat(3)), "singular", SingularMatrix);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Gf2Mat m = oracle::random_matrix(n, rng);
        if (mat_rank(m) < n) {
            CHECK_THROWS_AS(mat_inverse(m), SingularMatrix);
            CHECK_FALSE(is_invertible(m));
        } else {
            const Gf2Mat inv = mat_inverse(m);
            CHECK((m * inv).is_identity());
            CHECK((inv * m).is_identity());
        }
    }
}

TEST_CASE("mat_rank")
{
    CHECK(mat_rank(Gf2Mat::identity(3)) == 3);
    CHECK(mat_rank(Gf2Mat(3)) == 0);
    CHECK(mat_rank(M3(95)) == 3);
    CHECK(mat_rank(Gf2Mat::from_rows({0b11, 0b11})) == 1);
}

TEST_CASE("companion")
{
    CHECK(encode_u64(companion(kF1)) == 172);
    CHECK(encode_u64(companion(kF2)) == 396);
    CHECK(companion(parse_poly("x+1")) == Gf2Mat::from_rows({1}));
    CHECK_THROWS_AS(companion(Gf2Poly::one()), std::invalid_argument);
    CHECK_THROWS_AS(companion(Gf2Poly()), std::invalid_argument);
    CHECK(format_grid(companion(kF1), " / ") == "001 / 101 / 010");
}

TEST_CASE("char_poly examples")
{
    const Gf2Mat example = Gf2Mat::from_rows({0b010, 0b100, 0b011});  // [[0,1,0],[0,0,1],[1,1,0]]
    CHECK(char_poly(example) == kF1);
    for (int n = 1; n <= 10; ++n) {
        Gf2Poly expected = Gf2Poly::one();
        for (int i = 0; i < n; ++i)
            expected = expected * parse_poly("x+1");
        CHECK(char_poly(Gf2Mat::identity(n)) == expected);
    }
}

TEST_CASE("char_poly agrees with cofactor expansion")
{
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
            const Gf2Mat m = decode_u64(n, code);
            REQUIRE(char_poly(m).to_u64() == oracle::char_poly_by_cofactors(oracle::to_dense(m)));
        }
    std::mt19937_64 rng(4);
    for (int n = 4; n <= 5; ++n)
        for (int trial = 0; trial < 3000; ++trial) {
            const Gf2Mat m = oracle::random_matrix(n, rng);
            REQUIRE(char_poly(m).to_u64() == oracle::char_poly_by_cofactors(oracle::to_dense(m)));
        }
}

TEST_CASE("companion matrices have char and min poly f for every monic f of degree <= 8")
{
    for (int d = 1; d <= 8; ++d)
        for (std::uint64_t bits = std::uint64_t{1} << d; bits < (std::uint64_t{2} << d); ++bits) {
            const Gf2Poly f(bits);
            const Gf2Mat c = companion(f);
            REQUIRE(char_poly(c) == f);
            REQUIRE(min_poly(c) == f);
        }
}

TEST_CASE("min_poly examples")
{
    CHECK(min_poly(Gf2Mat::identity(3)) == parse_poly("x+1"));
    CHECK(min_poly(companion(kF1)) == kF1);
    CHECK(min_poly(Gf2Mat(2)) == Gf2Poly::x());
    // diag(J_2(1), 1): minimal polynomial (x+1)^2, characteristic (x+1)^3.
    const Gf2Mat jordan = Gf2Mat::from_rows({0b011, 0b010, 0b100});
    CHECK(min_poly(jordan) == parse_poly("x^2+1"));
    CHECK(char_poly(jordan) == parse_poly("x^3+x^2+x+1"));
}

TEST_CASE("Cayley-Hamilton and min_poly divides char_poly")
{
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 1000; ++trial) {
            const Gf2Mat a = oracle::random_matrix(n, rng);
            const Gf2Poly chi = char_poly(a);
            const Gf2Poly mu = min_poly(a);
            REQUIRE(poly_eval_at_matrix(chi, a).is_zero());
            REQUIRE(poly_eval_at_matrix(mu, a).is_zero());
            REQUIRE(poly_mod(chi, mu).is_zero());
        }
    for (int n : {17, 33, 64}) {
        const Gf2Mat a = oracle::random_matrix(n, rng);
        CHECK(poly_eval_at_matrix(char_poly(a), a).is_zero());
        CHECK(poly_mod(char_poly(a), min_poly(a)).is_zero());
    }
}

TEST_CASE("poly_eval_at_matrix")
{
    const Gf2Mat a = M3(301);
    CHECK(poly_eval_at_matrix(Gf2Poly::one(), a).is_identity());
    CHECK(poly_eval_at_matrix(Gf2Poly::x(), a) == a);
    CHECK(poly_eval_at_matrix(Gf2Poly(), a).is_zero());
    CHECK(poly_eval_at_matrix(parse_poly("x^2+1"), a) == a * a + Gf2Mat::identity(3));
}

TEST_CASE("cyclic vectors")
{
    const Gf2Mat a = companion(kF1);
    CHECK(krylov_rank(a, 1) == 3);
    CHECK(is_cyclic(a));
    CHECK(find_cyclic_vector(a) == Gf2Vec{1});
    CHECK_FALSE(is_cyclic(Gf2Mat::identity(3)));
    CHECK_FALSE(find_cyclic_vector(Gf2Mat::identity(3)).has_value());

    const auto fact = factor_mersenne(3);
    for (std::uint64_t code = 0; code < 512; ++code) {
        const Gf2Mat m = M3(code);
        const Gf2Poly chi = char_poly(m);
        const bool cyclic = is_cyclic(m);
        if (is_primitive(chi, fact))
            REQUIRE(cyclic);
        const auto v = find_cyclic_vector(m);
        REQUIRE(v.has_value() == cyclic);
        if (v)
            REQUIRE(krylov_rank(m, *v) == 3);
    }
}

TEST_CASE("cyclic matrix with no cyclic standard basis vector")
{
    // diag(1, companion(x^2+x+1)) has char = min = (x+1)(x^2+x+1), but e_0
    // spans only a line and e_1, e_2 only the 2-dimensional block.
    const Gf2Mat m = Gf2Mat::from_rows({0b001, 0b100, 0b110});
    REQUIRE(is_cyclic(m));
    for (int i = 0; i < 3; ++i)
        CHECK(krylov_rank(m, Gf2Vec{1} << i) < 3);
    const auto v = find_cyclic_vector(m);
    REQUIRE(v.has_value());
    CHECK(krylov_rank(m, *v) == 3);
}

TEST_CASE("mat_pow")
{
    const Gf2Mat a = companion(kF1);
    CHECK(mat_pow(a, std::uint64_t{0}).is_identity());
    CHECK(mat_pow(a, std::uint64_t{1}) == a);
    CHECK(mat_pow(a, std::uint64_t{7}).is_identity());
    CHECK(mat_pow(a, BigInt(1) << 90) == mat_pow(a, std::uint64_t{(std::uint64_t{1} << 30) % 7}));
}

TEST_CASE("mat_order")
{
    const Gf2Mat example = Gf2Mat::from_rows({0b010, 0b100, 0b011});
    CHECK(mat_order(example) == 7u);
    CHECK(mat_order(example, factor_mersenne(3)) == 7u);
    for (int n = 1; n <= 6; ++n)
        CHECK(mat_order(Gf2Mat::identity(n), factor_mersenne(n)) == 1u);
    CHECK(mat_order(companion(parse_poly("x^2+x+1"))) == 3u);
    CHECK_FALSE(mat_order(Gf2Mat(3)).has_value());

    // Order 5 divides 15: found through the factorization.
    CHECK(mat_order(companion(parse_poly("x^4+x^3+x^2+x+1")), factor_mersenne(4)) == 5u);
    // Order 2 does not divide 3: falls back to iteration.
    CHECK(mat_order(Gf2Mat::from_rows({0b11, 0b10}), factor_mersenne(2)) == 2u);
    CHECK_THROWS_AS(mat_order(Gf2Mat::identity(3), factor_mersenne(4)), std::invalid_argument);

    // x^24+x^7+x^2+x+1 is primitive: order 2^24-1 exceeds the iteration cap.
    const Gf2Poly p24 = parse_poly("x^24+x^7+x^2+x+1");
    REQUIRE(is_primitive(p24, factor_mersenne(24)));
    CHECK_THROWS_WITH_AS(mat_order(companion(p24)), "order cap exceeded", CapExceeded);
    CHECK(mat_order(companion(p24), factor_mersenne(24)) == (std::uint64_t{1} << 24) - 1);

    const Gf2Poly p64 = parse_poly("x^64+x^4+x^3+x+1");
    REQUIRE(is_primitive(p64, factor_mersenne(64)));
    CHECK(mat_order(companion(p64), factor_mersenne(64)) == ~std::uint64_t{0});
}

TEST_CASE("maximal order iff primitive characteristic polynomial (all 3x3 and 4x4)")
{
    for (int n = 3; n <= 4; ++n) {
        const auto fact = factor_mersenne(n);
        std::uint64_t maximal = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
            const Gf2Mat m = decode_u64(n, code);
            const auto order = mat_order(m, fact);
            const bool is_max = order == fact.value;
            maximal += is_max;
            REQUIRE(is_max == is_primitive(char_poly(m), fact));
            if (n == 3)
                REQUIRE(order.value_or(0) == oracle::order_by_iteration(oracle::to_dense(m)));
        }
        CHECK(maximal == (n == 3 ? 48u : 2688u));
    }
}

TEST_CASE("nonzero polynomials in A are invertible when char poly is irreducible")
{
    std::mt19937_64 rng(6);
    for (int n = 2; n <= 6; ++n) {
        int sampled = 0;
        while (sampled < 8) {
            const Gf2Mat a = oracle::random_matrix(n, rng);
            if (!is_irreducible(char_poly(a)))
                continue;
            ++sampled;
            for (std::uint64_t g = 1; g < (std::uint64_t{1} << n); ++g)
                REQUIRE(is_invertible(poly_eval_at_matrix(Gf2Poly(g), a)));
        }
    }
}

TEST_CASE("codec examples")
{
    CHECK(encode(Gf2Mat::identity(3)).code == 273);
    CHECK(encode(companion(kF1)).code == 172);
    CHECK(encode(companion(kF2)).code == 396);
    CHECK(decode({3, 511}) == Gf2Mat::from_rows({0b111, 0b111, 0b111}));
    CHECK_THROWS_AS(decode({3, 512}), std::out_of_range);
    CHECK_THROWS_AS(decode({3, -1}), std::out_of_range);
    CHECK_THROWS_AS(decode_u64(3, 512), std::out_of_range);
    CHECK(decode({8, ~std::uint64_t{0}}) == Gf2Mat::from_rows(std::vector<std::uint64_t>(8, 0xff)));

    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < 512; ++code)
        count += encode_u64(M3(code)) == code;
    CHECK(count == 512);

    // The generic code rule on n = 9 crosses 64 bits.
    Gf2Mat big(9);
    big.set(8, 8, true);
    CHECK(encode(big).code == BigInt(1) << 80);
    CHECK(format_code(big) == "0x100000000000000000000");
    CHECK(format_code(Gf2Mat::identity(3)) == "273");
}

TEST_CASE("codec round trip on random matrices")
{
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 10000; ++trial) {
            const Gf2Mat m = oracle::random_matrix(n, rng);
            const MatCode c = encode(m);
            REQUIRE(c.code == oracle::code_of(oracle::to_dense(m)));
            REQUIRE(decode(c) == m);
        }
    for (int n : {9, 20, 64})
        for (int trial = 0; trial < 200; ++trial) {
            const Gf2Mat m = oracle::random_matrix(n, rng);
            REQUIRE(decode(encode(m)) == m);
            REQUIRE(parse_matrix(format_code(m), n) == m);
        }
}

TEST_CASE("code order matches matrix ordering")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5000; ++trial) {
        const Gf2Mat a = oracle::random_matrix(4, rng), b = oracle::random_matrix(4, rng);
        REQUIRE((a < b) == (encode_u64(a) < encode_u64(b)));
    }
}

TEST_CASE("matrix text forms")
{
    const Gf2Mat a = companion(kF1);
    CHECK(parse_matrix("172") == a);
    CHECK(parse_matrix("172", 3) == a);
    CHECK(parse_matrix("0xac", 3) == a);
    CHECK(parse_matrix("001\n101\n010") == a);
    CHECK(parse_matrix("001 / 101 / 010") == a);
    CHECK(parse_matrix("001;101;010") == a);
    CHECK(parse_matrix("172", 4) == decode_u64(4, 172));
    CHECK(parse_matrix("1") == Gf2Mat::identity(1));
    CHECK(parse_matrix(format_grid(a)) == a);
    CHECK_THROWS_AS(parse_matrix("001/101"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("001/121/010"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("001/101/010", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("512", 3), std::out_of_range);
    CHECK_THROWS_AS(parse_matrix("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(""), std::invalid_argument);
}

}  // TEST_SUITE
