#include <doctest.h>

#include <numeric>
#include <random>

#include "gf2max/poly.hpp"
#include "oracles.hpp"

using namespace gf2max;

namespace {

Gf2Poly P(const char* text) { return parse_poly(text); }

}  // namespace

TEST_SUITE("gf2poly") {

TEST_CASE("poly_add")
{
    CHECK(poly_add(P("x+1"), P("x+1")).is_zero());
    CHECK(poly_add(P("x^3+x+1"), P("x^3+x^2+1")) == P("x^2+x"));
    CHECK(poly_add(P("x^5+x^2"), Gf2Poly()) == P("x^5+x^2"));
}

TEST_CASE("zero polynomial has no degree")
{
    CHECK_FALSE(Gf2Poly().degree().has_value());
    CHECK(Gf2Poly(1).degree() == 0u);
    CHECK(Gf2Poly::monomial(130).degree() == 130u);
    CHECK((Gf2Poly::monomial(130) + Gf2Poly::monomial(130)).is_zero());
}

TEST_CASE("poly_mulmod")
{
    CHECK(poly_mulmod(P("x"), P("x"), P("x^2+x+1")) == P("x+1"));
    CHECK(poly_mulmod(P("x^2"), P("x"), P("x^3+x+1")) == P("x+1"));
    CHECK(poly_mulmod(P("x^4+x"), Gf2Poly::one(), P("x^3+x+1")) == poly_mod(P("x^4+x"), P("x^3+x+1")));
    CHECK_THROWS_WITH_AS(poly_mulmod(P("x"), P("x"), Gf2Poly()), "invalid modulus", std::invalid_argument);
    CHECK_THROWS_WITH_AS(poly_mulmod(P("x"), P("x"), Gf2Poly::one()), "invalid modulus", std::invalid_argument);
}

TEST_CASE("poly_powmod")
{
    const Gf2Poly f1 = P("x^3+x+1");
    CHECK(poly_powmod(Gf2Poly::x(), 7, f1).is_one());
    CHECK(poly_powmod(P("x^2+1"), 0, f1).is_one());
    CHECK(poly_powmod(Gf2Poly::x(), 2, f1) == P("x^2"));
    // Exponents past 64 bits.
    const BigInt big = (BigInt(1) << 100) * 7;
    CHECK(poly_powmod(Gf2Poly::x(), big, f1).is_one());
}

TEST_CASE("poly_gcd")
{
    CHECK(poly_gcd(P("x^2+x"), P("x")) == P("x"));
    CHECK(poly_gcd(P("x^4+x^2+1"), P("x^4+x^2+1")) == P("x^4+x^2+1"));
    CHECK(poly_gcd(P("x^3+x+1"), P("x")).is_one());
    CHECK(poly_gcd(P("x^3+x+1"), Gf2Poly()) == P("x^3+x+1"));
    CHECK_THROWS_AS(poly_gcd(Gf2Poly(), Gf2Poly()), std::invalid_argument);
}

TEST_CASE("is_irreducible examples")
{
    CHECK(is_irreducible(P("x^3+x+1")));
    CHECK_FALSE(is_irreducible(P("x^2")));
    CHECK_FALSE(is_irreducible(P("x^4+x^2+1")));
    CHECK(is_irreducible(P("x")));
    CHECK(is_irreducible(P("x+1")));
    CHECK_THROWS_WITH_AS(is_irreducible(Gf2Poly::one()), "degree must be positive", std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(Gf2Poly()), std::invalid_argument);
}

TEST_CASE("is_irreducible agrees with trial division for all polynomials of degree <= 12")
{
    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t lo = std::uint64_t{1} << n;
        for (std::uint64_t bits = lo; bits < 2 * lo; ++bits) {
            if (is_irreducible(Gf2Poly(bits)) != oracle::irreducible_by_trial_division(bits)) {
                FAIL_CHECK("mismatch at " << bits);
            }
        }
    }
}

TEST_CASE("is_primitive")
{
    CHECK(is_primitive(P("x^3+x+1"), factor_mersenne(3)));
    CHECK_FALSE(is_primitive(P("x^4+x^3+x^2+x+1"), factor_mersenne(4)));
    CHECK(is_irreducible(P("x^4+x^3+x^2+x+1")));
    CHECK_FALSE(is_primitive(P("x^2"), factor_mersenne(2)));
    CHECK(is_primitive(P("x+1"), factor_mersenne(1)));
    CHECK_FALSE(is_primitive(P("x"), factor_mersenne(1)));
    CHECK_THROWS_AS(is_primitive(P("x^3+x+1"), factor_mersenne(4)), std::invalid_argument);

    const auto why = primitivity_failure(P("x^4+x^3+x^2+x+1"), factor_mersenne(4));
    REQUIRE(why.has_value());
    CHECK(why->find("(2^4-1)/3") != std::string::npos);
    CHECK(primitivity_failure(P("x^4+x^2+1"), factor_mersenne(4)) == "not irreducible");
}

TEST_CASE("enumerate_primitive")
{
    CHECK(enumerate_primitive(3) == std::vector<Gf2Poly>{P("x^3+x+1"), P("x^3+x^2+1")});
    CHECK(enumerate_primitive(2) == std::vector<Gf2Poly>{P("x^2+x+1")});
    CHECK(enumerate_primitive(4).size() == 2);
    CHECK(enumerate_primitive(1) == std::vector<Gf2Poly>{P("x+1")});
    CHECK_THROWS_WITH_AS(enumerate_primitive(17), doctest::Contains("enumeration cap exceeded"), CapExceeded);
    Limits small;
    small.enumeration = 5;
    CHECK_THROWS_AS(enumerate_primitive(6, small), CapExceeded);
    CHECK_THROWS_AS(enumerate_primitive(0), std::invalid_argument);
}

TEST_CASE("enumerated polynomials are irreducible, have x of order 2^n-1, and match the count")
{
    for (int n = 1; n <= 12; ++n) {
        const auto polys = enumerate_primitive(n);
        CHECK(polys.size() == count_primitive(n));
        CHECK(std::is_sorted(polys.begin(), polys.end()));
        const BigInt order = (BigInt(1) << n) - 1;
        for (const auto& f : polys) {
            CHECK(is_irreducible(f));
            CHECK(poly_powmod(Gf2Poly::x(), order, f).is_one());
        }
    }
}

TEST_CASE("totient")
{
    CHECK(totient(7) == 6);
    CHECK(totient(1) == 1);
    CHECK(totient(15) == 8);
    for (std::uint64_t m = 1; m <= 2000; ++m) {
        std::uint64_t coprime = 0;
        for (std::uint64_t k = 1; k <= m; ++k)
            coprime += std::gcd(k, m) == 1;
        REQUIRE(totient(m) == coprime);
    }
}

TEST_CASE("factor_mersenne")
{
    const auto f4 = factor_mersenne(4);
    CHECK(f4.value == 15);
    CHECK(f4.factors == std::vector<std::pair<std::uint64_t, int>>{{3, 1}, {5, 1}});
    CHECK(factor_mersenne(11).factors == std::vector<std::pair<std::uint64_t, int>>{{23, 1}, {89, 1}});
    CHECK(factor_mersenne(1).factors.empty());
    CHECK(factor_mersenne(1).value == 1);
    CHECK(factor_mersenne(6).factors == std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {7, 1}});

    for (int n = 1; n <= 64; ++n) {
        const auto fact = factor_mersenne(n);
        CHECK(fact.product() == fact.value);
        const unsigned __int128 expected = (static_cast<unsigned __int128>(1) << n) - 1;
        CHECK(fact.value == static_cast<std::uint64_t>(expected));
        for (std::size_t i = 0; i < fact.factors.size(); ++i) {
            CHECK(is_prime(fact.factors[i].first));
            if (i)
                CHECK(fact.factors[i - 1].first < fact.factors[i].first);
        }
    }
    CHECK_THROWS_WITH_AS(factor_mersenne(65), doctest::Contains("factoring cap exceeded"), CapExceeded);
}

TEST_CASE("factoring budget is reported, never a partial result")
{
    Limits tiny;
    tiny.factoring_iterations = 1;
    bool threw = false;
    for (int n = 40; n <= 64; ++n) {
        try {
            const auto fact = factor_mersenne(n, tiny);
            CHECK(fact.product() == fact.value);
        } catch (const std::runtime_error& e) {
            threw = true;
            CHECK(std::string(e.what()) == "factoring budget exceeded");
        }
    }
    CHECK(threw);
}

TEST_CASE("count_primitive")
{
    CHECK(count_primitive(3) == 2);
    CHECK(count_primitive(2) == 1);
    CHECK(count_primitive(8) == 16);
    CHECK(count_primitive(1) == 1);
    CHECK(count_primitive(64) * 64 == totient(factor_mersenne(64)));
}

TEST_CASE("text forms")
{
    CHECK(to_string(P("x^3+x+1")) == "x^3+x+1");
    CHECK(to_integer_string(P("x^3+x+1")) == "11");
    CHECK(P("11") == P("x^3+x+1"));
    CHECK(P("0xb") == P("x^3+x+1"));
    CHECK(P(" x^3 + x + 1 ") == P("x^3+x+1"));
    CHECK(P("1+x+x^3") == P("x^3+x+1"));
    CHECK(to_string(Gf2Poly()) == "0");
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(P("x^^3"), std::invalid_argument);
    CHECK_THROWS_AS(P("y+1"), std::invalid_argument);
    CHECK_THROWS_AS(P(""), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Gf2Poly f = Gf2Poly::from_words({rng(), rng() & 0xffff});
        CHECK(parse_poly(to_string(f)) == f);
        CHECK(parse_poly(to_integer_string(f)) == f);
    }
}

TEST_CASE("ring laws at degree <= 16")
{
    std::mt19937_64 rng(11);
    const Gf2Poly m = P("x^17+x^3+1");
    for (int i = 0; i < 2000; ++i) {
        const Gf2Poly a(rng() & 0x1ffff), b(rng() & 0x1ffff), c(rng() & 0x1ffff);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(poly_mulmod(a, b + c, m) == poly_mulmod(a, b, m) + poly_mulmod(a, c, m));
        CHECK(poly_mul(a, b).to_u64() == oracle::clmul(a.to_u64(), b.to_u64()));
        const auto [q, r] = poly_divmod(poly_mul(a, b) + c, m);
        CHECK(poly_mul(q, m) + r == poly_mul(a, b) + c);
        CHECK((r.is_zero() || *r.degree() < 17));
    }
}

}  // TEST_SUITE
