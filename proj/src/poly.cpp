#include "gf2max/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace gf2max {

namespace {

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift)
{
    if (src.empty())
        return;
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = static_cast<unsigned>(shift % 64);
    const std::size_t needed = src.size() + word_shift + (bit_shift ? 1 : 0);
    if (dst.size() < needed)
        dst.resize(needed, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + word_shift] ^= src[i] << bit_shift;
        if (bit_shift)
            dst[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
    }
}

void trim_words(std::vector<std::uint64_t>& words)
{
    while (!words.empty() && words.back() == 0)
        words.pop_back();
}

std::optional<std::size_t> degree_of(const std::vector<std::uint64_t>& words)
{
    if (words.empty())
        return std::nullopt;
    return words.size() * 64 - 1 - static_cast<std::size_t>(std::countl_zero(words.back()));
}

void require_modulus(const Gf2Poly& m)
{
    auto d = m.degree();
    if (!d || *d == 0)
        throw std::invalid_argument("invalid modulus");
}

}  // namespace

Gf2Poly::Gf2Poly(std::uint64_t bits)
{
    if (bits)
        words_.push_back(bits);
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words)
{
    Gf2Poly p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

Gf2Poly Gf2Poly::from_bigint(const BigInt& bits)
{
    if (bits < 0)
        throw std::invalid_argument("negative polynomial code");
    std::vector<std::uint64_t> words;
    BigInt rest = bits;
    while (rest != 0) {
        words.push_back(static_cast<std::uint64_t>(rest & std::numeric_limits<std::uint64_t>::max()));
        rest >>= 64;
    }
    return from_words(std::move(words));
}

Gf2Poly Gf2Poly::monomial(std::size_t power)
{
    Gf2Poly p;
    p.set_coeff(power, true);
    return p;
}

std::optional<std::size_t> Gf2Poly::degree() const
{
    return degree_of(words_);
}

bool Gf2Poly::coeff(std::size_t power) const
{
    const std::size_t w = power / 64;
    return w < words_.size() && ((words_[w] >> (power % 64)) & 1u);
}

void Gf2Poly::set_coeff(std::size_t power, bool value)
{
    const std::size_t w = power / 64;
    if (w >= words_.size()) {
        if (!value)
            return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (power % 64);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    normalize();
}

std::uint64_t Gf2Poly::to_u64() const
{
    if (words_.size() > 1)
        throw std::overflow_error("polynomial does not fit in 64 bits");
    return words_.empty() ? 0 : words_[0];
}

BigInt Gf2Poly::to_bigint() const
{
    BigInt value = 0;
    for (std::size_t i = words_.size(); i-- > 0;) {
        value <<= 64;
        value |= words_[i];
    }
    return value;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other)
{
    if (words_.size() < other.words_.size())
        words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        words_[i] ^= other.words_[i];
    normalize();
    return *this;
}

Gf2Poly& Gf2Poly::shift_left(std::size_t count)
{
    if (words_.empty() || count == 0)
        return *this;
    std::vector<std::uint64_t> shifted;
    xor_shifted(shifted, words_, count);
    words_ = std::move(shifted);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b)
{
    if (auto c = a.words_.size() <=> b.words_.size(); c != 0)
        return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

void Gf2Poly::normalize()
{
    trim_words(words_);
}

Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b)
{
    Gf2Poly sum = a;
    sum += b;
    return sum;
}

Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b)
{
    std::vector<std::uint64_t> product;
    auto bw = b.words();
    for (std::size_t w = 0; w < bw.size(); ++w) {
        std::uint64_t bits = bw[w];
        while (bits) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            xor_shifted(product, a.words(), w * 64 + bit);
        }
    }
    return Gf2Poly::from_words(std::move(product));
}

std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b)
{
    const auto db = b.degree();
    if (!db)
        throw std::domain_error("division by zero polynomial");

    std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
    std::vector<std::uint64_t> quot;
    for (auto dr = degree_of(rem); dr && *dr >= *db; dr = degree_of(rem)) {
        const std::size_t shift = *dr - *db;
        xor_shifted(rem, b.words(), shift);
        trim_words(rem);
        if (quot.size() <= shift / 64)
            quot.resize(shift / 64 + 1, 0);
        quot[shift / 64] |= std::uint64_t{1} << (shift % 64);
    }
    return {Gf2Poly::from_words(std::move(quot)), Gf2Poly::from_words(std::move(rem))};
}

Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& m)
{
    const auto dm = m.degree();
    if (!dm)
        throw std::domain_error("division by zero polynomial");
    std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
    for (auto dr = degree_of(rem); dr && *dr >= *dm; dr = degree_of(rem)) {
        xor_shifted(rem, m.words(), *dr - *dm);
        trim_words(rem);
    }
    return Gf2Poly::from_words(std::move(rem));
}

Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m)
{
    require_modulus(m);
    return poly_mod(poly_mul(poly_mod(a, m), poly_mod(b, m)), m);
}

Gf2Poly poly_powmod(const Gf2Poly& a, const BigInt& exponent, const Gf2Poly& m)
{
    require_modulus(m);
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    Gf2Poly result = poly_mod(Gf2Poly::one(), m);
    if (exponent == 0)
        return result;
    const Gf2Poly base = poly_mod(a, m);
    const std::size_t top = boost::multiprecision::msb(exponent);
    for (std::size_t i = top + 1; i-- > 0;) {
        result = poly_mod(poly_mul(result, result), m);
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
            result = poly_mod(poly_mul(result, base), m);
    }
    return result;
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Gf2Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly poly_lcm(const Gf2Poly& a, const Gf2Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Gf2Poly();
    return poly_mul(poly_divmod(a, poly_gcd(a, b)).first, b);
}

bool is_irreducible(const Gf2Poly& f)
{
    const auto d = f.degree();
    if (!d || *d == 0)
        throw std::invalid_argument("degree must be positive");
    if (*d == 1)
        return true;
    if (!f.coeff(0))
        return false;

    // f is irreducible iff gcd(x^(2^i) - x, f) = 1 for every i <= deg/2.
    Gf2Poly power = Gf2Poly::x();
    for (std::size_t i = 1; i <= *d / 2; ++i) {
        power = poly_mulmod(power, power, f);
        if (!poly_gcd(f, power + Gf2Poly::x()).is_one())
            return false;
    }
    return true;
}

std::string to_string(const Gf2Poly& f)
{
    const auto d = f.degree();
    if (!d)
        return "0";
    std::string out;
    for (std::size_t i = *d + 1; i-- > 0;) {
        if (!f.coeff(i))
            continue;
        if (!out.empty())
            out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::string to_integer_string(const Gf2Poly& f)
{
    return to_decimal(f.to_bigint());
}

Gf2Poly parse_poly(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("empty polynomial");

    const bool numeric =
        std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'));
    if (numeric)
        return Gf2Poly::from_bigint(parse_bigint(text));

    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;

    auto malformed = [&] { return std::invalid_argument("malformed polynomial '" + std::string(text) + "'"); };

    Gf2Poly result;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        const std::size_t end = std::min(compact.find('+', pos), compact.size());
        const std::string_view term = std::string_view(compact).substr(pos, end - pos);
        std::size_t power;
        if (term == "1") {
            power = 0;
        } else if (term == "0") {
            pos = end + 1;
            continue;
        } else if (term == "x") {
            power = 1;
        } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
            const auto digits = term.substr(2);
            if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
                digits.size() > 6)
                throw malformed();
            power = std::stoul(std::string(digits));
        } else {
            throw malformed();
        }
        result += Gf2Poly::monomial(power);
        pos = end + 1;
    }
    return result;
}

// ---------------------------------------------------------------------------

std::uint64_t MersenneFactorization::product() const
{
    unsigned __int128 acc = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i)
            acc *= p;
    return static_cast<std::uint64_t>(acc);
}

std::optional<std::string> primitivity_failure(const Gf2Poly& f, const MersenneFactorization& fact)
{
    const auto d = f.degree();
    if (!d || static_cast<int>(*d) != fact.n || fact.n < 1)
        throw std::invalid_argument("polynomial degree does not match factorization of 2^" +
                                    std::to_string(fact.n) + "-1");
    if (!is_irreducible(f))
        return "not irreducible";
    const Gf2Poly one = Gf2Poly::one();
    if (poly_powmod(Gf2Poly::x(), BigInt(fact.value), f) != one)
        return "x^(2^" + std::to_string(fact.n) + "-1) is not 1 modulo f";
    for (auto [p, e] : fact.factors) {
        if (poly_powmod(Gf2Poly::x(), BigInt(fact.value / p), f) == one)
            return "x^((2^" + std::to_string(fact.n) + "-1)/" + std::to_string(p) +
                   ") is 1 modulo f, so x has order below 2^" + std::to_string(fact.n) + "-1";
    }
    return std::nullopt;
}

bool is_primitive(const Gf2Poly& f, const MersenneFactorization& fact)
{
    return !primitivity_failure(f, fact).has_value();
}

bool is_primitive(const Gf2Poly& f, const Limits& limits)
{
    const auto d = f.degree();
    if (!d || *d == 0)
        return false;
    if (*d > static_cast<std::size_t>(kMaxDimension))
        throw CapExceeded("factoring cap exceeded");
    return is_primitive(f, factor_mersenne(static_cast<int>(*d), limits));
}

std::vector<Gf2Poly> enumerate_primitive(int n, const Limits& limits)
{
    if (n < 1)
        throw std::invalid_argument("degree must be positive");
    if (n > limits.enumeration || n > kMaxDimension - 1)
        throw CapExceeded("enumeration cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(limits.enumeration) + ")");
    const auto fact = factor_mersenne(n, limits);

    std::vector<Gf2Poly> found;
    const std::uint64_t leading = std::uint64_t{1} << n;
    const std::uint64_t middles = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mid = 0; mid < middles; ++mid) {
        Gf2Poly candidate(leading | (mid << 1) | 1u);
        if (is_primitive(candidate, fact))
            found.push_back(std::move(candidate));
    }
    return found;
}

std::uint64_t count_primitive(int n, const Limits& limits)
{
    const auto fact = factor_mersenne(n, limits);
    return totient(fact) / static_cast<std::uint64_t>(n);
}

}  // namespace gf2max
