#include <algorithm>
#include <map>
#include <numeric>

#include "gf2max/poly.hpp"

namespace gf2max {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1u)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite `m`, or 0 once the iteration budget is spent.
u64 rho_factor(u64 m, u64& budget)
{
    for (u64 c = 1; budget > 0; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        auto step = [&](u64 v) { return (mulmod(v, v, m) + c) % m; };
        const u64 block = 128;
        for (u64 r = 1; g == 1 && budget > 0; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = step(y);
            for (u64 k = 0; k < r && g == 1 && budget > 0; k += block) {
                ys = y;
                const u64 lim = std::min(block, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, m);
                }
                budget = budget > lim ? budget - lim : 0;
                g = std::gcd(q, m);
            }
        }
        if (g == m) {
            // Backtrack one step at a time through the last block.
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, m);
            } while (g == 1);
        }
        if (g != m && g != 1)
            return g;
    }
    return 0;
}

void factor_into(u64 m, std::map<u64, int>& out, u64& budget)
{
    if (m == 1)
        return;
    if (is_prime(m)) {
        ++out[m];
        return;
    }
    const u64 d = rho_factor(m, budget);
    if (d == 0)
        throw std::runtime_error("factoring budget exceeded");
    factor_into(d, out, budget);
    factor_into(m / d, out, budget);
}

std::vector<std::pair<u64, int>> factor_u64(u64 m, u64 budget)
{
    std::map<u64, int> found;
    for (u64 p = 2; p < (u64{1} << 16) && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    }
    factor_into(m, found, budget);
    return {found.begin(), found.end()};
}

}  // namespace

bool is_prime(std::uint64_t value)
{
    if (value < 2)
        return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (value % p == 0)
            return value == p;
    }
    u64 d = value - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for every 64-bit input.
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = powmod(a, d, value);
        if (x == 1 || x == value - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, value);
            if (x == value - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

MersenneFactorization factor_mersenne(int n, const Limits& limits)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (n > limits.factoring || n > kMaxDimension)
        throw CapExceeded("factoring cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(std::min(limits.factoring, kMaxDimension)) + ")");

    MersenneFactorization fact;
    fact.n = n;
    fact.value = n == 64 ? ~u64{0} : (u64{1} << n) - 1;
    fact.factors = factor_u64(fact.value, limits.factoring_iterations);
    if (fact.product() != fact.value)
        throw std::runtime_error("factoring budget exceeded");
    return fact;
}

std::uint64_t totient(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("totient of zero");
    u64 result = m;
    for (auto [p, e] : factor_u64(m, Limits{}.factoring_iterations))
        result = result / p * (p - 1);
    return result;
}

std::uint64_t totient(const MersenneFactorization& fact)
{
    u64 result = fact.value;
    for (auto [p, e] : fact.factors)
        result = result / p * (p - 1);
    return result;
}

}  // namespace gf2max
