#include <exception>
#include <thread>

#include "gf2max/group.hpp"

namespace gf2max {

namespace {

void scan_range(int n, std::uint64_t first, std::uint64_t last, const MersenneFactorization& fact,
                const Limits& limits, Census& out)
{
    for (std::uint64_t code = first; code < last; ++code) {
        const Gf2Mat m = decode_u64(n, code);
        if (!is_invertible(m) || !mat_pow(m, fact.value).is_identity())
            continue;
        if (mat_order(m, fact, limits) != fact.value)
            continue;
        const Gf2Poly chi = char_poly(m);
        ++out.buckets[chi];
        out.members[chi].push_back(code);
        ++out.total;
    }
}

}  // namespace

Census brute_force_census(int n, const Limits& limits, unsigned threads)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (n > limits.brute_force || n > 7)
        throw CapExceeded("brute-force cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(limits.brute_force) + ")");
    const auto fact = factor_mersenne(n, limits);
    const std::uint64_t space = std::uint64_t{1} << (n * n);
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, space));

    std::vector<Census> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](std::uint64_t w) {
        try {
            scan_range(n, space * w / workers, space * (w + 1) / workers, fact, limits, parts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    // Parts cover ascending code ranges, so appending keeps member lists sorted.
    Census census;
    census.n = n;
    census.scanned = space;
    for (auto& part : parts) {
        census.total += part.total;
        for (const auto& [poly, count] : part.buckets)
            census.buckets[poly] += count;
        for (auto& [poly, codes] : part.members) {
            auto& dst = census.members[poly];
            dst.insert(dst.end(), codes.begin(), codes.end());
        }
    }
    return census;
}

}  // namespace gf2max
