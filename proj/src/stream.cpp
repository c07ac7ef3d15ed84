#include "gf2max/stream.hpp"

#include <stdexcept>
#include <vector>

namespace gf2max {

namespace {

void require_seed(const Gf2Mat& a, Gf2Vec seed)
{
    if (seed == 0)
        throw std::invalid_argument("seed must be nonzero");
    if (seed & ~low_mask(a.size()))
        throw std::invalid_argument("seed has components beyond n=" + std::to_string(a.size()));
}

}  // namespace

StateStream::StateStream(Gf2Mat matrix, Gf2Vec seed) : matrix_(std::move(matrix)), state_(seed)
{
    require_seed(matrix_, seed);
}

Gf2Vec StateStream::next()
{
    state_ = mat_apply(matrix_, state_);
    ++steps_;
    return state_;
}

std::uint64_t orbit_length(const Gf2Mat& a, Gf2Vec seed, std::uint64_t cap)
{
    require_seed(a, seed);
    if (!is_invertible(a))
        throw std::invalid_argument("orbit length needs an invertible matrix");
    Gf2Vec state = seed;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        state = mat_apply(a, state);
        if (state == seed)
            return k;
    }
    throw CapExceeded("orbit cap exceeded");
}

bool full_period_check(const Gf2Mat& a, const Limits& limits)
{
    const int n = a.size();
    if (n > limits.full_period)
        throw CapExceeded("full-period cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(limits.full_period) + ")");
    if (!is_invertible(a))
        return false;

    const std::uint64_t states = std::uint64_t{1} << n;
    std::vector<bool> visited(states, false);
    std::uint64_t distinct = 0;
    Gf2Vec state = 1;
    do {
        if (visited[state])
            break;
        visited[state] = true;
        ++distinct;
        state = mat_apply(a, state);
    } while (state != 1);
    return distinct == states - 1;
}

std::string format_state(Gf2Vec v, int n)
{
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((v >> i) & 1u)
            out[i] = '1';
    return out;
}

Gf2Vec parse_state(std::string_view text, int n)
{
    text = trim(text);
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("state '" + std::string(text) + "' must have " + std::to_string(n) +
                                    " characters of 0/1");
    Gf2Vec v = 0;
    for (int i = 0; i < n; ++i) {
        if (text[i] == '1')
            v |= Gf2Vec{1} << i;
        else if (text[i] != '0')
            throw std::invalid_argument("state '" + std::string(text) + "' must contain only 0/1");
    }
    return v;
}

}  // namespace gf2max
