#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gf2max/matrix.hpp"

namespace gf2max {

/// Iterates s -> A s from a nonzero seed state.
class StateStream {
public:
    StateStream(Gf2Mat matrix, Gf2Vec seed);

    Gf2Vec next();

    const Gf2Mat& matrix() const { return matrix_; }
    Gf2Vec state() const { return state_; }
    std::uint64_t steps_emitted() const { return steps_; }

private:
    Gf2Mat matrix_;
    Gf2Vec state_;
    std::uint64_t steps_ = 0;
};

/// Least k >= 1 with A^k s = s. Throws CapExceeded("orbit cap exceeded")
/// after `cap` steps.
std::uint64_t orbit_length(const Gf2Mat& a, Gf2Vec seed, std::uint64_t cap = std::uint64_t{1} << 32);

/// True iff the orbit of e_0 visits all 2^n - 1 nonzero states. A singular
/// matrix never does. n is bounded by limits.full_period.
bool full_period_check(const Gf2Mat& a, const Limits& limits = {});

/// n characters of 0/1, component 0 leftmost.
std::string format_state(Gf2Vec v, int n);
Gf2Vec parse_state(std::string_view text, int n);

}  // namespace gf2max
