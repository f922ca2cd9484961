#pragma once

#include <cstdint>

#include "hcm/errors.hpp"

namespace hcm {

/// Guaranteed size of a 2-coloured matching on n vertices: floor(4(n+1)/13).
constexpr std::int64_t m_bound(std::int64_t n)
{
    if (n < 0)
        throw InputError("m_bound: negative vertex count");
    return 4 * (n + 1) / 13;
}

/// Smallest n with m_bound(n) >= k, i.e. 3k + floor((k-1)/4).
constexpr std::int64_t smallest_n_for(std::int64_t k)
{
    if (k < 1)
        throw InputError("smallest_n_for: matching size must be at least 1");
    return 3 * k + (k - 1) / 4;
}

/// Size of a near-perfect matching on n vertices, floor(n/3).
constexpr std::int64_t near_perfect_size(std::int64_t n)
{
    if (n < 0)
        throw InputError("near_perfect_size: negative vertex count");
    return n / 3;
}

} // namespace hcm
