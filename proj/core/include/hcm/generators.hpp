#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "hcm/colouring.hpp"

namespace hcm {

/// Sizes of the three vertex layers, one per colour 1, 2, 3. Vertices [0, a) form layer 1,
/// [a, a+b) layer 2 and the rest layer 3.
struct LayerSpec {
    int a = 0;
    int b = 0;
    int c = 0;

    int n() const noexcept { return a + b + c; }
    bool operator==(const LayerSpec&) const = default;
};

/// Each triple takes the smallest layer colour among its vertices.
Colouring layered_lowest_colour(const LayerSpec& layers);

/// Upper bounds on a matching of the layered colouring avoiding colour 1, 2 and 3.
std::array<int, 3> layered_upper_bounds(const LayerSpec& layers);

/// Layer sizes used by sharpness_instance(k).
LayerSpec sharpness_layers(int k);

/// Layered colouring on smallest_n_for(k) - 1 vertices with no 2-coloured matching of size k.
Colouring sharpness_instance(int k);

/// Name and version of the pseudo-random stream behind random_colouring.
inline constexpr std::string_view random_generator_id = "mt19937_64-cdf/1";

/// Independent colour per triple with probabilities proportional to `weights`.
/// The stream is std::mt19937_64 seeded with `seed`; each triple consumes one draw u in
/// [0,1) built from the top 53 bits and is compared against the cumulative weights.
Colouring random_colouring(int n, std::uint64_t seed, const std::array<double, 3>& weights);

struct ConjectureParams {
    int r = 3; // uniformity
    int t = 3; // colours in the colouring
    int s = 2; // colours allowed in the matching
    int k = 1; // matching size
};

/// Vertex count kr + floor((k-1)(t-s) / (1 + r + ... + r^(s-1))).
std::int64_t conjecture_bound(const ConjectureParams& p);

/// Named fixtures on 6 vertices: "FIX-A" (level-1 spread in colour 1), "FIX-B" (universal),
/// "FIX-C" (level-2 spread in colour 1).
Colouring fixture(std::string_view name);

} // namespace hcm
