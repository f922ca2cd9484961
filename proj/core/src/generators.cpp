#include "hcm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <tuple>

#include "hcm/bounds.hpp"

namespace hcm {

Colouring layered_lowest_colour(const LayerSpec& layers)
{
    if (layers.a < 0 || layers.b < 0 || layers.c < 0)
        throw InputError("layer sizes must be nonnegative");
    const int n = layers.n();
    if (n < 3)
        throw InstanceError("layered colouring needs at least 3 vertices, got " + std::to_string(n));
    if (n > max_vertices)
        throw BoundsError("layered colouring supports at most 64 vertices");
    // The lowest vertex of a triple carries the lowest layer colour.
    return Colouring::from_function(n, [&](const Triple& t) {
        if (t.i < layers.a)
            return Colour(1);
        if (t.i < layers.a + layers.b)
            return Colour(2);
        return Colour(3);
    });
}

std::array<int, 3> layered_upper_bounds(const LayerSpec& layers)
{
    const int n = layers.n();
    return {(layers.b + layers.c) / 3, layers.a + layers.c / 3, std::min(layers.a + layers.b, n / 3)};
}

LayerSpec sharpness_layers(int k)
{
    if (k < 2)
        throw InputError("sharpness instances need k >= 2");
    const int cap = k - 1;
    std::optional<LayerSpec> best;
    auto rank = [](const LayerSpec& s) {
        const bool all_nonempty = s.a > 0 && s.b > 0 && s.c > 0;
        // larger n first, then all three layers present, then smaller a, then smaller b
        return std::tuple(s.n(), all_nonempty ? 1 : 0, -s.a, -s.b);
    };
    for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= 3 * k; ++b) {
            std::optional<int> c_max;
            for (int c = 0; c <= 3 * k + 3; ++c) {
                auto bounds = layered_upper_bounds({a, b, c});
                if (*std::max_element(bounds.begin(), bounds.end()) <= cap)
                    c_max = c;
            }
            if (!c_max)
                continue;
            LayerSpec s{a, b, *c_max};
            if (!best || rank(s) > rank(*best))
                best = s;
        }
    }
    return *best;
}

Colouring sharpness_instance(int k)
{
    return layered_lowest_colour(sharpness_layers(k));
}

Colouring random_colouring(int n, std::uint64_t seed, const std::array<double, 3>& weights)
{
    if (n < 3)
        throw InstanceError("random colouring needs at least 3 vertices, got " + std::to_string(n));
    if (n > max_vertices)
        throw BoundsError("random colouring supports at most 64 vertices");
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0) || !std::isfinite(w))
            throw InputError("colour weights must be finite and nonnegative");
        total += w;
    }
    if (total <= 0)
        throw InputError("colour weights must not all be zero");

    const double first = weights[0];
    const double second = weights[0] + weights[1];
    std::mt19937_64 engine(seed);
    std::vector<std::uint8_t> table(triple_count(n));
    for (auto& entry : table) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        const double x = u * total;
        entry = x < first ? 1 : (x < second ? 2 : 3);
    }
    return Colouring(n, std::move(table));
}

std::int64_t conjecture_bound(const ConjectureParams& p)
{
    if (p.r < 2 || p.k < 1 || p.s < 1 || p.s > p.t)
        throw InputError("conjecture parameters need r >= 2, k >= 1 and 1 <= s <= t");
    std::int64_t denominator = 0;
    std::int64_t power = 1;
    for (int i = 0; i < p.s; ++i) {
        denominator += power;
        power *= p.r;
    }
    return std::int64_t{p.k} * p.r + (std::int64_t{p.k} - 1) * (p.t - p.s) / denominator;
}

Colouring fixture(std::string_view name)
{
    struct Entry {
        Triple t;
        int colour;
    };
    std::vector<Entry> entries;
    if (name == "FIX-A")
        entries = {{Triple(3, 4, 5), 2}, {Triple(1, 2, 5), 3}};
    else if (name == "FIX-B")
        entries = {{Triple(0, 1, 3), 2}, {Triple(2, 4, 5), 2}, {Triple(0, 1, 4), 3}, {Triple(2, 3, 5), 3}};
    else if (name == "FIX-C")
        entries = {{Triple(3, 4, 5), 2}, {Triple(2, 4, 5), 3}};
    else
        throw InputError("unknown fixture '" + std::string(name) + "' (expected FIX-A, FIX-B or FIX-C)");
    return Colouring::from_function(6, [&](const Triple& t) {
        for (const Entry& e : entries)
            if (e.t == t)
                return Colour(e.colour);
        return Colour(1);
    });
}

} // namespace hcm
