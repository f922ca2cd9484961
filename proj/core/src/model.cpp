#include <algorithm>
#include <stdexcept>

#include "hcm/colour.hpp"
#include "hcm/colouring.hpp"
#include "hcm/triple.hpp"
#include "hcm/vertex_set.hpp"

namespace hcm {

std::string ColourSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for_each([&](Colour c) {
        if (!first)
            out += ',';
        out += std::to_string(c.value());
        first = false;
    });
    return out + "}";
}

std::string VertexSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Triple Triple::of(VertexSet s)
{
    if (s.size() != 3)
        throw InputError("a triple needs exactly 3 vertices, got " + s.to_string());
    auto v = s.to_vector();
    return Triple(v[0], v[1], v[2]);
}

std::string Triple::to_string() const
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Triple unrank_triple(std::uint64_t rank, int n)
{
    if (n < 3 || n > max_vertices || rank >= triple_count(n))
        throw BoundsError("unrank_triple: rank " + std::to_string(rank) + " out of range for n=" + std::to_string(n));
    // Largest k with C(k,3) <= rank, then largest j with C(j,2) <= remainder.
    int k = 2;
    while (k + 1 < n && binomial(k + 1, 3) <= rank)
        ++k;
    rank -= binomial(k, 3);
    int j = 1;
    while (j + 1 < k && binomial(j + 1, 2) <= rank)
        ++j;
    rank -= binomial(j, 2);
    return Triple(static_cast<Vertex>(rank), j, k);
}

namespace {

void check_vertex_count(int n)
{
    if (n < 0 || n > max_vertices)
        throw BoundsError("vertex count must be in [0, 64], got " + std::to_string(n));
}

} // namespace

Colouring::Colouring(int n, Colour fill) : n_(n)
{
    check_vertex_count(n);
    table_.assign(triple_count(n), static_cast<std::uint8_t>(fill.value()));
}

Colouring::Colouring(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table))
{
    check_vertex_count(n);
    if (table_.size() != triple_count(n))
        throw InputError("colour table has " + std::to_string(table_.size()) + " entries, expected C(" + std::to_string(n) +
                         ",3) = " + std::to_string(triple_count(n)));
    for (std::size_t r = 0; r < table_.size(); ++r)
        if (table_[r] < 1 || table_[r] > 3)
            throw InputError("invalid colour " + std::to_string(int(table_[r])) + " at rank " + std::to_string(r));
}

Colouring Colouring::from_function(int n, const std::function<Colour(const Triple&)>& colour_of)
{
    check_vertex_count(n);
    std::vector<std::uint8_t> table;
    table.reserve(triple_count(n));
    for (Vertex k = 2; k < n; ++k)
        for (Vertex j = 1; j < k; ++j)
            for (Vertex i = 0; i < j; ++i)
                table.push_back(static_cast<std::uint8_t>(colour_of(Triple(i, j, k)).value()));
    return Colouring(n, std::move(table));
}

Colour Colouring::colour(const Triple& t) const
{
    if (t.k >= n_)
        throw BoundsError("triple " + t.to_string() + " outside a colouring on " + std::to_string(n_) + " vertices");
    return Colour(raw(t.i, t.j, t.k));
}

ColourSet Colouring::colours_within(VertexSet s) const
{
    unsigned bits = 0;
    const auto v = s.to_vector();
    for (std::size_t c = 2; c < v.size(); ++c)
        for (std::size_t b = 1; b < c; ++b)
            for (std::size_t a = 0; a < b; ++a) {
                bits |= 1u << (raw(v[a], v[b], v[c]) - 1);
                if (bits == 0b111)
                    return ColourSet::full();
            }
    return ColourSet::from_bits(bits);
}

Colouring Colouring::to_canonical(const ColourFrame& frame) const
{
    std::array<std::uint8_t, 4> map{0, 0, 0, 0};
    for (Colour c : Colour::all())
        map[static_cast<std::size_t>(c.value())] = static_cast<std::uint8_t>(frame.to_canonical(c).value());
    std::vector<std::uint8_t> table(table_.size());
    std::transform(table_.begin(), table_.end(), table.begin(), [&](std::uint8_t v) { return map[v]; });
    return Colouring(n_, std::move(table));
}

Colouring Colouring::induced(VertexSet keep) const
{
    if (!keep.is_subset_of(vertices()))
        throw BoundsError("induced: vertex set " + keep.to_string() + " not inside the colouring");
    const auto v = keep.to_vector();
    return from_function(static_cast<int>(v.size()), [&](const Triple& t) {
        return Colour(raw(v[static_cast<std::size_t>(t.i)], v[static_cast<std::size_t>(t.j)], v[static_cast<std::size_t>(t.k)]));
    });
}

} // namespace hcm
