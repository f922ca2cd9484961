#include "hcm/matching.hpp"

namespace hcm {

VertexSet Matching::covered() const
{
    VertexSet s;
    for (const Triple& t : triples)
        s |= t.vertices();
    return s;
}

ColourSet Matching::colours_used(const Colouring& c) const
{
    ColourSet used;
    for (const Triple& t : triples)
        used.insert(c.colour(t));
    return used;
}

void Matching::append(const Matching& other)
{
    triples.insert(triples.end(), other.triples.begin(), other.triples.end());
}

VerificationReport verify_matching(const Colouring& c, const Matching& m, int min_size)
{
    VerificationReport report;
    report.size = m.size();

    VertexSet seen;
    for (const Triple& t : m.triples) {
        if (t.k >= c.n()) {
            report.violations.push_back("triple " + t.to_string() + " uses a vertex outside 0.." + std::to_string(c.n() - 1));
            continue;
        }
        if (seen.intersects(t.vertices()))
            report.violations.push_back("triple " + t.to_string() + " overlaps an earlier triple on " +
                                        (seen & t.vertices()).to_string());
        seen |= t.vertices();
        const Colour colour = c.colour(t);
        report.colours_used.insert(colour);
        if (m.avoided && colour == *m.avoided)
            report.violations.push_back("triple " + t.to_string() + " has the avoided colour " +
                                        std::to_string(colour.value()));
    }
    if (report.colours_used.size() > 2)
        report.violations.push_back("matching uses 3 colours");
    if (report.size < min_size)
        report.violations.push_back("size " + std::to_string(report.size) + " is below the required " +
                                    std::to_string(min_size));
    report.valid = report.violations.empty();
    return report;
}

Matching greedy_matching(const Colouring& c, VertexSet vertices, ColourSet allowed)
{
    Matching m;
    if (allowed.empty())
        throw InputError("greedy_matching needs at least one allowed colour");
    VertexSet free = vertices;
    // Colex order: scan k ascending, then j, then i. Taking a triple only removes
    // candidates, so a single pass yields the lowest-colex-first maximal matching.
    const auto v = vertices.to_vector();
    for (std::size_t kc = 2; kc < v.size(); ++kc) {
        for (std::size_t jc = 1; jc < kc; ++jc) {
            for (std::size_t ic = 0; ic < jc; ++ic) {
                const Vertex a = v[ic], b = v[jc], k = v[kc];
                if (!free.contains(a) || !free.contains(b) || !free.contains(k))
                    continue;
                if (allowed.contains(Colour(c.raw(a, b, k)))) {
                    m.triples.emplace_back(a, b, k);
                    free -= VertexSet{a, b, k};
                }
            }
        }
    }
    return m;
}

Matching partition_into_triples(VertexSet vertices)
{
    Matching m;
    const auto v = vertices.to_vector();
    for (std::size_t i = 0; i + 3 <= v.size(); i += 3)
        m.triples.emplace_back(v[i], v[i + 1], v[i + 2]);
    return m;
}

} // namespace hcm
