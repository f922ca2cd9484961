#include "proof.hpp"

namespace hcm::detail {

Proof::Proof(const Colouring& actual, ColourFrame frame, Trace* trace, std::optional<Colour> spread_colour)
    : actual_(actual), frame_(frame), canon_(actual.to_canonical(frame)), trace_(trace), spread_colour_(spread_colour)
{
}

void Proof::record(const Triple& t)
{
    if (trace_)
        pending_.push_back(Claim{t, actual_.colour(t)});
}

void Proof::require(const Triple& t, int expected, VertexSet involved, const std::string& what)
{
    if (colour(t) != expected)
        fail(involved | t.vertices(), what + ": " + t.to_string() + " should have colour " +
                                          std::to_string(to_actual(expected).value()));
    record(t);
}

void Proof::require_not(const Triple& t, int excluded, VertexSet involved, const std::string& what)
{
    if (colour(t) == excluded)
        fail(involved | t.vertices(), what + ": " + t.to_string() + " should not have colour " +
                                          std::to_string(to_actual(excluded).value()));
    record(t);
}

void Proof::require_clique(VertexSet s, int expected, VertexSet involved, const std::string& what)
{
    if (auto bad = is_clique(canon_, s, Colour(expected)))
        fail(involved | bad->vertices(), what + ": " + s.to_string() + " is not a clique, " + bad->to_string() +
                                             " breaks it");
}

void Proof::fail(VertexSet involved, const std::string& what) const
{
    if (involved.size() <= 14)
        if (auto w = find_witness(actual_, involved, spread_colour_)) {
            w->context = what + "; " + w->context;
            throw Escalation{std::move(*w)};
        }
    throw FaithfulnessError(what + " (no witness inside " + involved.to_string() + ")");
}

SpreadInfo Proof::to_canonical(const SpreadInfo& s) const
{
    SpreadInfo out = s;
    out.colour = frame_.to_canonical(s.colour);
    if (!frame_.preserves_orientation())
        std::swap(out.plus, out.minus);
    return out;
}

SpreadInfo Proof::to_actual(const SpreadInfo& s) const
{
    SpreadInfo out = s;
    out.colour = frame_.to_actual(s.colour);
    if (!frame_.preserves_orientation())
        std::swap(out.plus, out.minus);
    return out;
}

Matching Proof::finish(Matching m, int avoided_canonical) const
{
    m.avoided = to_actual(avoided_canonical);
    return m;
}

TraceEvent* Proof::emit(EventKind kind, std::string tag)
{
    if (!trace_)
        return nullptr;
    TraceEvent& e = trace_->add(kind, std::move(tag));
    e.claims = std::move(pending_);
    pending_.clear();
    return &e;
}

std::optional<Colour> unused_colour(const Colouring& c, const Matching& m)
{
    const ColourSet used = m.colours_used(c);
    for (Colour g : Colour::all())
        if (!used.contains(g))
            return g;
    return std::nullopt;
}

} // namespace hcm::detail
