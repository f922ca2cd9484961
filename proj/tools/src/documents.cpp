#include "hcm_tools/documents.hpp"

#include <sstream>

namespace hcm::tools {

namespace {

Triple triple_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 3)
        throw InputError("a triple must be an array of three vertex ids");
    return Triple::sorted(j[0].get<int>(), j[1].get<int>(), j[2].get<int>());
}

VertexSet set_from_json(const Json& j)
{
    if (!j.is_array())
        throw InputError("a vertex set must be an array");
    VertexSet s;
    for (const Json& v : j)
        s.insert(v.get<int>());
    return s;
}

Matching matching_from_json(const Json& j)
{
    Matching m;
    for (const Json& t : j.at("triples"))
        m.triples.push_back(triple_from_json(t));
    if (j.contains("avoided") && !j["avoided"].is_null())
        m.avoided = Colour(j["avoided"].get<int>());
    return m;
}

Json colours_json(ColourSet s)
{
    Json out = Json::array();
    s.for_each([&](Colour c) { out.push_back(c.value()); });
    return out;
}

} // namespace

Json to_json(const Triple& t) { return Json::array({t.i, t.j, t.k}); }

Json to_json(VertexSet s)
{
    Json out = Json::array();
    for (Vertex v : s)
        out.push_back(v);
    return out;
}

Json to_json(const Matching& m)
{
    Json out;
    Json triples = Json::array();
    for (const Triple& t : m.triples)
        triples.push_back(to_json(t));
    out["triples"] = std::move(triples);
    out["avoided"] = m.avoided ? Json(m.avoided->value()) : Json(nullptr);
    return out;
}

Json to_json(const MatchingDocument& doc)
{
    Json j;
    j["format"] = "hcm-matching";
    j["version"] = 1;
    j["n"] = doc.n;
    j["source"] = doc.source;
    j["colours"] = colours_json(doc.colours);
    j["avoided"] = doc.matching.avoided ? Json(doc.matching.avoided->value()) : Json(nullptr);
    j["size"] = doc.matching.size();
    Json triples = Json::array();
    for (const Triple& t : doc.matching.triples)
        triples.push_back(to_json(t));
    j["triples"] = std::move(triples);
    j["trace"] = doc.trace_path ? Json(*doc.trace_path) : Json(nullptr);
    if (doc.exact)
        j["exact"] = *doc.exact;
    if (doc.budget_hit)
        j["budget_hit"] = *doc.budget_hit;
    if (doc.explored)
        j["explored"] = *doc.explored;
    return j;
}

MatchingDocument matching_document_from_json(const Json& j)
{
    try {
        if (j.value("format", "") != "hcm-matching")
            throw InputError("not a matching document");
        MatchingDocument doc;
        doc.n = j.at("n").get<int>();
        doc.source = j.value("source", "");
        doc.matching = matching_from_json(j);
        for (const Json& c : j.value("colours", Json::array()))
            doc.colours.insert(Colour(c.get<int>()));
        if (j.contains("trace") && j["trace"].is_string())
            doc.trace_path = j["trace"].get<std::string>();
        if (j.contains("exact"))
            doc.exact = j["exact"].get<bool>();
        if (j.contains("budget_hit"))
            doc.budget_hit = j["budget_hit"].get<bool>();
        if (j.contains("explored"))
            doc.explored = j["explored"].get<std::uint64_t>();
        if (j.contains("size") && j["size"].get<int>() != doc.matching.size())
            throw InputError("matching document size does not match its triples");
        return doc;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed matching document: ") + e.what());
    }
}

std::string trace_to_jsonl(const Trace& trace)
{
    std::string out;
    Json header;
    header["format"] = "hcm-trace";
    header["version"] = 1;
    header["n"] = trace.n;
    header["events"] = trace.events.size();
    out += header.dump() + "\n";
    for (const TraceEvent& e : trace.events) {
        Json j;
        j["event"] = std::string(to_string(e.kind));
        j["tag"] = e.tag;
        Json sets = Json::array();
        for (VertexSet s : e.sets)
            sets.push_back(to_json(s));
        j["sets"] = std::move(sets);
        Json colours = Json::array();
        for (Colour c : e.colours)
            colours.push_back(c.value());
        j["colours"] = std::move(colours);
        Json claims = Json::array();
        for (const Claim& c : e.claims)
            claims.push_back(Json::array({c.triple.i, c.triple.j, c.triple.k, c.colour.value()}));
        j["claims"] = std::move(claims);
        Json matchings = Json::array();
        for (const Matching& m : e.matchings)
            matchings.push_back(to_json(m));
        j["matchings"] = std::move(matchings);
        Json values = Json::object();
        for (const auto& [k, v] : e.values)
            values[k] = v;
        j["values"] = std::move(values);
        out += j.dump() + "\n";
    }
    return out;
}

Trace trace_from_jsonl(const std::string& text)
{
    Trace trace;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    int line_no = 0;
    try {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty())
                continue;
            const Json j = Json::parse(line);
            if (!header) {
                if (j.value("format", "") != "hcm-trace")
                    throw InputError("trace does not start with an hcm-trace header");
                trace.n = j.at("n").get<int>();
                header = true;
                continue;
            }
            const auto kind = event_kind_from_string(j.at("event").get<std::string>());
            if (!kind)
                throw InputError("unknown trace event '" + j.at("event").get<std::string>() + "'");
            TraceEvent& e = trace.add(*kind, j.value("tag", ""));
            for (const Json& s : j.value("sets", Json::array()))
                e.sets.push_back(set_from_json(s));
            for (const Json& c : j.value("colours", Json::array()))
                e.colours.push_back(Colour(c.get<int>()));
            for (const Json& c : j.value("claims", Json::array())) {
                if (!c.is_array() || c.size() != 4)
                    throw InputError("a claim is [i, j, k, colour]");
                e.claims.push_back(Claim{Triple(c[0].get<int>(), c[1].get<int>(), c[2].get<int>()),
                                         Colour(c[3].get<int>())});
            }
            for (const Json& m : j.value("matchings", Json::array()))
                e.matchings.push_back(matching_from_json(m));
            const Json values = j.value("values", Json::object());
            for (const auto& [k, v] : values.items())
                e.values.emplace_back(k, v.get<std::int64_t>());
        }
    } catch (const Json::exception& e) {
        throw InputError("trace line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!header)
        throw InputError("empty trace");
    return trace;
}

} // namespace hcm::tools
