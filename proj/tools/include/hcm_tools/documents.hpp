#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hcm/oracle.hpp"
#include "hcm/trace.hpp"

namespace hcm::tools {

using Json = nlohmann::ordered_json;

struct MatchingDocument {
    int n = 0;
    std::string source;  // "solve" or "oracle"
    Matching matching;
    ColourSet colours;   // colours the matching is allowed to use
    std::optional<std::string> trace_path;
    // Oracle runs only.
    std::optional<bool> exact;
    std::optional<bool> budget_hit;
    std::optional<std::uint64_t> explored;
};

/// Fixed key order and no timestamps, so equal runs give equal bytes.
Json to_json(const MatchingDocument& doc);
MatchingDocument matching_document_from_json(const Json& j);

/// One JSON object per line: a header line with n, then one line per event.
std::string trace_to_jsonl(const Trace& trace);
Trace trace_from_jsonl(const std::string& text);

Json to_json(const Triple& t);
Json to_json(VertexSet s);
Json to_json(const Matching& m);

} // namespace hcm::tools
