#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hcm/colouring.hpp"

namespace hcm::tools {

inline constexpr std::string_view instance_magic = "HCG3 1";
inline constexpr int digits_per_line = 80;

/// Parsed instance file. Comment lines (starting with '#') are kept in order so that a
/// parse/serialize round trip reproduces the file.
struct InstanceFile {
    Colouring colouring{0, Colour(1)};
    std::vector<std::string> comments;
};

/// Throws InputError with a line number on malformed input.
InstanceFile parse_instance(std::string_view text);

/// Header, comments, then the colour digits in colex order wrapped at 80 columns.
std::string serialize_instance(const InstanceFile& file);

std::string read_text(const std::string& path);  // "-" reads stdin
void write_text(const std::string& path, const std::string& text);

inline InstanceFile read_instance(const std::string& path) { return parse_instance(read_text(path)); }

} // namespace hcm::tools
