#include "hcm_tools/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hcm::tools {

namespace {

[[noreturn]] void malformed(int line, const std::string& what)
{
    throw InputError("instance line " + std::to_string(line) + ": " + what);
}

} // namespace

InstanceFile parse_instance(std::string_view text)
{
    InstanceFile out;
    int line_no = 0;
    int header = 0;
    int n = 0;
    std::vector<std::uint8_t> digits;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') {
            out.comments.emplace_back(line);
            continue;
        }
        if (header == 0) {
            if (line != instance_magic)
                malformed(line_no, "expected header '" + std::string(instance_magic) + "'");
            ++header;
            continue;
        }
        if (header == 1) {
            if (line.size() < 3 || line.substr(0, 2) != "n ")
                malformed(line_no, "expected 'n <N>'");
            const auto digits_part = line.substr(2);
            auto [p, ec] = std::from_chars(digits_part.data(), digits_part.data() + digits_part.size(), n);
            if (ec != std::errc() || p != digits_part.data() + digits_part.size() || n < 0 || n > max_vertices)
                malformed(line_no, "vertex count must be an integer in [0, 64]");
            digits.reserve(triple_count(n));
            ++header;
            continue;
        }
        for (char ch : line) {
            if (ch < '1' || ch > '3')
                malformed(line_no, std::string("unexpected character '") + ch + "' in colour digits");
            digits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    if (header < 2)
        throw InputError("instance is missing its header");
    if (digits.size() != triple_count(n))
        throw InputError("instance has " + std::to_string(digits.size()) + " colour digits, expected C(" +
                         std::to_string(n) + ",3) = " + std::to_string(triple_count(n)));
    out.colouring = Colouring(n, std::move(digits));
    return out;
}

std::string serialize_instance(const InstanceFile& file)
{
    const Colouring& c = file.colouring;
    std::string out;
    out.reserve(c.table().size() + c.table().size() / digits_per_line + 64);
    out += instance_magic;
    out += "\nn " + std::to_string(c.n()) + "\n";
    for (const std::string& comment : file.comments)
        out += comment + "\n";
    std::size_t column = 0;
    for (std::uint8_t d : c.table()) {
        out += static_cast<char>('0' + d);
        if (++column == digits_per_line) {
            out += '\n';
            column = 0;
        }
    }
    if (column != 0)
        out += '\n';
    return out;
}

std::string read_text(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw InputError("failed writing '" + path + "'");
}

} // namespace hcm::tools
