#include "wsp/format.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

namespace wsp {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void malformed(std::size_t line, const std::string& message)
{
    throw ParseError(ParseErrorKind::malformed, line, message);
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, std::string_view what)
{
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end || value > std::numeric_limits<Element>::max())
        malformed(line, "invalid " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

/// Splits on runs of blanks.
std::vector<std::string_view> tokens(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(s.substr(start, i - start));
    }
    return out;
}

struct Line
{
    std::size_t number;
    std::string_view text;
};

/// Content lines with comments and blank lines removed.
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++number;
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        if (line.empty() || line.front() == '#')
            continue;
        out.push_back({number, line});
    }
    return out;
}

struct Located
{
    RawPartition raw;
    std::size_t header_line = 0;
    std::vector<std::size_t> subset_lines;
};

Located parse_located(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        malformed(1, "empty input, expected 'wsp " + std::to_string(format_version) + "'");

    const auto magic = tokens(lines[0].text);
    if (magic.size() != 2 || magic[0] != "wsp")
        malformed(lines[0].number, "expected 'wsp <version>' header");
    if (parse_uint(magic[1], lines[0].number, "format version") != format_version)
        malformed(lines[0].number, "unsupported format version " + std::string(magic[1]));

    if (lines.size() < 2)
        malformed(lines[0].number + 1, "missing 's=<count> n=<order>' line");
    const auto& hdr = lines[1];
    const auto fields = tokens(hdr.text);
    if (fields.size() != 2 || !fields[0].starts_with("s=") || !fields[1].starts_with("n="))
        malformed(hdr.number, "expected 's=<count> n=<order>'");
    const auto s = parse_uint(fields[0].substr(2), hdr.number, "subset count");
    const auto n = parse_uint(fields[1].substr(2), hdr.number, "order");
    if (s == 0)
        malformed(hdr.number, "subset count must be positive");
    if (n == 0)
        malformed(hdr.number, "order must be positive");

    Located out;
    out.header_line = hdr.number;
    out.raw.n = n;
    for (std::size_t k = 2; k < lines.size(); ++k) {
        const auto& line = lines[k];
        const auto colon = line.text.find(':');
        if (colon == std::string_view::npos)
            malformed(line.number, "expected '<index>: <elements>'");
        const auto index = parse_uint(trim(line.text.substr(0, colon)), line.number, "subset index");
        if (index != out.raw.subsets.size() + 1)
            malformed(line.number, "expected subset index " + std::to_string(out.raw.subsets.size() + 1) + ", got "
                    + std::to_string(index));
        if (index > s)
            malformed(line.number, "more subset lines than s=" + std::to_string(s));
        std::vector<std::uint64_t> row;
        for (auto tok : tokens(line.text.substr(colon + 1)))
            row.push_back(parse_uint(tok, line.number, "element"));
        out.raw.subsets.push_back(std::move(row));
        out.subset_lines.push_back(line.number);
    }
    if (out.raw.subsets.size() != s) {
        const std::size_t at = lines.back().number + 1;
        malformed(at, "expected " + std::to_string(s) + " subset lines, found " + std::to_string(out.raw.subsets.size()));
    }
    return out;
}

} // namespace

std::string_view to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::malformed:
        return "malformed";
    case ParseErrorKind::duplicate_integer:
        return "duplicate-integer";
    case ParseErrorKind::missing_integer:
        return "missing-integer";
    case ParseErrorKind::out_of_range:
        return "out-of-range";
    case ParseErrorKind::empty_subset:
        return "empty-subset";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + message),
      kind_(kind), line_(line), detail_(message)
{
}

RawPartition parse_raw(std::string_view text)
{
    return parse_located(text).raw;
}

Partition parse_partition(std::string_view text)
{
    auto located = parse_located(text);
    const auto& raw = located.raw;
    std::vector<bool> seen(raw.n + 1, false);
    for (std::size_t i = 0; i < raw.subsets.size(); ++i) {
        const auto line = located.subset_lines[i];
        if (raw.subsets[i].empty())
            throw ParseError(ParseErrorKind::empty_subset, line, "subset " + std::to_string(i + 1) + " is empty");
        for (auto v : raw.subsets[i]) {
            if (v == 0 || v > raw.n)
                throw ParseError(ParseErrorKind::out_of_range, line,
                    "integer " + std::to_string(v) + " outside 1.." + std::to_string(raw.n));
            if (seen[v])
                throw ParseError(ParseErrorKind::duplicate_integer, line, "integer " + std::to_string(v) + " repeated");
            seen[v] = true;
        }
    }
    for (std::uint64_t v = 1; v <= raw.n; ++v)
        if (!seen[v])
            throw ParseError(ParseErrorKind::missing_integer, located.header_line,
                "integer " + std::to_string(v) + " of 1.." + std::to_string(raw.n) + " not in any subset");
    return Partition(raw);
}

Partition parse_partition(std::istream& in)
{
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_partition(std::string_view(text));
}

void serialize_partition(const Partition& p, std::ostream& out)
{
    out << "wsp " << format_version << '\n' << "s=" << p.s() << " n=" << p.n() << '\n';
    std::string line;
    for (std::size_t i = 1; i <= p.s(); ++i) {
        line = std::to_string(i);
        line += ':';
        for (Element v : p.subset(i)) {
            line += ' ';
            line += std::to_string(v);
        }
        line += '\n';
        out << line;
    }
}

std::string serialize_partition(const Partition& p)
{
    std::ostringstream out;
    serialize_partition(p, out);
    return out.str();
}

} // namespace wsp
