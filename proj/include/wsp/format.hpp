#pragma once

#include "wsp/partition.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wsp {

/// Version written on the first line of a .wsp file.
inline constexpr int format_version = 1;

enum class ParseErrorKind { malformed, duplicate_integer, missing_integer, out_of_range, empty_subset };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error
{
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);

    [[nodiscard]] ParseErrorKind kind() const { return kind_; }
    /// 1-based line the error is attributed to.
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::string detail_;
};

/// Reads the line structure only; the subsets are not checked to form a
/// partition. Throws ParseError(malformed) on syntax errors.
RawPartition parse_raw(std::string_view text);

/// Reads and validates a partition. Duplicates, gaps, out-of-range values and
/// empty subsets are reported as ParseError with the offending line.
Partition parse_partition(std::string_view text);
Partition parse_partition(std::istream& in);

/// Canonical text: header, then one line per subset with ascending elements.
std::string serialize_partition(const Partition& p);
void serialize_partition(const Partition& p, std::ostream& out);

} // namespace wsp
