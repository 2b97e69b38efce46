#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "tmatch/link_stream.hpp"

namespace tmatch {

/// Malformed input, with the 1-based line it was found on (0 when not line-specific).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }
    /// The message without the line prefix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// Text format:
///   # key=value        optional header lines; t_min, t_max and vertex are understood
///   t u v              one timed edge per line (integer time, two identifiers)
/// Other "# key=value" lines are kept in `header`. Lines starting with '#' that are
/// not key=value are comments.
struct StreamFile {
    LinkStream stream;
    std::map<std::string, std::string> header;
};

StreamFile parse_stream(std::istream& in);
StreamFile read_stream(const std::filesystem::path& path);

/// Writes t_min/t_max, one "vertex" line per vertex without edges, the extra
/// header entries, then edges sorted by (t, u, v) by name.
void serialize_stream(std::ostream& out, const LinkStream& stream,
                      const std::map<std::string, std::string>& extra_header = {});
void write_stream(const std::filesystem::path& path, const LinkStream& stream,
                  const std::map<std::string, std::string>& extra_header = {});

/// Matchings use the same line format, one γ-edge "start u v" per line, with a
/// "# gamma=G" header.
void serialize_matching(std::ostream& out, const LinkStream& stream, const GammaMatching& matching);
GammaMatching parse_matching(std::istream& in, const LinkStream& stream, std::optional<int> gamma = std::nullopt);

}  // namespace tmatch
