#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

enum class Format { graph6, dimacs, edgelist };

Format parse_format(std::string_view name);
std::string_view format_name(Format f);

/// Malformed input. line and column are 1-based; column 0 means the whole line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// graph6: size byte n+63 (n <= 62), then the upper triangle packed column
/// by column into 6-bit groups offset by 63. Trailing LF/CRLF is accepted,
/// the optional ">>graph6<<" header is skipped.
/// DIMACS: "c" comments, one "p edge n m" header, "e u v" lines (1-indexed).
/// Edge list: vertex count on the first line, then one "u v" pair (0-indexed) per line.
Graph parse(std::string_view text, Format format);

/// Canonical serialisation. graph6 has no trailing newline; the line-based
/// formats end every line with LF and list edges in lexicographic order.
std::string write(const Graph& g, Format format);

/// One graph6 code per non-blank line; errors carry the line number.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace domcolor
