#include "domcolor/formats.hpp"

#include <charconv>
#include <sstream>

namespace domcolor {
namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxShortOrder = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_eol(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int to_int(const Token& t, int line, const char* field) {
    int value = 0;
    const auto* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, t.column,
                         std::string("expected integer ") + field + ", got '" +
                             std::string(t.text) + "'");
    return value;
}

// Adds u-v to rows after range, loop and duplicate checks.
void add_edge(std::vector<VertexSet>& rows, int u, int v, int line, int column) {
    const int n = static_cast<int>(rows.size());
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(line, column, "vertex index out of range");
    if (u == v) throw ParseError(line, column, "loop at vertex " + std::to_string(u));
    if (rows[u] & bit(v)) throw ParseError(line, column, "duplicate edge");
    rows[u] |= bit(v);
    rows[v] |= bit(u);
}

int checked_order(const Token& t, int line) {
    const int n = to_int(t, line, "vertex count");
    if (n < 1 || n > kMaxVertices)
        throw ParseError(line, t.column,
                         "vertex count " + std::to_string(n) + " outside [1, " +
                             std::to_string(kMaxVertices) + "]");
    return n;
}

Graph parse_graph6_at(std::string_view code, int line) {
    code = trim_eol(code);
    int col = 1;
    if (code.substr(0, kGraph6Header.size()) == kGraph6Header) {
        code.remove_prefix(kGraph6Header.size());
        col += static_cast<int>(kGraph6Header.size());
    }
    if (code.empty()) throw ParseError(line, col, "empty graph6 code");
    const int size_byte = static_cast<unsigned char>(code[0]);
    if (size_byte == 126) throw ParseError(line, col, "graph6 long form (n > 62) is not supported");
    if (size_byte < kGraph6Offset || size_byte > 126)
        throw ParseError(line, col, "invalid graph6 size byte");
    const int n = size_byte - kGraph6Offset;
    if (n < 1) throw ParseError(line, col, "graph6 code for the empty graph");
    const int bits = n * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (code.size() != expected)
        throw ParseError(line, col + static_cast<int>(std::min(code.size(), expected)),
                         "graph6 code for n=" + std::to_string(n) + " needs " +
                             std::to_string(expected) + " characters, got " +
                             std::to_string(code.size()));
    std::vector<VertexSet> rows(n, 0);
    int k = 0;
    for (std::size_t c = 1; c < code.size(); ++c) {
        const int value = static_cast<unsigned char>(code[c]) - kGraph6Offset;
        if (value < 0 || value > 63)
            throw ParseError(line, col + static_cast<int>(c), "invalid graph6 character");
        for (int b = 5; b >= 0; --b, ++k) {
            const bool set = (value >> b) & 1;
            if (k >= bits) {
                if (set) throw ParseError(line, col + static_cast<int>(c), "non-zero graph6 padding");
                continue;
            }
            if (!set) continue;
            // Pair k in column order: column j holds pairs (0, j) .. (j-1, j).
            int j = 1;
            while ((j + 1) * j / 2 <= k) ++j;
            const int i = k - j * (j - 1) / 2;
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
    }
    return Graph::from_rows(std::move(rows));
}

Graph parse_dimacs(std::string_view text) {
    std::vector<VertexSet> rows;
    int declared_edges = -1;
    int seen_edges = 0;
    int header_line = 0;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line = static_cast<int>(i) + 1;
        const auto toks = tokens(lines[i]);
        if (toks.empty() || toks[0].text == "c") continue;
        if (toks[0].text == "p") {
            if (header_line != 0) throw ParseError(line, 1, "second 'p' header");
            if (toks.size() != 4 || (toks[1].text != "edge" && toks[1].text != "col"))
                throw ParseError(line, 1, "malformed header, expected 'p edge <n> <m>'");
            rows.assign(checked_order(toks[2], line), 0);
            declared_edges = to_int(toks[3], line, "edge count");
            if (declared_edges < 0) throw ParseError(line, toks[3].column, "negative edge count");
            header_line = line;
        } else if (toks[0].text == "e") {
            if (header_line == 0) throw ParseError(line, 1, "edge before 'p' header");
            if (toks.size() != 3) throw ParseError(line, 1, "malformed edge, expected 'e <u> <v>'");
            const int u = to_int(toks[1], line, "endpoint");
            const int v = to_int(toks[2], line, "endpoint");
            add_edge(rows, u - 1, v - 1, line, toks[1].column);
            ++seen_edges;
        } else {
            throw ParseError(line, toks[0].column,
                             "unknown line type '" + std::string(toks[0].text) + "'");
        }
    }
    if (header_line == 0) throw ParseError(1, 0, "missing 'p edge <n> <m>' header");
    if (seen_edges != declared_edges)
        throw ParseError(header_line, 0,
                         "header declares " + std::to_string(declared_edges) + " edges, found " +
                             std::to_string(seen_edges));
    return Graph::from_rows(std::move(rows));
}

Graph parse_edgelist(std::string_view text) {
    std::vector<VertexSet> rows;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line = static_cast<int>(i) + 1;
        const auto toks = tokens(lines[i]);
        if (toks.empty()) continue;
        if (rows.empty()) {
            if (toks.size() != 1) throw ParseError(line, 1, "first line must hold the vertex count");
            rows.assign(checked_order(toks[0], line), 0);
            continue;
        }
        if (toks.size() != 2) throw ParseError(line, 1, "expected '<u> <v>'");
        add_edge(rows, to_int(toks[0], line, "endpoint"), to_int(toks[1], line, "endpoint"), line,
                 toks[0].column);
    }
    if (rows.empty()) throw ParseError(1, 0, "missing vertex count");
    return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxShortOrder)
        throw std::invalid_argument("graph6 writer supports n <= 62");
    std::string out(1, static_cast<char>(n + kGraph6Offset));
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + kGraph6Offset));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kGraph6Offset));
    return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                         ": " + what),
      line_(line),
      column_(column) {}

Format parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return Format::graph6;
    if (name == "dimacs" || name == "col") return Format::dimacs;
    if (name == "edgelist") return Format::edgelist;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
    switch (f) {
        case Format::graph6: return "graph6";
        case Format::dimacs: return "dimacs";
        case Format::edgelist: return "edgelist";
    }
    return "";
}

Graph parse(std::string_view text, Format format) {
    switch (format) {
        case Format::graph6: return parse_graph6_at(text, 1);
        case Format::dimacs: return parse_dimacs(text);
        case Format::edgelist: return parse_edgelist(text);
    }
    throw std::invalid_argument("unknown format");
}

std::string write(const Graph& g, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::graph6: return write_graph6(g);
        case Format::dimacs:
            out << "p edge " << g.order() << ' ' << g.size() << '\n';
            for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
            break;
        case Format::edgelist:
            out << g.order() << '\n';
            for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
            break;
    }
    return out.str();
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (tokens(lines[i]).empty()) continue;
        out.push_back(parse_graph6_at(lines[i], static_cast<int>(i) + 1));
    }
    return out;
}

}  // namespace domcolor
