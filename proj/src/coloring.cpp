#include "domcolor/coloring.hpp"

#include <algorithm>

namespace domcolor {
namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

void require_matching(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.order())
        throw ColoringError("coloring covers " + std::to_string(c.vertex_count()) +
                            " vertices, graph has " + std::to_string(g.order()));
}

bool every_vertex_dominates(const Graph& g, const Coloring& c) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& cls = c.classes();
        if (std::none_of(cls.begin(), cls.end(),
                         [&](VertexSet s) { return vertex_dominates_class(g, v, s); }))
            return false;
    }
    return true;
}

bool every_class_dominated(const Graph& g, const Coloring& c) {
    const auto& cls = c.classes();
    return std::all_of(cls.begin(), cls.end(),
                       [&](VertexSet s) { return class_dominated_by(g, s).has_value(); });
}

}  // namespace

Coloring::Coloring(std::vector<int> assignment) : assignment_(std::move(assignment)) {
    if (assignment_.empty()) throw ColoringError("coloring of zero vertices");
    if (assignment_.size() > static_cast<std::size_t>(kMaxVertices))
        throw ColoringError("coloring exceeds " + std::to_string(kMaxVertices) + " vertices");
    const int k = *std::max_element(assignment_.begin(), assignment_.end()) + 1;
    classes_.assign(k, 0);
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        if (assignment_[v] < 0)
            throw ColoringError("negative color at vertex " + std::to_string(v));
        classes_[assignment_[v]] |= bit(static_cast<Vertex>(v));
    }
    for (int c = 0; c < k; ++c)
        if (classes_[c] == 0) throw ColoringError("color " + std::to_string(c) + " is unused");
}

Coloring Coloring::from_classes(int n, const std::vector<VertexSet>& classes) {
    std::vector<int> assignment(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (Vertex v : members(classes[c])) {
            if (v >= n || assignment[v] != -1)
                throw ColoringError("classes do not partition the vertex set");
            assignment[v] = static_cast<int>(c);
        }
    if (std::find(assignment.begin(), assignment.end(), -1) != assignment.end())
        throw ColoringError("classes do not cover every vertex");
    return Coloring(std::move(assignment));
}

Coloring Coloring::discrete(int n) {
    std::vector<int> assignment(n);
    for (int v = 0; v < n; ++v) assignment[v] = v;
    return Coloring(std::move(assignment));
}

Coloring Coloring::from_line(std::string_view line) {
    std::vector<int> assignment;
    assignment.reserve(line.size());
    for (char ch : line) {
        const char lower = (ch >= 'A' && ch <= 'Z') ? static_cast<char>(ch - 'A' + 'a') : ch;
        const auto pos = kDigits.find(lower);
        if (pos == std::string_view::npos)
            throw ColoringError(std::string("invalid color digit '") + ch + "'");
        assignment.push_back(static_cast<int>(pos));
    }
    return Coloring(std::move(assignment));
}

std::string Coloring::to_line() const {
    if (color_count() > static_cast<int>(kDigits.size()))
        throw ColoringError("line format supports at most 36 colors");
    std::string out;
    out.reserve(assignment_.size());
    for (int c : assignment_) out.push_back(kDigits[c]);
    return out;
}

Coloring Coloring::normalized() const {
    std::vector<int> relabel(classes_.size(), -1);
    int next = 0;
    std::vector<int> out(assignment_.size());
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        int& r = relabel[assignment_[v]];
        if (r < 0) r = next++;
        out[v] = r;
    }
    return Coloring(std::move(out));
}

bool vertex_dominates_class(const Graph& g, Vertex v, VertexSet color_class) {
    return (color_class & ~g.closed_neighbors(v)) == 0;
}

std::optional<Vertex> class_dominated_by(const Graph& g, VertexSet color_class) {
    for (Vertex w = 0; w < g.order(); ++w)
        if ((color_class & ~g.neighbors(w)) == 0) return w;
    return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& c) {
    require_matching(g, c);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.neighbors(v) & c.color_class(c.color(v))) return false;
    return true;
}

bool is_dominator(const Graph& g, const Coloring& c) {
    return is_proper(g, c) && every_vertex_dominates(g, c);
}

bool is_dominated(const Graph& g, const Coloring& c) {
    return is_proper(g, c) && every_class_dominated(g, c);
}

bool is_domination(const Graph& g, const Coloring& c) {
    return is_proper(g, c) && every_vertex_dominates(g, c) && every_class_dominated(g, c);
}

ViolationReport check_domination_coloring(const Graph& g, const Coloring& c) {
    require_matching(g, c);
    ViolationReport report;
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v)) report.proper_violations.emplace_back(u, v);
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& cls = c.classes();
        if (std::none_of(cls.begin(), cls.end(),
                         [&](VertexSet s) { return vertex_dominates_class(g, v, s); }))
            report.undominating_vertices.push_back(v);
    }
    for (int k = 0; k < c.color_count(); ++k)
        if (!class_dominated_by(g, c.color_class(k))) report.undominated_classes.push_back(k);
    return report;
}

}  // namespace domcolor
