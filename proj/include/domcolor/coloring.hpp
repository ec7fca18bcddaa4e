#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

class ColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Total map vertex -> colour in 0..k-1 where every colour is used.
class Coloring {
public:
    /// Throws ColoringError if the assignment is empty, has a negative colour,
    /// or leaves a colour below the maximum unused.
    explicit Coloring(std::vector<int> assignment);

    static Coloring from_classes(int n, const std::vector<VertexSet>& classes);
    /// Every vertex in its own class, coloured by index.
    static Coloring discrete(int n);

    /// Base-36 digits (0-9 then a-z), one per vertex.
    static Coloring from_line(std::string_view line);
    std::string to_line() const;

    int vertex_count() const { return static_cast<int>(assignment_.size()); }
    int color_count() const { return static_cast<int>(classes_.size()); }
    int color(Vertex v) const { return assignment_[v]; }
    const std::vector<int>& assignment() const { return assignment_; }
    VertexSet color_class(int c) const { return classes_[c]; }
    const std::vector<VertexSet>& classes() const { return classes_; }

    /// Colours relabelled in order of first occurrence along vertex order.
    Coloring normalized() const;

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.assignment_ == b.assignment_;
    }

private:
    std::vector<int> assignment_;
    std::vector<VertexSet> classes_;
};

/// class ⊆ N[v]; a vertex dominates its own singleton class.
bool vertex_dominates_class(const Graph& g, Vertex v, VertexSet color_class);

/// Least vertex w with class ⊆ N(w), or nullopt.
std::optional<Vertex> class_dominated_by(const Graph& g, VertexSet color_class);

bool is_proper(const Graph& g, const Coloring& c);
/// Proper, and every vertex dominates some class.
bool is_dominator(const Graph& g, const Coloring& c);
/// Proper, and every class has a common neighbour.
bool is_dominated(const Graph& g, const Coloring& c);
/// Proper, dominator and dominated at once.
bool is_domination(const Graph& g, const Coloring& c);

struct ViolationReport {
    std::vector<std::pair<Vertex, Vertex>> proper_violations;  // u < v, same colour
    std::vector<Vertex> undominating_vertices;
    std::vector<int> undominated_classes;

    bool empty() const {
        return proper_violations.empty() && undominating_vertices.empty() &&
               undominated_classes.empty();
    }
};

/// Lists every violation of the three domination-colouring conditions.
ViolationReport check_domination_coloring(const Graph& g, const Coloring& c);

}  // namespace domcolor
