#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domcolor {

using Vertex = int;

/// Bitmask over vertex indices; bit v set means vertex v is in the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }

/// Index of the lowest set bit; s must be non-zero.
inline Vertex lowest(VertexSet s) { return __builtin_ctzll(s); }

inline VertexSet all_vertices(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

std::vector<Vertex> members(VertexSet s);

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held as one bitmask row per vertex, so n is capped at
/// kMaxVertices. Rows are symmetric and irreflexive by construction.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    /// Throws GraphError on loops, duplicate edges, or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    /// Builds from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const { return edge_count_; }

    VertexSet neighbors(Vertex v) const { return rows_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return rows_[v] | bit(v); }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    int degree(Vertex v) const { return popcount(rows_[v]); }
    int max_degree() const;
    int min_degree() const;
    VertexSet vertices() const { return all_vertices(order()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    bool is_connected() const;
    bool has_isolated_vertex() const;

    /// Relabels vertex v as perm[v].
    Graph permuted(const std::vector<Vertex>& perm) const;

    const std::vector<VertexSet>& rows() const { return rows_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<VertexSet> rows);

    std::vector<VertexSet> rows_;
    int edge_count_ = 0;
};

}  // namespace domcolor
