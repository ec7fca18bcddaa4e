#include "domcolor/graph.hpp"

#include <algorithm>
#include <functional>

namespace domcolor {

std::vector<Vertex> members(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(popcount(s));
    for (; s != 0; s &= s - 1) out.push_back(lowest(s));
    return out;
}

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
    int twice = 0;
    for (VertexSet r : rows_) twice += popcount(r);
    edge_count_ = twice / 2;
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 1 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
    rows_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw GraphError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ")");
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
        ++edge_count_;
    }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~all_vertices(n)) throw GraphError("row references a missing vertex");
        if (rows[v] & bit(v)) throw GraphError("loop at vertex " + std::to_string(v));
        for (VertexSet s = rows[v]; s != 0; s &= s - 1)
            if (!(rows[lowest(s)] & bit(v))) throw GraphError("adjacency rows are not symmetric");
    }
    return Graph(std::move(rows));
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    int d = order();
    for (Vertex v = 0; v < order(); ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (VertexSet s = rows_[u] & ~all_vertices(u + 1); s != 0; s &= s - 1)
            out.emplace_back(u, lowest(s));
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(order());
    for (Vertex v = 0; v < order(); ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool Graph::is_connected() const {
    VertexSet seen = bit(0);
    VertexSet frontier = bit(0);
    while (frontier != 0) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s != 0; s &= s - 1) next |= rows_[lowest(s)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertices();
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(rows_.begin(), rows_.end(), [](VertexSet r) { return r == 0; });
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
    std::vector<VertexSet> rows(order(), 0);
    for (Vertex u = 0; u < order(); ++u)
        for (VertexSet s = rows_[u]; s != 0; s &= s - 1) rows[perm[u]] |= bit(perm[lowest(s)]);
    return Graph(std::move(rows));
}

}  // namespace domcolor
