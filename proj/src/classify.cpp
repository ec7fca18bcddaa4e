#include "domcolor/classify.hpp"

namespace domcolor {

bool is_triangle_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (VertexSet s = g.neighbors(u) & ~all_vertices(u + 1); s != 0; s &= s - 1)
            if (g.neighbors(u) & g.neighbors(lowest(s))) return false;
    return true;
}

int multipartite_part_count(const Graph& g) {
    // Each part is the non-neighbourhood of any of its members.
    VertexSet left = g.vertices();
    int parts = 0;
    while (left != 0) {
        const Vertex v = lowest(left);
        const VertexSet part = g.vertices() & ~g.neighbors(v);
        for (VertexSet s = part; s != 0; s &= s - 1)
            if ((g.vertices() & ~g.neighbors(lowest(s))) != part) return -1;
        left &= ~part;
        ++parts;
    }
    return parts;
}

bool is_complete_multipartite(const Graph& g) { return multipartite_part_count(g) > 0; }

GraphClass classify(const Graph& g) {
    GraphClass c;
    const int n = g.order();
    c.edges = g.size();
    c.max_degree = g.max_degree();
    c.min_degree = g.min_degree();
    c.connected = g.is_connected();
    c.triangle_free = is_triangle_free(g);
    c.complete = c.edges == n * (n - 1) / 2;
    const int parts = multipartite_part_count(g);
    c.complete_multipartite = parts > 0;
    c.complete_bipartite = parts == 2;
    c.unicyclic = c.connected && c.edges == n;
    c.tree = c.connected && c.edges == n - 1;
    for (Vertex v = 0; v < n; ++v) c.has_universal_vertex |= g.degree(v) == n - 1;
    return c;
}

}  // namespace domcolor
