#include "domcolor/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace domcolor {
namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Position of pair (i, j), i < j, in graph6 column order.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t code_under(const std::vector<Graph::Edge>& edges, const std::vector<Vertex>& perm,
                         int total) {
    std::uint64_t code = 0;
    for (auto [u, v] : edges) {
        int a = perm[u];
        int b = perm[v];
        if (a > b) std::swap(a, b);
        code |= std::uint64_t{1} << (total - 1 - pair_index(a, b));
    }
    return code;
}

void require_canonical_order(int n) {
    if (n > kMaxCanonicalOrder)
        throw std::out_of_range("canonical form supports n <= " +
                                std::to_string(kMaxCanonicalOrder) + ", got " + std::to_string(n));
}

// Canonical representatives keyed by adjacency code.
using ClassMap = std::map<std::uint64_t, Graph>;

void insert_class(ClassMap& classes, const Graph& g) {
    Graph c = canonical_form(g);
    classes.emplace(adjacency_code(c), std::move(c));
}

std::vector<Graph> values(ClassMap& classes) {
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

// Every connected graph on n >= 2 vertices has a non-cut vertex, so
// extending each class on n-1 vertices by one vertex with every non-empty
// neighbourhood reaches all classes on n vertices.
std::vector<Graph> connected_classes(int n) {
    std::vector<Graph> level{Graph(1, {})};
    for (int order = 2; order <= n; ++order) {
        ClassMap next;
        for (const Graph& base : level) {
            std::vector<VertexSet> rows = base.rows();
            rows.push_back(0);
            for (VertexSet nbrs = 1; nbrs < bit(order - 1); ++nbrs) {
                std::vector<VertexSet> ext = rows;
                ext.back() = nbrs;
                for (VertexSet s = nbrs; s != 0; s &= s - 1) ext[lowest(s)] |= bit(order - 1);
                insert_class(next, Graph::from_rows(std::move(ext)));
            }
        }
        level = values(next);
    }
    return level;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    if (pair_count(g.order()) > 64) throw std::out_of_range("adjacency code needs n <= 11");
    std::vector<Vertex> identity(g.order());
    std::iota(identity.begin(), identity.end(), 0);
    return code_under(g.edges(), identity, pair_count(g.order()));
}

Graph canonical_form(const Graph& g) {
    const int n = g.order();
    require_canonical_order(n);
    const auto edges = g.edges();
    const int total = pair_count(n);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Vertex> best = perm;
    std::uint64_t best_code = code_under(edges, perm, total);
    while (std::next_permutation(perm.begin(), perm.end())) {
        const std::uint64_t code = code_under(edges, perm, total);
        if (code < best_code) {
            best_code = code;
            best = perm;
        }
    }
    return g.permuted(best);
}

ConnectedGraphStream::ConnectedGraphStream(int n, bool dedup) : n_(n), dedup_(dedup) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::out_of_range("n: enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder) + ", got " +
                                std::to_string(n));
    if (dedup_) {
        classes_ = connected_classes(n);
        return;
    }
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    mask_end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphStream::next() {
    if (dedup_) {
        if (cursor_ >= classes_.size()) return std::nullopt;
        return classes_[cursor_++];
    }
    while (mask_ < mask_end_) {
        std::vector<VertexSet> rows(n_, 0);
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (!((mask_ >> k) & 1U)) continue;
            auto [i, j] = pairs_[k];
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
        ++mask_;
        Graph g = Graph::from_rows(std::move(rows));
        if (g.is_connected()) return g;
    }
    return std::nullopt;
}

ConnectedGraphStream enumerate_connected(int n, bool dedup) { return {n, dedup}; }

std::vector<Graph> connected_graphs(int n, bool dedup) {
    std::vector<Graph> out;
    auto stream = enumerate_connected(n, dedup);
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
}

// A unicyclic graph that is not a cycle has a leaf whose removal leaves a
// unicyclic graph, so classes on n vertices are C(n) plus one-leaf
// extensions of the classes on n-1 vertices.
std::vector<Graph> unicyclic_graphs(int n) {
    if (n < 3) throw std::out_of_range("n: unicyclic graphs need n >= 3");
    require_canonical_order(n);
    std::vector<Graph> level;
    for (int order = 3; order <= n; ++order) {
        ClassMap next;
        std::vector<Graph::Edge> ring;
        for (int i = 0; i < order; ++i) ring.emplace_back(i, (i + 1) % order);
        insert_class(next, Graph(order, ring));
        for (const Graph& base : level) {
            for (Vertex anchor = 0; anchor < base.order(); ++anchor) {
                std::vector<VertexSet> rows = base.rows();
                rows[anchor] |= bit(order - 1);
                rows.push_back(bit(anchor));
                insert_class(next, Graph::from_rows(std::move(rows)));
            }
        }
        level = values(next);
    }
    return level;
}

Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxVertices) throw std::out_of_range("n: random graph order out of range");
    // Threshold on the raw 64-bit draw keeps samples identical across standard libraries.
    const std::uint64_t threshold =
        edge_probability >= 1.0 ? ~std::uint64_t{0}
        : edge_probability <= 0.0
            ? 0
            : static_cast<std::uint64_t>(edge_probability * 18446744073709551616.0);
    for (;;) {
        std::vector<Graph::Edge> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (rng() < threshold) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (g.is_connected()) return g;
    }
}

}  // namespace domcolor
