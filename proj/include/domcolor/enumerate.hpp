#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxCanonicalOrder = 10;

/// Upper-triangle adjacency bits in graph6 order, first pair most significant.
std::uint64_t adjacency_code(const Graph& g);

/// Relabeling of g with the minimum adjacency_code over all n! permutations.
Graph canonical_form(const Graph& g);

/// Single-consumer stream over connected graphs on n vertices.
///
/// Without dedup every labeled connected graph is produced once, ordered by
/// edge-subset mask. With dedup one canonical representative per isomorphism
/// class is produced, ordered by adjacency code.
class ConnectedGraphStream {
public:
    ConnectedGraphStream(int n, bool dedup);

    std::optional<Graph> next();

private:
    int n_;
    bool dedup_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_end_ = 0;
    std::vector<Graph> classes_;
    std::size_t cursor_ = 0;
};

/// Throws std::out_of_range unless 1 <= n <= kMaxEnumerationOrder.
ConnectedGraphStream enumerate_connected(int n, bool dedup);

/// Drains enumerate_connected into a vector.
std::vector<Graph> connected_graphs(int n, bool dedup);

/// Isomorphism classes of connected unicyclic graphs, 3 <= n <= kMaxCanonicalOrder.
std::vector<Graph> unicyclic_graphs(int n);

/// Connected G(n, p) sample by rejection; deterministic for a given engine state.
Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng);

}  // namespace domcolor
