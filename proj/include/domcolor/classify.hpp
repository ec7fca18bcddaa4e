#pragma once

#include "domcolor/graph.hpp"

namespace domcolor {

struct GraphClass {
    bool connected = false;
    bool triangle_free = false;
    bool complete = false;
    bool complete_bipartite = false;
    bool complete_multipartite = false;
    bool unicyclic = false;
    bool tree = false;
    bool has_universal_vertex = false;
    int max_degree = 0;
    int min_degree = 0;
    int edges = 0;
};

GraphClass classify(const Graph& g);

/// True when non-adjacency is an equivalence relation, i.e. the complement
/// is a disjoint union of cliques. K1 counts as a single part.
bool is_complete_multipartite(const Graph& g);
int multipartite_part_count(const Graph& g);
bool is_triangle_free(const Graph& g);

}  // namespace domcolor
