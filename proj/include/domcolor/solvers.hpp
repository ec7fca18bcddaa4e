#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcolor/coloring.hpp"
#include "domcolor/graph.hpp"

namespace domcolor {

/// Input outside a solver's domain (disconnected, too small, too large).
class SolverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by operations that need a definite value when a search hits its
/// node ceiling.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxNodes = 100'000'000;

struct SolveOptions {
    /// Search-node ceiling shared by every colour count tried in one solve.
    std::uint64_t max_nodes = kDefaultMaxNodes;
    /// Start the domination-colouring search at max(chi, gamma, ceil(n/Delta))
    /// instead of at 1.
    bool bounded_start = true;
};

enum class SolveStatus { optimal, inconclusive };

std::string to_string(SolveStatus s);

struct ColoringResult {
    SolveStatus status = SolveStatus::optimal;
    /// Optimal colour count; when inconclusive, the first count left undecided.
    int value = 0;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    /// Colour counts proved infeasible, in search order.
    std::vector<int> refuted;

    bool optimal() const { return status == SolveStatus::optimal; }
};

struct DominatingSetResult {
    int size = 0;
    VertexSet witness = 0;
};

/// Which conditions a colouring search enforces on top of properness.
struct Requirements {
    bool vertices_dominate = false;
    bool classes_dominated = false;
};

/// Branch-and-bound test for "a colouring with at most k colours meeting the
/// requirements exists". Vertices are assigned in smallest-last degeneracy
/// order; new colours are opened in index order only.
class ColoringSearch {
public:
    enum class Outcome { feasible, infeasible, exhausted };

    ColoringSearch(const Graph& g, Requirements req, std::uint64_t max_nodes);

    Outcome feasible(int k);
    /// Witness of the last feasible call, normalised.
    const std::optional<Coloring>& witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<Vertex>& order() const { return order_; }

private:
    bool search(int depth);
    bool vertex_is_dead(Vertex w) const;

    const Graph& g_;
    Requirements req_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int k_ = 0;
    int used_ = 0;
    VertexSet assigned_ = 0;
    std::vector<Vertex> order_;
    std::vector<int> color_;
    std::vector<VertexSet> class_;
    std::vector<VertexSet> dominators_;
    std::optional<Coloring> witness_;
};

/// Smallest-last order reversed: repeatedly remove a minimum residual degree
/// vertex (ties: lower original degree, then lower index); the last removed
/// vertex is assigned first.
std::vector<Vertex> degeneracy_order(const Graph& g);

ColoringResult chromatic_number(const Graph& g, const SolveOptions& opts = {});
DominatingSetResult domination_number(const Graph& g);
ColoringResult dominator_chromatic(const Graph& g, const SolveOptions& opts = {});
ColoringResult dominated_chromatic(const Graph& g, const SolveOptions& opts = {});
ColoringResult domination_chromatic(const Graph& g, const SolveOptions& opts = {});

struct InvariantReport {
    SolveStatus status = SolveStatus::optimal;
    int chi = 0;
    int gamma = 0;
    int chi_d = 0;
    int chi_dom = 0;
    int chi_dd = 0;
    std::optional<Coloring> chi_witness;
    VertexSet gamma_witness = 0;
    std::optional<Coloring> chi_d_witness;
    std::optional<Coloring> chi_dom_witness;
    std::optional<Coloring> chi_dd_witness;
    struct Stats {
        std::uint64_t chi_nodes = 0;
        std::uint64_t chi_d_nodes = 0;
        std::uint64_t chi_dom_nodes = 0;
        std::uint64_t chi_dd_nodes = 0;
        double elapsed_ms = 0.0;
    } stats;
};

InvariantReport full_report(const Graph& g, const SolveOptions& opts = {});

/// Value of an optimal result; throws SearchExhausted otherwise.
int definite(const ColoringResult& r, const char* what);

/// Throws SolverError for disconnected input or fewer than min_order vertices.
void require_solvable(const Graph& g, int min_order);

}  // namespace domcolor
