#include "domcolor/solvers.hpp"

#include <algorithm>
#include <chrono>

namespace domcolor {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Raises k from `start` until the search succeeds, records refuted counts.
ColoringResult minimise(const Graph& g, Requirements req, int start, const SolveOptions& opts) {
    ColoringSearch search(g, req, opts.max_nodes);
    ColoringResult result;
    for (int k = std::max(start, 1); k <= g.order(); ++k) {
        const auto outcome = search.feasible(k);
        result.nodes = search.nodes();
        if (outcome == ColoringSearch::Outcome::exhausted) {
            result.status = SolveStatus::inconclusive;
            result.value = k;
            return result;
        }
        if (outcome == ColoringSearch::Outcome::feasible) {
            result.value = k;
            result.witness = search.witness();
            return result;
        }
        result.refuted.push_back(k);
    }
    // Unreachable for valid input: the all-distinct colouring meets every requirement.
    throw SolverError("no colouring with at most n colours satisfies the requirements");
}

}  // namespace

std::string to_string(SolveStatus s) {
    return s == SolveStatus::optimal ? "optimal" : "inconclusive";
}

int definite(const ColoringResult& r, const char* what) {
    if (!r.optimal())
        throw SearchExhausted(std::string(what) + ": node ceiling reached after " +
                              std::to_string(r.nodes) + " nodes");
    return r.value;
}

void require_solvable(const Graph& g, int min_order) {
    if (g.order() < min_order)
        throw SolverError("graph needs at least " + std::to_string(min_order) + " vertices");
    if (!g.is_connected()) throw SolverError("graph is disconnected");
}

std::vector<Vertex> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> residual(n);
    for (Vertex v = 0; v < n; ++v) residual[v] = g.degree(v);
    VertexSet left = g.vertices();
    std::vector<Vertex> removed;
    removed.reserve(n);
    while (left != 0) {
        Vertex pick = -1;
        for (Vertex v : members(left)) {
            if (pick < 0 || residual[v] < residual[pick] ||
                (residual[v] == residual[pick] && g.degree(v) < g.degree(pick)))
                pick = v;
        }
        removed.push_back(pick);
        left &= ~bit(pick);
        for (Vertex u : members(g.neighbors(pick) & left)) --residual[u];
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

ColoringSearch::ColoringSearch(const Graph& g, Requirements req, std::uint64_t max_nodes)
    : g_(g), req_(req), max_nodes_(max_nodes), order_(degeneracy_order(g)) {}

ColoringSearch::Outcome ColoringSearch::feasible(int k) {
    k_ = k;
    used_ = 0;
    assigned_ = 0;
    exhausted_ = false;
    color_.assign(g_.order(), -1);
    class_.assign(k, 0);
    dominators_.assign(k, 0);
    witness_.reset();
    if (search(0)) return Outcome::feasible;
    return exhausted_ ? Outcome::exhausted : Outcome::infeasible;
}

// A vertex is dead once no colour class can end up inside its closed
// neighbourhood: classes only grow, and a fresh class needs both a spare
// colour and an unassigned vertex of N[w].
bool ColoringSearch::vertex_is_dead(Vertex w) const {
    const VertexSet closed = g_.closed_neighbors(w);
    for (int c = 0; c < used_; ++c)
        if ((class_[c] & ~closed) == 0) return false;
    return used_ == k_ || (closed & ~assigned_) == 0;
}

bool ColoringSearch::search(int depth) {
    if (++nodes_ > max_nodes_) {
        exhausted_ = true;
        return false;
    }
    const int n = g_.order();
    if (depth == n) {
        Coloring c(color_);
        const bool ok = is_proper(g_, c) &&
                        (!req_.vertices_dominate || is_dominator(g_, c)) &&
                        (!req_.classes_dominated || is_dominated(g_, c));
        if (ok) witness_ = c.normalized();
        return ok;
    }
    const Vertex v = order_[depth];
    const int limit = std::min(used_ + 1, k_);
    for (int c = 0; c < limit; ++c) {
        if (class_[c] & g_.neighbors(v)) continue;
        const bool opens = c == used_;
        const VertexSet before = dominators_[c];
        const VertexSet after = (opens ? g_.vertices() : before) & g_.neighbors(v);
        if (req_.classes_dominated && after == 0) continue;

        color_[v] = c;
        class_[c] |= bit(v);
        dominators_[c] = after;
        assigned_ |= bit(v);
        if (opens) ++used_;

        bool alive = true;
        if (req_.vertices_dominate)
            for (Vertex w = 0; w < n && alive; ++w) alive = !vertex_is_dead(w);
        if (alive && search(depth + 1)) return true;

        if (opens) --used_;
        assigned_ &= ~bit(v);
        dominators_[c] = before;
        class_[c] &= ~bit(v);
        color_[v] = -1;
        if (exhausted_) return false;
    }
    return false;
}

ColoringResult chromatic_number(const Graph& g, const SolveOptions& opts) {
    require_solvable(g, 1);
    return minimise(g, {}, g.size() > 0 ? 2 : 1, opts);
}

DominatingSetResult domination_number(const Graph& g) {
    require_solvable(g, 1);
    const int n = g.order();
    const VertexSet all = g.vertices();
    for (int size = 1; size <= n; ++size) {
        // Gosper's hack walks the size-subsets in increasing mask order.
        VertexSet s = bit(size) - 1;
        if (size == kMaxVertices) s = ~VertexSet{0};
        while (true) {
            VertexSet covered = 0;
            for (VertexSet t = s; t != 0; t &= t - 1) covered |= g.closed_neighbors(lowest(t));
            if (covered == all) return {size, s};
            const VertexSet c = s & (~s + 1);
            const VertexSet r = s + c;
            if (r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
            if (s & ~all) break;
        }
    }
    return {n, all};
}

ColoringResult dominator_chromatic(const Graph& g, const SolveOptions& opts) {
    require_solvable(g, 2);
    return minimise(g, {.vertices_dominate = true}, 2, opts);
}

ColoringResult dominated_chromatic(const Graph& g, const SolveOptions& opts) {
    require_solvable(g, 2);
    return minimise(g, {.classes_dominated = true}, 2, opts);
}

ColoringResult domination_chromatic(const Graph& g, const SolveOptions& opts) {
    require_solvable(g, 2);
    int start = 2;
    std::uint64_t extra = 0;
    if (opts.bounded_start) {
        const auto chi = chromatic_number(g, opts);
        if (!chi.optimal()) {
            ColoringResult undecided;
            undecided.status = SolveStatus::inconclusive;
            undecided.value = start;
            undecided.nodes = chi.nodes;
            return undecided;
        }
        extra = chi.nodes;
        start = std::max({chi.value, domination_number(g).size,
                          ceil_div(g.order(), g.max_degree())});
    }
    auto result = minimise(g, {.vertices_dominate = true, .classes_dominated = true}, start, opts);
    result.nodes += extra;
    return result;
}

InvariantReport full_report(const Graph& g, const SolveOptions& opts) {
    require_solvable(g, 2);
    const auto t0 = std::chrono::steady_clock::now();
    InvariantReport r;
    const auto chi = chromatic_number(g, opts);
    const auto gamma = domination_number(g);
    const auto chi_d = dominator_chromatic(g, opts);
    const auto chi_dom = dominated_chromatic(g, opts);
    const auto chi_dd = domination_chromatic(g, opts);
    for (const auto* part : {&chi, &chi_d, &chi_dom, &chi_dd})
        if (!part->optimal()) r.status = SolveStatus::inconclusive;
    r.chi = chi.value;
    r.gamma = gamma.size;
    r.chi_d = chi_d.value;
    r.chi_dom = chi_dom.value;
    r.chi_dd = chi_dd.value;
    r.chi_witness = chi.witness;
    r.gamma_witness = gamma.witness;
    r.chi_d_witness = chi_d.witness;
    r.chi_dom_witness = chi_dom.witness;
    r.chi_dd_witness = chi_dd.witness;
    r.stats.chi_nodes = chi.nodes;
    r.stats.chi_d_nodes = chi_d.nodes;
    r.stats.chi_dom_nodes = chi_dom.nodes;
    r.stats.chi_dd_nodes = chi_dd.nodes;
    r.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace domcolor
