#include "domcolor/theory.hpp"

#include <algorithm>

#include "domcolor/classify.hpp"
#include "overloaded.hpp"

namespace domcolor {
namespace {

using detail::Overloaded;

int path_value(int n) { return 2 * (n / 3) + n % 3; }

BoundRecord at_most(std::string name, double lhs, double rhs, bool applicable = true) {
    return {std::move(name), "<=", lhs, rhs, lhs <= rhs, applicable};
}

}  // namespace

int formula_chi_dd(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        Overloaded{
            [](const Path& s) { return path_value(s.n); },
            [](const Cycle& s) {
                if (s.n == 4) return 2;
                if (s.n == 3 || s.n == 5) return 3;
                return path_value(s.n);
            },
            [](const Complete& s) { return s.n; },
            [](const CompleteMultipartite& s) { return static_cast<int>(s.parts.size()); },
            [](const Star&) { return 2; },
            [](const BiStar&) { return 4; },
            [](const Wheel& s) { return s.n % 2 == 0 ? 3 : 4; },
            [](const Petersen&) { return 5; },
            [](const KnWithLeaves& s) {
                const auto hubs = static_cast<int>(s.leaf_counts.size());
                if (hubs > s.n / 2)
                    throw FormulaNotApplicable("no closed form for " + std::to_string(hubs) +
                                               " leaf hubs on K" + std::to_string(s.n) +
                                               " (needs m <= floor(n/2))");
                return s.n;
            },
            [](const C3WithLeaves&) { return 3; },
        },
        spec);
}

bool BoundsReport::consistent() const {
    return std::all_of(records.begin(), records.end(),
                       [](const BoundRecord& r) { return !r.applicable || r.holds; });
}

std::vector<BoundRecord> evaluate_bounds(const Graph& g, const InvariantReport& inv,
                                         bool assert_planar) {
    const int n = g.order();
    const int delta = g.max_degree();
    std::vector<BoundRecord> out;
    out.push_back(at_most("chi_dd_at_least_two", 2, inv.chi_dd));
    out.push_back(at_most("chi_dd_at_most_order", inv.chi_dd, n));
    out.push_back(at_most("chain_lower", std::max(inv.chi, inv.gamma),
                          std::max(inv.chi_d, inv.chi_dom)));
    out.push_back(at_most("chain_middle", std::max(inv.chi_d, inv.chi_dom), inv.chi_dd));
    out.push_back(at_most("chain_upper", inv.chi_dd, inv.chi * inv.gamma));
    // Compared as n <= Delta * chi_dd to stay in integers.
    BoundRecord ratio = at_most("order_over_max_degree", static_cast<double>(n) / delta, inv.chi_dd);
    ratio.holds = n <= delta * inv.chi_dd;
    out.push_back(ratio);
    out.push_back(at_most("triangle_free_two_gamma", inv.chi_dd, 2 * inv.gamma, is_triangle_free(g)));
    out.push_back(at_most("planar_four_gamma", inv.chi_dd, 4 * inv.gamma, assert_planar));
    out.push_back({"universal_vertex_equality", "==", static_cast<double>(inv.chi_dd),
                   static_cast<double>(inv.chi), inv.chi_dd == inv.chi, inv.gamma == 1});
    return out;
}

BoundsReport bounds_report(const Graph& g, bool assert_planar, const SolveOptions& opts) {
    BoundsReport report;
    report.invariants = full_report(g, opts);
    if (report.invariants.status != SolveStatus::optimal)
        throw SearchExhausted("bounds need exact invariants; node ceiling reached");
    report.records = evaluate_bounds(g, report.invariants, assert_planar);
    return report;
}

Graph add_universal_vertex(const Graph& g) {
    if (g.has_isolated_vertex())
        throw GraphError("add_universal_vertex needs a graph without isolated vertices");
    const int n = g.order();
    std::vector<VertexSet> rows = g.rows();
    for (VertexSet& r : rows) r |= bit(n);
    rows.push_back(g.vertices());
    return Graph::from_rows(std::move(rows));
}

ReductionCheck check_reduction(const Graph& g, int k, const SolveOptions& opts) {
    require_solvable(g, 2);
    if (g.order() > 8) throw SolverError("reduction check supports n <= 8");
    if (k < 1) throw SolverError("k must be >= 1");
    const int chi = definite(chromatic_number(g, opts), "chromatic number");
    const int extended = definite(domination_chromatic(add_universal_vertex(g), opts),
                                  "domination chromatic number of the extension");
    return {k, chi <= k, extended <= k + 1};
}

bool check_reduction_equivalence(const Graph& g, int k, const SolveOptions& opts) {
    return check_reduction(g, k, opts).holds();
}

CharacterizationResult characterize_chi_dd_2(const Graph& g, const SolveOptions& opts) {
    const int chi_dd = definite(domination_chromatic(g, opts), "domination chromatic number");
    return {chi_dd == 2, classify(g).complete_bipartite};
}

CharacterizationResult characterize_chi_dd_n(const Graph& g, const SolveOptions& opts) {
    const int chi_dd = definite(domination_chromatic(g, opts), "domination chromatic number");
    return {chi_dd == g.order(), classify(g).complete};
}

VertexSet unicyclic_cycle(const Graph& g) {
    const GraphClass c = classify(g);
    if (!c.unicyclic) throw std::invalid_argument("graph is not connected and unicyclic");
    // Peeling leaves until none remain leaves exactly the cycle.
    VertexSet left = g.vertices();
    bool peeled = true;
    while (peeled) {
        peeled = false;
        for (Vertex v : members(left)) {
            if (popcount(g.neighbors(v) & left) <= 1) {
                left &= ~bit(v);
                peeled = true;
            }
        }
    }
    return left;
}

bool in_unicyclic_equality_family(const Graph& g) {
    const VertexSet cycle = unicyclic_cycle(g);
    const int length = popcount(cycle);
    const VertexSet rest = g.vertices() & ~cycle;
    if (rest == 0) return length >= 3 && length <= 5;
    if (length != 3) return false;
    VertexSet anchors = 0;
    for (Vertex v : members(rest)) {
        if (g.degree(v) != 1) return false;
        anchors |= g.neighbors(v);
    }
    return popcount(anchors) == 1 && (anchors & cycle) == anchors;
}

CharacterizationResult check_unicyclic_characterization(const Graph& g, const SolveOptions& opts) {
    const bool member = in_unicyclic_equality_family(g);
    const int chi = definite(chromatic_number(g, opts), "chromatic number");
    const int chi_dd = definite(domination_chromatic(g, opts), "domination chromatic number");
    return {chi_dd == chi, member};
}

std::vector<LeafHubObservation> probe_leaf_hubs(int n_max, const SolveOptions& opts) {
    std::vector<LeafHubObservation> out;
    for (int n = 2; n <= n_max; ++n) {
        for (int m = n / 2 + 1; m <= n; ++m) {
            KnWithLeaves spec{n, {}};
            for (int h = 0; h < m; ++h) spec.leaf_counts[h] = 1;
            const Graph g = generate(spec);
            out.push_back({n, m, definite(domination_chromatic(g, opts), "leaf hub probe")});
        }
    }
    return out;
}

}  // namespace domcolor
