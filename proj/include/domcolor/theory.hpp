#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "domcolor/families.hpp"
#include "domcolor/graph.hpp"
#include "domcolor/solvers.hpp"

namespace domcolor {

/// The family has no closed form, or its parameters fall outside the
/// hypothesis under which the closed form is stated.
class FormulaNotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Closed-form domination chromatic number of a family instance.
///
///   path(n)              2*floor(n/3) + n mod 3
///   cycle(n)             2 for n = 4, 3 for n in {3, 5}, else the path value
///   complete(n)          n
///   multipartite(parts)  number of parts
///   star                 2
///   bistar(p, q)         4
///   wheel(n)             3 for even n, 4 for odd n
///   petersen             5
///   kn-leaves(n, m hubs) n, only when m <= floor(n/2)
///   c3-leaves            3
int formula_chi_dd(const FamilySpec& spec);

/// One evaluated relation `lhs <relation> rhs` of the bounds report.
struct BoundRecord {
    std::string name;
    std::string relation;  // "<=" or "=="
    double lhs = 0;
    double rhs = 0;
    bool holds = true;
    bool applicable = true;
};

struct BoundsReport {
    InvariantReport invariants;
    std::vector<BoundRecord> records;

    /// Every applicable record holds.
    bool consistent() const;
};

/// Evaluates the inequality chain on precomputed invariants.
///
/// Records: chi_dd_at_least_two, chi_dd_at_most_order, chain_lower
/// (max(chi, gamma) <= max(chi_d, chi_dom)), chain_middle (<= chi_dd),
/// chain_upper (chi_dd <= chi * gamma), order_over_max_degree
/// (n / Delta <= chi_dd), triangle_free_two_gamma (chi_dd <= 2 gamma,
/// triangle-free graphs only), planar_four_gamma (chi_dd <= 4 gamma, only when
/// the caller asserts planarity) and universal_vertex_equality (chi_dd == chi,
/// only when gamma = 1).
std::vector<BoundRecord> evaluate_bounds(const Graph& g, const InvariantReport& inv,
                                         bool assert_planar);

BoundsReport bounds_report(const Graph& g, bool assert_planar, const SolveOptions& opts = {});

/// G plus a vertex n adjacent to every vertex of G. G must have no isolated
/// vertex.
Graph add_universal_vertex(const Graph& g);

struct ReductionCheck {
    int k = 0;
    bool colorable = false;              // chi(G) <= k
    bool extension_colorable = false;    // chi_dd(G') <= k + 1
    bool holds() const { return colorable == extension_colorable; }
};

/// Compares k-colourability of G with (k+1)-domination-colourability of
/// add_universal_vertex(G). Requires a connected G with 2 <= n <= 8.
ReductionCheck check_reduction(const Graph& g, int k, const SolveOptions& opts = {});
bool check_reduction_equivalence(const Graph& g, int k, const SolveOptions& opts = {});

/// Solver-side truth value next to the structural one.
struct CharacterizationResult {
    bool by_value = false;
    bool by_structure = false;
    bool agree() const { return by_value == by_structure; }
    bool value() const { return by_value; }
};

/// [chi_dd = 2] against [G is complete bipartite].
CharacterizationResult characterize_chi_dd_2(const Graph& g, const SolveOptions& opts = {});
/// [chi_dd = n] against [G is complete].
CharacterizationResult characterize_chi_dd_n(const Graph& g, const SolveOptions& opts = {});

/// Vertices of the unique cycle of a connected unicyclic graph.
VertexSet unicyclic_cycle(const Graph& g);

/// Membership in {C3, C4, C5, C3 with any number of leaves at one vertex},
/// decided from the cycle and the attachment pattern. Throws
/// std::invalid_argument unless g is connected and unicyclic.
bool in_unicyclic_equality_family(const Graph& g);

/// [chi_dd = chi] against family membership for a connected unicyclic graph.
CharacterizationResult check_unicyclic_characterization(const Graph& g,
                                                         const SolveOptions& opts = {});

/// Leaf-hub probe beyond floor(n/2) hubs: chi_dd of K_n with one leaf at each
/// of hubs 0..m-1. Exploratory; nothing is asserted about the values.
struct LeafHubObservation {
    int n = 0;
    int hubs = 0;
    int chi_dd = 0;
    bool exceeds_n() const { return chi_dd > n; }
};
std::vector<LeafHubObservation> probe_leaf_hubs(int n_max, const SolveOptions& opts = {});

}  // namespace domcolor
